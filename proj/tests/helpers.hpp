#pragma once

#include <random>
#include <vector>

#include "weylab/orbits.hpp"
#include "weylab/poly.hpp"
#include "weylab/weyl.hpp"

namespace weylab::testing {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int max_abs = 10) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  return Rat(num(rng), den(rng));
}

inline Poly<Rat> random_poly(Rng& rng, int maxdeg, int max_abs = 10) {
  std::uniform_int_distribution<int> degd(0, maxdeg);
  const int d = degd(rng);
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = random_rat(rng, max_abs);
  return Poly<Rat>(std::move(c));
}

inline WeylOp<Rat> random_op(Rng& rng, int maxord, int maxdeg, int max_abs = 10) {
  std::uniform_int_distribution<int> ordd(0, maxord);
  const int n = ordd(rng);
  std::vector<Poly<Rat>> u(static_cast<std::size_t>(n) + 1);
  for (auto& p : u) p = random_poly(rng, maxdeg, max_abs);
  return WeylOp<Rat>(std::move(u));
}

// nonzero variants for degree/order law checks
inline Poly<Rat> random_poly_nonzero(Rng& rng, int maxdeg, int max_abs = 10) {
  Poly<Rat> p;
  do p = random_poly(rng, maxdeg, max_abs);
  while (p.is_zero());
  return p;
}

inline WeylOp<Rat> random_op_nonzero(Rng& rng, int maxord, int maxdeg, int max_abs = 10) {
  WeylOp<Rat> a;
  do a = random_op(rng, maxord, maxdeg, max_abs);
  while (a.is_zero());
  return a;
}

// bounded tame word: <= max_gens generators, polynomial degrees <= 4,
// scalar numerators/denominators <= 10; words whose images blow past
// order_cap are resampled so exact budgets stay sane
inline AutWord random_word(Rng& rng, int max_gens = 6, int order_cap = 10) {
  std::uniform_int_distribution<int> count(0, max_gens);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    AutWord w;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      switch (kind(rng)) {
        case 0: {
          // ad - bc = 1: pick a unit a and shear entries
          const Rat b = random_rat(rng, 4);
          const Rat c = random_rat(rng, 4);
          Rat a = random_rat(rng, 4);
          if (a == 0) a = 1;
          const Rat d = (Rat(1) + b * c) / a;
          w.push_back(AutGen::g1(a, b, c, d));
          break;
        }
        case 1: w.push_back(AutGen::g2(random_poly(rng, deg(rng), 10))); break;
        default: w.push_back(AutGen::g3(random_poly(rng, deg(rng), 10))); break;
      }
    }
    auto [X, D] = images_of_word(w);
    if (X.order() + D.order() <= order_cap) return w;
  }
  return {};
}

}  // namespace weylab::testing
