#pragma once

#include <vector>

#include "weylab/curve.hpp"
#include "weylab/errors.hpp"
#include "weylab/funcalg.hpp"
#include "weylab/qsolve.hpp"
#include "weylab/rank2.hpp"
#include "weylab/weyl.hpp"

namespace weylab {

// (D^2 + a3 x^3 + a2 x^2 + a1 x + a0)^2 + 2 a3 x
inline SelfAdjointPair dixmier_pair(const Rat& a3, const Rat& a2, const Rat& a1,
                                    const Rat& a0) {
  if (a3 == 0) throw ZeroLeading("dixmier: a3 = 0");
  Poly<Rat> V(std::vector<Rat>{a0, a1, a2, a3});
  Poly<Rat> W = Poly<Rat>::monomial(Rat(2) * a3, 1);
  return build_L4(std::move(V), std::move(W));
}

// same V, W = g(g+1) a3 x; coincides with the Dixmier pair at g = 1
inline SelfAdjointPair sharp_pair(int g, const Rat& a3, const Rat& a2, const Rat& a1,
                                  const Rat& a0) {
  if (g < 1) throw Error("sharp: g must be >= 1");
  if (a3 == 0) throw ZeroLeading("sharp: a3 = 0");
  Poly<Rat> V(std::vector<Rat>{a0, a1, a2, a3});
  Poly<Rat> W = Poly<Rat>::monomial(Rat(g) * Rat(g + 1) * a3, 1);
  return build_L4(std::move(V), std::move(W));
}

// ((1 - y^2) D^2 - 3y D + a T_r(y) + b)^2 - a r^2 g(g+1) T_r(y), in variable y
inline WeylOp<Rat> mokhov_L4(int g, int r, const Rat& a, const Rat& b) {
  if (g < 1) throw Error("mokhov: g must be >= 1");
  if (r == 0) throw Error("mokhov: r must be nonzero");
  if (a == 0) throw ZeroA("mokhov: a = 0");
  r = r < 0 ? -r : r;
  const Poly<Rat> T = chebyshev<Rat>(r);
  std::vector<Poly<Rat>> bc(3);
  bc[0] = a * T + Poly<Rat>::constant(b);
  bc[1] = Poly<Rat>::monomial(Rat(-3), 1);
  bc[2] = Poly<Rat>(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
  const WeylOp<Rat> B{std::move(bc)};
  const Rat s = a * Rat(r) * Rat(r) * Rat(g) * Rat(g + 1);
  return B * B - WeylOp<Rat>::constant(s * T);
}

// The cosh-form curve parameters (alpha0, alpha1) map to the y-form
// constructor as (a, b) = (alpha1, alpha0 - 1): the change of variables
// carries a gauge conjugation that shifts the constant term by 1. The
// identification is pinned by the curve-agreement oracle, not assumed.
inline WeylOp<Rat> mokhov_from_curve_params(int g, int r, const Rat& alpha0,
                                            const Rat& alpha1) {
  return mokhov_L4(g, r, alpha1, alpha0 - 1);
}

// x -> -D, D -> x; sends the y-form family to operators of order 2r
inline WeylOp<Rat> rank_transform(const WeylOp<Rat>& L) {
  return apply_homomorphism(-WeylOp<Rat>::d(), WeylOp<Rat>::x(), L);
}

// Genus-g curve of the cosh family with V = alpha1*c - alpha0 and
// W = g(g+1)*alpha1*c, c = cosh x. Computed by solving the linear ODE for Q
// in the cosh function algebra and reading the curve off the quadratic
// identity; the printed recurrence form of the source is too garbled to
// transcribe, so this derivation route is validated against the two printed
// example curves instead (see the module tests).
inline SpectralCurve lemma1_curve(int g, const Rat& alpha0, const Rat& alpha1) {
  if (g < 1) throw Error("lemma1_curve: g must be >= 1");
  if (alpha1 == 0) throw RecurrenceDegenerate("lemma1_curve: alpha1 = 0");
  CoshFunc V{Poly<Rat>(std::vector<Rat>{-alpha0, alpha1}), Poly<Rat>()};
  CoshFunc W{Poly<Rat>::monomial(Rat(g) * Rat(g + 1) * alpha1, 1), Poly<Rat>()};
  std::vector<std::vector<CoshFunc>> basis(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i)
    for (int s = 0; s <= g - i; ++s)
      basis[static_cast<std::size_t>(i)].push_back(CoshFunc::c_pow(Rat(1), s));
  QSolveOutcome<CoshFunc> out = solve_q_generic(V, W, g, basis);
  std::vector<Rat> c(static_cast<std::size_t>(2 * g + 1));
  for (int k = 0; k <= 2 * g; ++k)
    c[static_cast<std::size_t>(k)] = out.curve4[static_cast<std::size_t>(k)] / 4;
  return SpectralCurve(g, std::move(c));
}

}  // namespace weylab
