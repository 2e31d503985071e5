#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "weylab/errors.hpp"
#include "weylab/poly.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

// Normal-form element sum_j u_j(x) D^j of the first Weyl algebra: all x
// factors to the left of all D factors. Invariant: leading coefficient
// nonzero or the sequence is empty (zero operator).
template <typename K>
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(std::vector<Poly<K>> coeffs) : u_(std::move(coeffs)) { trim(); }
  static WeylOp zero() { return WeylOp(); }
  static WeylOp one() { return constant(Poly<K>::constant(K(1))); }
  static WeylOp constant(Poly<K> p) {
    if (p.is_zero()) return WeylOp();
    return WeylOp(std::vector<Poly<K>>{std::move(p)});
  }
  static WeylOp x() { return constant(Poly<K>::x()); }
  // p(x) * D^j
  static WeylOp term(Poly<K> p, int j) {
    assert(j >= 0);
    if (p.is_zero()) return WeylOp();
    std::vector<Poly<K>> u(static_cast<std::size_t>(j) + 1);
    u.back() = std::move(p);
    return WeylOp(std::move(u));
  }
  static WeylOp d() { return term(Poly<K>::constant(K(1)), 1); }

  bool is_zero() const { return u_.empty(); }
  int order() const { return u_.empty() ? kDegZero : static_cast<int>(u_.size()) - 1; }
  const std::vector<Poly<K>>& coeffs() const { return u_; }
  Poly<K> coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(u_.size())) return Poly<K>();
    return u_[static_cast<std::size_t>(j)];
  }
  Poly<K> leading() const { return u_.empty() ? Poly<K>() : u_.back(); }

  bool operator==(const WeylOp& o) const { return u_ == o.u_; }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  WeylOp operator-() const {
    WeylOp r(*this);
    for (auto& p : r.u_) p = -p;
    return r;
  }
  WeylOp operator+(const WeylOp& o) const {
    std::vector<Poly<K>> r(std::max(u_.size(), o.u_.size()));
    for (std::size_t i = 0; i < u_.size(); ++i) r[i] += u_[i];
    for (std::size_t i = 0; i < o.u_.size(); ++i) r[i] += o.u_[i];
    return WeylOp(std::move(r));
  }
  WeylOp operator-(const WeylOp& o) const { return *this + (-o); }

  WeylOp operator*(const K& s) const {
    WeylOp r(*this);
    for (auto& p : r.u_) p = p * s;
    r.trim();
    return r;
  }

  // normal-form product via the binomial commutation rule:
  // D^i u(x) = sum_k C(i,k) u^(k)(x) D^(i-k)
  WeylOp operator*(const WeylOp& o) const {
    if (is_zero() || o.is_zero()) return WeylOp();
    std::vector<Poly<K>> r(u_.size() + o.u_.size() - 1);
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (u_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.u_.size(); ++j) {
        if (o.u_[j].is_zero()) continue;
        Poly<K> dkb = o.u_[j];
        for (std::size_t k = 0; k <= i; ++k) {
          if (k > 0) {
            dkb = dkb.derive();
            if (dkb.is_zero()) break;
          }
          const K bin = K(static_cast<long long>(binomial(static_cast<int>(i),
                                                          static_cast<int>(k))));
          r[i - k + j] += (u_[i] * dkb) * bin;
        }
      }
    }
    return WeylOp(std::move(r));
  }
  WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
  WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }
  WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!u_.empty() && u_.back().is_zero()) u_.pop_back();
  }
  std::vector<Poly<K>> u_;
};

template <typename K>
WeylOp<K> operator*(const K& s, const WeylOp<K>& a) { return a * s; }

template <typename K>
WeylOp<K> commutator(const WeylOp<K>& a, const WeylOp<K>& b) {
  return a * b - b * a;
}

template <typename K>
WeylOp<K> op_pow(const WeylOp<K>& a, int k) {
  assert(k >= 0);
  WeylOp<K> r = WeylOp<K>::one();
  WeylOp<K> base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

// sum u_j D^j -> sum (-D)^j u_j, an anti-involution
template <typename K>
WeylOp<K> formal_adjoint(const WeylOp<K>& a) {
  WeylOp<K> r;
  for (int j = 0; j <= a.order(); ++j) {
    const Poly<K> u = a.coeff(j);
    if (u.is_zero()) continue;
    const K sgn = (j % 2 == 0) ? K(1) : K(-1);
    r += sgn * (op_pow(WeylOp<K>::d(), j) * WeylOp<K>::constant(u));
  }
  return r;
}

template <typename K>
bool is_self_adjoint(const WeylOp<K>& a) { return formal_adjoint(a) == a; }

// Image of a under the ring homomorphism x -> X, D -> Dm, monomial-wise on
// the normal form. Powers of X and Dm are memoized per call since Chebyshev
// images make exponents large.
template <typename K>
WeylOp<K> apply_homomorphism(const WeylOp<K>& X, const WeylOp<K>& Dm, const WeylOp<K>& a) {
  if (commutator(Dm, X) != WeylOp<K>::one())
    throw NotEndomorphism("images do not satisfy [D, x] = 1");
  std::vector<WeylOp<K>> xp{WeylOp<K>::one()};
  std::vector<WeylOp<K>> dp{WeylOp<K>::one()};
  auto power = [](std::vector<WeylOp<K>>& cache, const WeylOp<K>& base, int k) {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k)];
  };
  WeylOp<K> r;
  for (int j = 0; j <= a.order(); ++j) {
    const Poly<K> u = a.coeff(j);
    if (u.is_zero()) continue;
    WeylOp<K> ux;
    for (int i = 0; i <= u.degree(); ++i) {
      const K c = u.coeff(i);
      if (c == K(0)) continue;
      ux += c * power(xp, X, i);
    }
    r += ux * power(dp, Dm, j);
  }
  return r;
}

// [[[L, x], x], x]; the name ad(-x)^3 in the source material differs by the
// cosmetic sign (-1)^3
template <typename K>
WeylOp<K> triple_ad_x(const WeylOp<K>& L) {
  const WeylOp<K> xo = WeylOp<K>::x();
  return commutator(commutator(commutator(L, xo), xo), xo);
}

// Canonical print: decreasing D powers, "(p_j(x))*D^j", D^0 elided.
template <typename K>
std::string op_to_string(const WeylOp<K>& a, const std::string& var = "x") {
  if (a.is_zero()) return "0";
  std::string out;
  for (int j = a.order(); j >= 0; --j) {
    const Poly<K> p = a.coeff(j);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += poly_to_string(p, var);
      continue;
    }
    if (p == Poly<K>::constant(K(1))) {
      out += "D";
    } else {
      out += "(" + poly_to_string(p, var) + ")*D";
    }
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

}  // namespace weylab
