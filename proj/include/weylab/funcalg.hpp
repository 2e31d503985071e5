#pragma once

#include <vector>

#include "weylab/poly.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

// Function algebras the Q-solver runs over. Both expose the same surface:
// ring ops, d/dx, and flattening onto a rational coordinate grid.

// plain polynomials in x
struct PolyFunc {
  static constexpr int kComponents = 1;
  Poly<Rat> p;

  static PolyFunc one() { return {Poly<Rat>::constant(Rat(1))}; }
  bool is_zero() const { return p.is_zero(); }
  PolyFunc operator+(const PolyFunc& o) const { return {p + o.p}; }
  PolyFunc operator-(const PolyFunc& o) const { return {p - o.p}; }
  PolyFunc operator*(const PolyFunc& o) const { return {p * o.p}; }
  PolyFunc scale(const Rat& s) const { return {p * s}; }
  PolyFunc derive() const { return {p.derive()}; }

  int len() const { return p.degree() + 1; }
  void flatten(int cap, std::vector<Rat>& out) const {
    for (int k = 0; k < cap; ++k) out.push_back(p.coeff(k));
  }
  bool is_constant() const { return p.is_constant(); }
  Rat constant_part() const { return p.coeff(0); }
};

// P(c) + s*R(c) with s^2 = c^2 - 1, c = cosh x, s = sinh x;
// d/dx maps (P, R) to (c R + (c^2 - 1) R', P')
struct CoshFunc {
  static constexpr int kComponents = 2;
  Poly<Rat> P, R;

  static CoshFunc one() { return {Poly<Rat>::constant(Rat(1)), Poly<Rat>()}; }
  static CoshFunc c_pow(const Rat& v, int s) { return {Poly<Rat>::monomial(v, s), Poly<Rat>()}; }
  bool is_zero() const { return P.is_zero() && R.is_zero(); }
  CoshFunc operator+(const CoshFunc& o) const { return {P + o.P, R + o.R}; }
  CoshFunc operator-(const CoshFunc& o) const { return {P - o.P, R - o.R}; }
  CoshFunc operator*(const CoshFunc& o) const {
    static const Poly<Rat> s2 = Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    return {P * o.P + s2 * (R * o.R), P * o.R + R * o.P};
  }
  CoshFunc scale(const Rat& s) const { return {P * s, R * s}; }
  CoshFunc derive() const {
    static const Poly<Rat> s2 = Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    return {Poly<Rat>::x() * R + s2 * R.derive(), P.derive()};
  }

  int len() const { return std::max(P.degree(), R.degree()) + 1; }
  void flatten(int cap, std::vector<Rat>& out) const {
    for (int k = 0; k < cap; ++k) out.push_back(P.coeff(k));
    for (int k = 0; k < cap; ++k) out.push_back(R.coeff(k));
  }
  bool is_constant() const { return P.is_constant() && R.is_zero(); }
  Rat constant_part() const { return P.coeff(0); }
};

}  // namespace weylab
