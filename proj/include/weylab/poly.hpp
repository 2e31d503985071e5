#pragma once

#include <algorithm>
#include <cassert>
#include <climits>
#include <sstream>
#include <utility>
#include <vector>

#include "weylab/errors.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

// degree(0) sentinel, below every attainable degree
inline constexpr int kDegZero = INT_MIN;

// Dense univariate polynomial over K (K = Rat exact or double float).
// Invariant: leading coefficient nonzero, or empty vector (the zero poly).
template <typename K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
  static Poly monomial(K v, int k) {
    assert(k >= 0);
    std::vector<K> c(static_cast<std::size_t>(k) + 1, K(0));
    c.back() = std::move(v);
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(K(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegZero : static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k)];
  }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }

  bool is_constant() const { return c_.size() <= 1; }

  Poly operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Poly operator+(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly operator*(const K& s) const {
    Poly r(*this);
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derive(int k = 1) const {
    assert(k >= 0);
    Poly r(*this);
    for (int t = 0; t < k; ++t) {
      if (r.c_.size() <= 1) return Poly();
      std::vector<K> d(r.c_.size() - 1);
      for (std::size_t i = 1; i < r.c_.size(); ++i) d[i - 1] = r.c_[i] * K(static_cast<int>(i));
      r = Poly(std::move(d));
    }
    return r;
  }

  K eval(const K& v) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  // Horner substitution outer(inner)
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  // quotient/remainder; K must be a field
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    Poly rem(*this);
    std::vector<K> q;
    int dd = d.degree();
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, K(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
      int k = rem.degree() - dd;
      K f = rem.leading() / d.leading();
      q[static_cast<std::size_t>(k)] = f;
      rem -= d * monomial(f, k);
    }
    return {Poly(std::move(q)), rem};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r(*this);
    K inv = K(1) / leading();
    for (auto& v : r.c_) v = v * inv;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

template <typename K>
Poly<K> operator*(const K& s, const Poly<K>& p) { return p * s; }

template <typename K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Chebyshev T_|r| of the first kind via the three-term recurrence.
template <typename K>
Poly<K> chebyshev(int r) {
  r = r < 0 ? -r : r;
  Poly<K> t0 = Poly<K>::constant(K(1));
  if (r == 0) return t0;
  Poly<K> t1 = Poly<K>::x();
  for (int i = 2; i <= r; ++i) {
    Poly<K> t2 = K(2) * Poly<K>::x() * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

namespace detail {
inline std::string scalar_str(const Rat& v) { return v.str(); }
inline std::string scalar_str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
}  // namespace detail

// decreasing powers, e.g. "3*x^2 - 1/2"
template <typename K>
std::string poly_to_string(const Poly<K>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    K c = p.coeff(k);
    if (c == K(0)) continue;
    bool neg = c < K(0);
    K mag = neg ? K(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == K(1));
    if (k == 0) {
      out += detail::scalar_str(mag);
    } else {
      if (!unit) out += detail::scalar_str(mag) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace weylab
