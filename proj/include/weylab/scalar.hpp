#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace weylab {

// Exact backend: arbitrary-precision rationals, always reduced, positive
// denominator (maintained by boost). Float backend: plain double. The two
// never mix inside one expression; templates make that a compile error.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rat& r) { return r.str(); }

// Parses "p" or "p/q" in base 10.
inline Rat parse_rational(const std::string& text) {
  try {
    return Rat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  Int sn = boost::multiprecision::sqrt(n);
  Int sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

// Best rational approximation of x with denominator <= cap, by continued
// fractions. Returns nullopt for non-finite input.
inline std::optional<Rat> rationalize(double x, std::uint64_t denominator_cap = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  bool neg = x < 0;
  double v = std::fabs(x);
  // convergents p/q of the continued fraction of v
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double t = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(t);
    if (fl > 9e18) break;
    Int a = static_cast<std::uint64_t>(fl);
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > denominator_cap) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = t - fl;
    if (frac < 1e-18) break;
    t = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  Rat r(p1, q1);
  return neg ? -r : r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace weylab
