#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weylab/errors.hpp"
#include "weylab/poly.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

// w^2 = F_g(z) = z^(2g+1) + c_{2g} z^{2g} + ... + c_0, monic odd hyperelliptic
struct SpectralCurve {
  int genus = 1;
  std::vector<Rat> c;  // c_0 ... c_{2g}

  SpectralCurve() : c(3, Rat(0)) {}
  SpectralCurve(int g, std::vector<Rat> coeffs) : genus(g), c(std::move(coeffs)) {
    if (genus < 1 || c.size() != static_cast<std::size_t>(2 * genus + 1))
      throw Error("spectral curve needs exactly 2g+1 coefficients");
  }

  Poly<Rat> f() const {
    std::vector<Rat> v = c;
    v.push_back(Rat(1));
    return Poly<Rat>(std::move(v));
  }

  bool operator==(const SpectralCurve& o) const { return genus == o.genus && c == o.c; }
  bool operator!=(const SpectralCurve& o) const { return !(*this == o); }
};

inline bool curve_is_squarefree(const SpectralCurve& curve) {
  const Poly<Rat> F = curve.f();
  return poly_gcd(F, F.derive()).degree() == 0;
}

inline nlohmann::json curve_to_json(const SpectralCurve& curve) {
  nlohmann::json j;
  j["genus"] = curve.genus;
  std::vector<std::string> cs;
  cs.reserve(curve.c.size());
  for (const Rat& v : curve.c) cs.push_back(v.str());
  j["f_coeffs"] = cs;
  return j;
}

inline SpectralCurve curve_from_json(const nlohmann::json& j) {
  const int g = j.at("genus").get<int>();
  std::vector<Rat> c;
  for (const auto& s : j.at("f_coeffs")) c.push_back(parse_rational(s.get<std::string>()));
  return SpectralCurve(g, std::move(c));
}

}  // namespace weylab
