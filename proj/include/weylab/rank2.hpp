#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylab/curve.hpp"
#include "weylab/errors.hpp"
#include "weylab/funcalg.hpp"
#include "weylab/poly.hpp"
#include "weylab/qsolve.hpp"
#include "weylab/weyl.hpp"

namespace weylab {

// (D^2 + V)^2 + W, expanded: D^4 + 2V D^2 + 2V' D + (V'' + V^2 + W)
template <typename K>
WeylOp<K> build_L4_op(const Poly<K>& V, const Poly<K>& W) {
  WeylOp<K> B = WeylOp<K>::term(Poly<K>::constant(K(1)), 2) + WeylOp<K>::constant(V);
  return B * B + WeylOp<K>::constant(W);
}

struct SelfAdjointPair {
  Poly<Rat> V, W;
  WeylOp<Rat> L4;
};

inline SelfAdjointPair build_L4(Poly<Rat> V, Poly<Rat> W) {
  WeylOp<Rat> L = build_L4_op(V, W);
  return {std::move(V), std::move(W), std::move(L)};
}

// Genus-1 residual 4 W_x^2 V + 16 F_1(-(c2 + W)/2) - W_xx^2 + 2 W_x W_xxx.
// The argument sign on c2 is fixed once by the Dixmier bc_curve oracle
// (the source formulas disagree among themselves); zero iff (V, W) realizes
// the curve. Shared by the exact and float backends.
template <typename K>
Poly<K> eq11_residual_vw(const Poly<K>& V, const Poly<K>& W, const K& c2, const K& c1,
                         const K& c0) {
  const Poly<K> Wx = W.derive();
  const Poly<K> Wxx = Wx.derive();
  const Poly<K> Wxxx = Wxx.derive();
  const Poly<K> arg = (Poly<K>::constant(c2) + W) * (K(-1) / K(2));
  const Poly<K> arg2 = arg * arg;
  const Poly<K> F = arg2 * arg + Poly<K>::constant(c2) * arg2 + Poly<K>::constant(c1) * arg +
                    Poly<K>::constant(c0);
  return K(4) * (Wx * Wx * V) + K(16) * F - Wxx * Wxx + K(2) * (Wx * Wxxx);
}

inline Poly<Rat> eq11_residual(const SelfAdjointPair& p, const SpectralCurve& curve) {
  if (curve.genus != 1) throw Error("eq11_residual: genus must be 1");
  return eq11_residual_vw(p.V, p.W, curve.c[2], curve.c[1], curve.c[0]);
}

// V = (-16 F_1(-(c2 + W)/2) + W_xx^2 - 2 W_x W_xxx) / (4 W_x^2), exact division
inline Poly<Rat> genus1_V_from_W(const Poly<Rat>& W, const SpectralCurve& curve) {
  if (curve.genus != 1) throw Error("genus1_V_from_W: genus must be 1");
  const Poly<Rat> Wx = W.derive();
  if (Wx.is_zero()) throw DegenerateW("W_x = 0");
  const Poly<Rat> num =
      -eq11_residual_vw(Poly<Rat>(), W, curve.c[2], curve.c[1], curve.c[0]);
  const Poly<Rat> den = Rat(4) * (Wx * Wx);
  auto [q, r] = num.divmod(den);
  if (!r.is_zero()) throw NonPolynomialV("division leaves a remainder");
  return q;
}

// Q = z^g + a_{g-1}(x) z^{g-1} + ... + a_0(x)
struct QPoly {
  int g = 1;
  std::vector<Poly<Rat>> a;  // a_0 ... a_{g-1}
  int free_params = 0;       // leftover constants, fixed to 0 and reported

  ZPoly<PolyFunc> to_zpoly() const {
    ZPoly<PolyFunc> Q(static_cast<std::size_t>(g) + 1);
    for (int i = 0; i < g; ++i) Q[static_cast<std::size_t>(i)] = {a[static_cast<std::size_t>(i)]};
    Q[static_cast<std::size_t>(g)] = PolyFunc::one();
    return Q;
  }
};

using BiPolyZ = std::vector<Poly<Rat>>;  // indexed by z power

inline BiPolyZ from_zpoly(const ZPoly<PolyFunc>& Z) {
  BiPolyZ r;
  r.reserve(Z.size());
  for (const auto& f : Z) r.push_back(f.p);
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

inline std::string bipoly_to_string(const BiPolyZ& b) {
  if (b.empty()) return "0";
  std::string out;
  for (std::size_t k = b.size(); k-- > 0;) {
    if (b[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += "(" + poly_to_string(b[k]) + ")";
    } else {
      out += "(" + poly_to_string(b[k]) + ")*z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string qpoly_to_string(const QPoly& q) {
  std::string out = q.g == 1 ? "z" : "z^" + std::to_string(q.g);
  for (int i = q.g - 1; i >= 0; --i) {
    const Poly<Rat>& a = q.a[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    out += " + (" + poly_to_string(a) + ")";
    if (i >= 1) out += "*z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// Eq8 residual of a given Q (linear ODE left side), as a bivariate polynomial
inline BiPolyZ eq8_residual(const SelfAdjointPair& p, const QPoly& q) {
  return from_zpoly(eq8_apply(PolyFunc{p.V}, PolyFunc{p.W}, q.to_zpoly()));
}

// right side of the curve identity minus 4 F_g(z)
inline BiPolyZ eq7_residual(const SelfAdjointPair& p, const QPoly& q,
                            const SpectralCurve& curve) {
  if (curve.genus != q.g) throw Error("eq7_residual: genus mismatch");
  ZPoly<PolyFunc> R = eq7_apply(PolyFunc{p.V}, PolyFunc{p.W}, q.to_zpoly());
  BiPolyZ out = from_zpoly(R);
  const Poly<Rat> F = curve.f();
  if (out.size() < static_cast<std::size_t>(2 * q.g + 2))
    out.resize(static_cast<std::size_t>(2 * q.g + 2));
  for (int k = 0; k <= 2 * q.g + 1; ++k)
    out[static_cast<std::size_t>(k)] -= Poly<Rat>::constant(Rat(4) * F.coeff(k));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

inline int default_q_xdeg_bound(const SelfAdjointPair& p, int g) {
  const int dw = p.W.degree() < 0 ? 0 : p.W.degree();
  const int dv = p.V.degree() < 0 ? 0 : p.V.degree();
  return g * dw + dv + 2;
}

inline std::pair<QPoly, SpectralCurve> solve_Q(const SelfAdjointPair& p, int g,
                                               int xdeg_bound) {
  std::vector<std::vector<PolyFunc>> basis(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i)
    for (int s = 0; s <= xdeg_bound; ++s)
      basis[static_cast<std::size_t>(i)].push_back({Poly<Rat>::monomial(Rat(1), s)});
  QSolveOutcome<PolyFunc> out = solve_q_generic(PolyFunc{p.V}, PolyFunc{p.W}, g, basis);

  QPoly q;
  q.g = g;
  q.free_params = out.free_params;
  for (int i = 0; i < g; ++i) q.a.push_back(out.Q[static_cast<std::size_t>(i)].p);

  std::vector<Rat> c(static_cast<std::size_t>(2 * g + 1));
  for (int k = 0; k <= 2 * g; ++k) c[static_cast<std::size_t>(k)] = out.curve4[static_cast<std::size_t>(k)] / 4;
  return {std::move(q), SpectralCurve(g, std::move(c))};
}

// retries with xdeg_bound + 2 up to a cap; no ansatz bound is known a priori
inline std::pair<QPoly, SpectralCurve> solve_Q_auto(const SelfAdjointPair& p, int g,
                                                    int extra_cap = 10) {
  const int b0 = default_q_xdeg_bound(p, g);
  for (int b = b0; b <= b0 + extra_cap; b += 2) {
    try {
      return solve_Q(p, g, b);
    } catch (const NoQ&) {
      if (b + 2 > b0 + extra_cap) throw;
    }
  }
  throw NoQ("no admissible Q up to the escalation cap");
}

}  // namespace weylab
