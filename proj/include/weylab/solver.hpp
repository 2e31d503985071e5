#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "weylab/commutant.hpp"
#include "weylab/curve.hpp"
#include "weylab/errors.hpp"
#include "weylab/rank2.hpp"

namespace weylab {

// The coefficient system of the genus-1 residual in the unknowns
// (alpha_0..alpha_{m+2}, beta_0..beta_m): 3m+1 equations, 2m+4 unknowns.
struct VWSystem {
  int m = 1;
  SpectralCurve curve;

  int num_equations() const { return 3 * m + 1; }
  int num_unknowns() const { return 2 * m + 4; }
};

inline VWSystem assemble_system(int m, const SpectralCurve& curve) {
  if (m < 1) throw Error("assemble_system: m must be >= 1");
  if (curve.genus != 1) throw Error("assemble_system: genus must be 1");
  return {m, curve};
}

// quadratic-form tables of the homogeneous top part
inline long long table_B(int k, int i) { return static_cast<long long>(k + 1) * (i - k + 1); }
inline long long table_C(int k, int /*i*/) { return static_cast<long long>(k + 1) * (k + 2); }

// forced ratio alpha_{m+2} / beta_m = 3 / (2 B_{m-1,2m} + 4 C_{m-2,2m})
inline Rat leading_law(int m) {
  if (m < 1) throw Error("leading_law: m must be >= 1");
  return Rat(3, 2 * table_B(m - 1, 2 * m) + 4 * table_C(m - 2, 2 * m));
}

// leading forms of the top 2m+1 equations: 4 V W_xx + 2 V_x W_x - 3 W^2
template <typename K>
Poly<K> top_quadratic(const Poly<K>& V, const Poly<K>& W) {
  return K(4) * (V * W.derive(2)) + K(2) * (V.derive() * W.derive()) - K(3) * (W * W);
}

namespace detail {

inline Poly<double> poly_from(const std::vector<double>& v, std::size_t off, std::size_t n) {
  std::vector<double> c(v.begin() + static_cast<std::ptrdiff_t>(off),
                        v.begin() + static_cast<std::ptrdiff_t>(off + n));
  return Poly<double>(std::move(c));
}

}  // namespace detail

inline Eigen::VectorXd system_residual(const VWSystem& sys, const std::vector<double>& u) {
  const int m = sys.m;
  const Poly<double> V = detail::poly_from(u, 0, static_cast<std::size_t>(m) + 3);
  const Poly<double> W = detail::poly_from(u, static_cast<std::size_t>(m) + 3,
                                           static_cast<std::size_t>(m) + 1);
  const Poly<double> R = eq11_residual_vw(V, W, to_double(sys.curve.c[2]),
                                          to_double(sys.curve.c[1]), to_double(sys.curve.c[0]));
  Eigen::VectorXd r(sys.num_equations());
  for (int k = 0; k <= 3 * m; ++k) r[k] = R.coeff(k);
  return r;
}

// analytic Jacobian from the quadratic structure of the residual
inline Eigen::MatrixXd system_jacobian(const VWSystem& sys, const std::vector<double>& u) {
  const int m = sys.m;
  const Poly<double> V = detail::poly_from(u, 0, static_cast<std::size_t>(m) + 3);
  const Poly<double> W = detail::poly_from(u, static_cast<std::size_t>(m) + 3,
                                           static_cast<std::size_t>(m) + 1);
  const double c2 = to_double(sys.curve.c[2]);
  const double c1 = to_double(sys.curve.c[1]);
  const Poly<double> Wx = W.derive();
  const Poly<double> Wxx = Wx.derive();
  const Poly<double> Wxxx = Wxx.derive();
  const Poly<double> Wx2 = Wx * Wx;
  const Poly<double> arg = (Poly<double>::constant(c2) + W) * (-0.5);
  // F1'(arg) with F1' = 3 z^2 + 2 c2 z + c1
  const Poly<double> dF = 3.0 * (arg * arg) + (2.0 * c2) * arg + Poly<double>::constant(c1);

  Eigen::MatrixXd J(sys.num_equations(), sys.num_unknowns());
  J.setZero();
  auto put = [&](int col, const Poly<double>& p) {
    for (int k = 0; k <= std::min(p.degree(), 3 * m); ++k) J(k, col) = p.coeff(k);
  };
  for (int i = 0; i <= m + 2; ++i)
    put(i, 4.0 * (Wx2 * Poly<double>::monomial(1.0, i)));
  for (int j = 0; j <= m; ++j) {
    const Poly<double> xj = Poly<double>::monomial(1.0, j);
    const Poly<double> xj1 = xj.derive();
    const Poly<double> xj2 = xj1.derive();
    const Poly<double> xj3 = xj2.derive();
    Poly<double> col = 8.0 * (Wx * xj1 * V) - 8.0 * (dF * xj) - 2.0 * (Wxx * xj2) +
                       2.0 * (xj1 * Wxxx + Wx * xj3);
    put(m + 3 + j, col);
  }
  return J;
}

struct SolveReport {
  std::string status = "diverged";  // accepted | diverged | singular
  int m = 1;
  std::vector<double> candidate;    // alpha_0..alpha_{m+2}, beta_0..beta_m
  double residual = 0;
  int iterations = 0;
  int start_index = -1;
  double leading_law_error = 0;
  // verification stage
  bool verified = false;
  bool rationalized = false;
  std::vector<Rat> exact_candidate;
  double float_comm_norm = -1;      // filled when rationalization fails
  std::optional<SpectralCurve> curve_echo;
};

inline double law_error(const VWSystem& sys, const std::vector<double>& u) {
  const double law = to_double(leading_law(sys.m));
  const double alpha_lead = u[static_cast<std::size_t>(sys.m) + 2];
  const double beta_lead = u.back();
  return std::fabs(alpha_lead - law * beta_lead) / std::max(1.0, std::fabs(beta_lead));
}

// damped Newton with least-squares steps; deterministic in (start, tol, maxit)
inline SolveReport newton_solve(const VWSystem& sys, const std::vector<double>& start,
                                double tol = 1e-12, int maxit = 100) {
  if (static_cast<int>(start.size()) != sys.num_unknowns())
    throw Error("newton_solve: wrong start dimension");
  SolveReport rep;
  rep.m = sys.m;
  std::vector<double> u = start;
  Eigen::VectorXd r = system_residual(sys, u);
  double rn = r.lpNorm<Eigen::Infinity>();
  int it = 0;
  for (; it < maxit && rn >= tol; ++it) {
    const Eigen::MatrixXd J = system_jacobian(sys, u);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(J);
    if (qr.rank() == 0) {
      rep.status = "singular";
      break;
    }
    const Eigen::VectorXd du = qr.solve(-r);
    double lam = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt, lam *= 0.5) {
      std::vector<double> un = u;
      for (int i = 0; i < sys.num_unknowns(); ++i) un[static_cast<std::size_t>(i)] += lam * du[i];
      const Eigen::VectorXd r2 = system_residual(sys, un);
      const double rn2 = r2.lpNorm<Eigen::Infinity>();
      if (rn2 < rn * (1.0 - 0.25 * lam) || rn2 < tol) {
        u = std::move(un);
        r = r2;
        rn = rn2;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  rep.candidate = u;
  rep.residual = rn;
  rep.iterations = it;
  rep.leading_law_error = law_error(sys, u);
  if (rn < tol) rep.status = "accepted";
  return rep;
}

// starts sampled around the forced leading point, lower coordinates Gaussian
inline SolveReport multi_start_solve(const VWSystem& sys, std::uint64_t seed, int starts,
                                     double tol = 1e-11, int maxit = 100) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double law = to_double(leading_law(sys.m));
  SolveReport best;
  best.m = sys.m;
  best.residual = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    std::vector<double> u0(static_cast<std::size_t>(sys.num_unknowns()));
    for (auto& v : u0) v = gauss(rng);
    u0[static_cast<std::size_t>(sys.m) + 2] = law + 0.3 * gauss(rng);
    u0.back() = 1.0 + 0.3 * gauss(rng);
    SolveReport rep = newton_solve(sys, u0, tol, maxit);
    rep.start_index = s;
    const double alead = std::fabs(rep.candidate[static_cast<std::size_t>(sys.m) + 2]);
    const double blead = std::fabs(rep.candidate.back());
    if (rep.status == "accepted" && alead > 1e-6 && blead > 1e-6 &&
        rep.leading_law_error <= 1e-8)
      return rep;
    if (rep.residual < best.residual) best = rep;
  }
  if (best.status == "accepted") best.status = "diverged";  // degenerate leading coefficients
  return best;
}

namespace detail {

inline double op_fro_norm(const WeylOp<double>& a) {
  double s = 0;
  for (int j = 0; j <= a.order(); ++j)
    for (int i = 0; i <= a.coeff(j).degree(); ++i) {
      const double v = a.coeff(j).coeff(i);
      s += v * v;
    }
  return std::sqrt(s);
}

// Relative commutator norm of the best order-6 float partner: build the
// linear map M -> [L4, M] on the (order <= 6, deg <= 14) ansatz and take the
// third-smallest singular value (the kernel already holds 1 and L4).
inline double float_partner_comm_norm(const Poly<double>& V, const Poly<double>& W) {
  const WeylOp<double> L4 = build_L4_op(V, W);
  // (D^2+V)^3 contributes coefficient degree 3 deg V to the true partner
  const int ord = 6, deg = std::max(14, 3 * std::max(0, V.degree()) + 4);
  int maxord = 0, maxdeg = 0;
  std::vector<WeylOp<double>> cols;
  for (int j = 0; j <= ord; ++j)
    for (int i = 0; i <= deg; ++i) {
      WeylOp<double> E = WeylOp<double>::term(Poly<double>::monomial(1.0, i), j);
      WeylOp<double> C = commutator(L4, E);
      maxord = std::max(maxord, C.order());
      for (int k = 0; k <= C.order(); ++k) maxdeg = std::max(maxdeg, C.coeff(k).degree());
      cols.push_back(std::move(C));
    }
  Eigen::MatrixXd A(static_cast<Eigen::Index>(maxord + 1) * (maxdeg + 1),
                    static_cast<Eigen::Index>(cols.size()));
  A.setZero();
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int j = 0; j <= cols[c].order(); ++j)
      for (int i = 0; i <= cols[c].coeff(j).degree(); ++i)
        A(static_cast<Eigen::Index>(j) * (maxdeg + 1) + i, static_cast<Eigen::Index>(c)) =
            cols[c].coeff(j).coeff(i);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const auto& S = svd.singularValues();
  const double sigma3 = S[S.size() - 3];
  return sigma3 / op_fro_norm(L4);
}

}  // namespace detail

// Rationalize the candidate (continued fractions, denominator cap 1e6) and
// re-verify exactly: zero residual, a commuting partner, and curve agreement.
// When rationalization or the exact check fails, float-only evidence is
// attached instead; floats are never trusted as final answers.
inline SolveReport verify_candidate(SolveReport rep, const VWSystem& sys,
                                    std::uint64_t denominator_cap = 1000000) {
  rep.verified = false;
  if (rep.candidate.empty()) return rep;
  if (rep.leading_law_error > 1e-8) return rep;  // necessary condition, skip the rest

  std::vector<Rat> exact;
  exact.reserve(rep.candidate.size());
  bool ok = true;
  for (double v : rep.candidate) {
    auto r = rationalize(v, denominator_cap);
    if (!r) { ok = false; break; }
    exact.push_back(*r);
  }
  if (ok) {
    std::vector<Rat> av(exact.begin(), exact.begin() + sys.m + 3);
    std::vector<Rat> bv(exact.begin() + sys.m + 3, exact.end());
    const SelfAdjointPair p = build_L4(Poly<Rat>(av), Poly<Rat>(bv));
    if (eq11_residual(p, sys.curve).is_zero()) {
      try {
        const WeylOp<Rat> M = find_partner(p.L4, 6, default_partner_bound(p.L4));
        const BCResult bc = bc_curve(p.L4, M, 1);
        if (bc.curve == sys.curve) {
          rep.verified = true;
          rep.rationalized = true;
          rep.exact_candidate = std::move(exact);
          rep.curve_echo = bc.curve;
          return rep;
        }
      } catch (const Error&) {
        // fall through to float evidence
      }
    }
  }
  const Poly<double> V = detail::poly_from(rep.candidate, 0, static_cast<std::size_t>(sys.m) + 3);
  const Poly<double> W = detail::poly_from(rep.candidate, static_cast<std::size_t>(sys.m) + 3,
                                           static_cast<std::size_t>(sys.m) + 1);
  rep.float_comm_norm = detail::float_partner_comm_norm(V, W);
  rep.curve_echo = sys.curve;
  return rep;
}

// m = 1 closed form in the translation gauge beta_0 = 0: W = b1 x and
// V = -4 F_1(-(c2 + W)/2) / b1^2 solves the residual identically.
inline SelfAdjointPair solve_m1_exact(const SpectralCurve& curve, const Rat& b1 = Rat(2)) {
  if (curve.genus != 1) throw Error("solve_m1_exact: genus must be 1");
  if (b1 == 0) throw Error("solve_m1_exact: b1 must be nonzero");
  const Poly<Rat> W = Poly<Rat>::monomial(b1, 1);
  const Poly<Rat> arg =
      (Poly<Rat>::constant(curve.c[2]) + W) * Rat(-1, 2);
  const Poly<Rat> F = curve.f().compose(arg);
  const Poly<Rat> V = F * (Rat(-4) / (b1 * b1));
  SelfAdjointPair p = build_L4(V, W);
  if (!eq11_residual(p, curve).is_zero()) throw Error("solve_m1_exact: residual not zero");
  return p;
}

}  // namespace weylab
