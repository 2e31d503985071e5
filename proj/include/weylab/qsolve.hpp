#pragma once

#include <utility>
#include <vector>

#include "weylab/errors.hpp"
#include "weylab/linalg.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

// polynomials in z with coefficients in a function algebra F, indexed by z power
template <typename F>
using ZPoly = std::vector<F>;

namespace zp {

template <typename F>
ZPoly<F> add(const ZPoly<F>& a, const ZPoly<F>& b) {
  ZPoly<F> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <typename F>
ZPoly<F> sub(const ZPoly<F>& a, const ZPoly<F>& b) {
  ZPoly<F> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

template <typename F>
ZPoly<F> mul(const ZPoly<F>& a, const ZPoly<F>& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly<F> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

template <typename F>
ZPoly<F> scale(const ZPoly<F>& a, const Rat& s) {
  ZPoly<F> r = a;
  for (auto& v : r) v = v.scale(s);
  return r;
}

template <typename F>
ZPoly<F> mulf(const ZPoly<F>& a, const F& f) {
  ZPoly<F> r = a;
  for (auto& v : r) v = v * f;
  return r;
}

// componentwise d/dx
template <typename F>
ZPoly<F> dx(const ZPoly<F>& a, int k = 1) {
  ZPoly<F> r = a;
  for (int t = 0; t < k; ++t)
    for (auto& v : r) v = v.derive();
  return r;
}

// multiply by z
template <typename F>
ZPoly<F> shift(const ZPoly<F>& a) {
  ZPoly<F> r(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
  return r;
}

template <typename F>
bool is_zero(const ZPoly<F>& a) {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace zp

// left side of the linear ODE in Q:
// Q_xxxxx + 4V Q_xxx + 6V_x Q_xx + 2(2z - 2W + V_xx) Q_x - 2W_x Q
template <typename F>
ZPoly<F> eq8_apply(const F& V, const F& W, const ZPoly<F>& Q) {
  const ZPoly<F> Q1 = zp::dx(Q), Q2 = zp::dx(Q1), Q3 = zp::dx(Q2);
  const ZPoly<F> Q5 = zp::dx(Q3, 2);
  ZPoly<F> E = zp::add(Q5, zp::scale(zp::mulf(Q3, V), Rat(4)));
  E = zp::add(E, zp::scale(zp::mulf(Q2, V.derive()), Rat(6)));
  E = zp::add(E, zp::scale(zp::shift(Q1), Rat(4)));
  E = zp::add(E, zp::scale(zp::mulf(Q1, W), Rat(-4)));
  E = zp::add(E, zp::scale(zp::mulf(Q1, V.derive().derive()), Rat(2)));
  E = zp::add(E, zp::scale(zp::mulf(Q, W.derive()), Rat(-2)));
  return E;
}

// right side of the curve identity:
// 4(z - W)Q^2 - 4V(Q_x)^2 + (Q_xx)^2 - 2 Q_x Q_xxx + 2Q(2V_x Q_x + 4V Q_xx + Q_xxxx)
template <typename F>
ZPoly<F> eq7_apply(const F& V, const F& W, const ZPoly<F>& Q) {
  const ZPoly<F> Q1 = zp::dx(Q), Q2 = zp::dx(Q1), Q3 = zp::dx(Q2), Q4 = zp::dx(Q3);
  ZPoly<F> R = zp::scale(zp::sub(zp::shift(zp::mul(Q, Q)), zp::mulf(zp::mul(Q, Q), W)), Rat(4));
  R = zp::sub(R, zp::scale(zp::mulf(zp::mul(Q1, Q1), V), Rat(4)));
  R = zp::add(R, zp::mul(Q2, Q2));
  R = zp::sub(R, zp::scale(zp::mul(Q1, Q3), Rat(2)));
  ZPoly<F> inner = zp::scale(zp::mulf(Q1, V.derive()), Rat(2));
  inner = zp::add(inner, zp::scale(zp::mulf(Q2, V), Rat(4)));
  inner = zp::add(inner, Q4);
  R = zp::add(R, zp::scale(zp::mul(Q, inner), Rat(2)));
  return R;
}

template <typename F>
struct QSolveOutcome {
  ZPoly<F> Q;                 // monic of z-degree g
  std::vector<Rat> curve4;    // coefficients of 4 F_g(z), length 2g+2
  int free_params = 0;        // nullspace directions fixed to 0
};

// Solves the linear ODE for a monic degree-g Q with coefficients drawn from
// the per-grade ansatz bases, then reads the curve off the quadratic identity.
// Throws NoQ when the system is inconsistent, NotXFree when the quadratic
// identity keeps x-dependence.
template <typename F>
QSolveOutcome<F> solve_q_generic(const F& V, const F& W, int g,
                                 const std::vector<std::vector<F>>& basis) {
  if (g < 1) throw Error("solve_q: g must be >= 1");
  if (static_cast<int>(basis.size()) != g) throw Error("solve_q: need one basis per z grade");

  struct Unknown { int grade; std::size_t idx; };
  std::vector<Unknown> unknowns;
  std::vector<ZPoly<F>> cols;
  for (int i = 0; i < g; ++i) {
    for (std::size_t s = 0; s < basis[static_cast<std::size_t>(i)].size(); ++s) {
      ZPoly<F> U(static_cast<std::size_t>(g) + 1);
      U[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)][s];
      cols.push_back(eq8_apply(V, W, U));
      unknowns.push_back({i, s});
    }
  }
  ZPoly<F> monic(static_cast<std::size_t>(g) + 1);
  monic[static_cast<std::size_t>(g)] = F::one();
  const ZPoly<F> rhs_op = eq8_apply(V, W, monic);

  int cap = 1;
  std::size_t grades = rhs_op.size();
  for (const auto& col : cols) {
    grades = std::max(grades, col.size());
    for (const auto& f : col) cap = std::max(cap, f.len());
  }
  for (const auto& f : rhs_op) cap = std::max(cap, f.len());

  const std::size_t rowdim = grades * static_cast<std::size_t>(F::kComponents) * cap;
  std::vector<std::vector<Rat>> A(rowdim, std::vector<Rat>(cols.size(), Rat(0)));
  std::vector<Rat> b(rowdim, Rat(0));
  auto fill = [&](const ZPoly<F>& col, auto&& put) {
    std::vector<Rat> flat;
    flat.reserve(rowdim);
    for (std::size_t gr = 0; gr < grades; ++gr) {
      if (gr < col.size())
        col[gr].flatten(cap, flat);
      else
        flat.insert(flat.end(), static_cast<std::size_t>(F::kComponents) * cap, Rat(0));
    }
    for (std::size_t r = 0; r < rowdim; ++r) put(r, flat[r]);
  };
  for (std::size_t c = 0; c < cols.size(); ++c)
    fill(cols[c], [&](std::size_t r, const Rat& v) { A[r][c] = v; });
  fill(rhs_op, [&](std::size_t r, const Rat& v) { b[r] = -v; });

  LinearSolution sol = solve_linear(A, b);
  if (!sol.consistent) throw NoQ("no admissible Q within the ansatz bound");

  QSolveOutcome<F> out;
  out.free_params = static_cast<int>(sol.nullspace.size());
  out.Q = monic;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    if (sol.particular[k] == 0) continue;
    const Unknown& u = unknowns[k];
    out.Q[static_cast<std::size_t>(u.grade)] =
        out.Q[static_cast<std::size_t>(u.grade)] +
        basis[static_cast<std::size_t>(u.grade)][u.idx].scale(sol.particular[k]);
  }

  const ZPoly<F> R = eq7_apply(V, W, out.Q);
  out.curve4.assign(static_cast<std::size_t>(2 * g + 2), Rat(0));
  for (std::size_t k = 0; k < R.size(); ++k) {
    if (R[k].is_zero()) continue;
    if (!R[k].is_constant()) throw NotXFree("curve identity keeps x dependence");
    if (k >= out.curve4.size()) throw NotXFree("curve identity exceeds degree 2g+1");
    out.curve4[k] = R[k].constant_part();
  }
  if (out.curve4.back() != 4) throw Error("solve_q: leading curve coefficient is not 4");
  return out;
}

}  // namespace weylab
