#pragma once

#include <utility>
#include <vector>

#include "weylab/curve.hpp"
#include "weylab/errors.hpp"
#include "weylab/linalg.hpp"
#include "weylab/weyl.hpp"

namespace weylab {

namespace detail {

// flatten an operator into a fixed (order+1) x (deg+1) coefficient grid
inline void flatten_op(const WeylOp<Rat>& a, int maxord, int maxdeg, std::vector<Rat>& out) {
  out.assign(static_cast<std::size_t>(maxord + 1) * (maxdeg + 1), Rat(0));
  for (int j = 0; j <= a.order(); ++j) {
    const Poly<Rat> p = a.coeff(j);
    for (int i = 0; i <= p.degree(); ++i)
      out[static_cast<std::size_t>(j) * (maxdeg + 1) + i] = p.coeff(i);
  }
}

}  // namespace detail

// Basis of {M : order M <= target_order, coeff degrees <= bound, [L, M] = 0},
// by equating every coefficient of [L, M] to zero and solving the homogeneous
// system exactly. Unknowns are ordered (D-power desc, x-power desc) so the
// echelon basis is reproducible.
inline std::vector<WeylOp<Rat>> find_commuting(const WeylOp<Rat>& L, int target_order,
                                               int bound) {
  if (bound < 0) throw EmptyBound("coefficient degree bound must be >= 0");
  if (L.is_zero()) throw Error("find_commuting: zero operator");

  struct Unknown { int j, i; };
  std::vector<Unknown> unknowns;
  for (int j = target_order; j >= 0; --j)
    for (int i = bound; i >= 0; --i) unknowns.push_back({j, i});

  std::vector<WeylOp<Rat>> cols;
  cols.reserve(unknowns.size());
  int maxord = 0, maxdeg = 0;
  for (const Unknown& u : unknowns) {
    WeylOp<Rat> E = WeylOp<Rat>::term(Poly<Rat>::monomial(Rat(1), u.i), u.j);
    WeylOp<Rat> C = commutator(L, E);
    maxord = std::max(maxord, C.order());
    for (int j = 0; j <= C.order(); ++j) maxdeg = std::max(maxdeg, C.coeff(j).degree());
    cols.push_back(std::move(C));
  }

  const std::size_t nrows = static_cast<std::size_t>(maxord + 1) * (maxdeg + 1);
  std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(cols.size(), Rat(0)));
  std::vector<Rat> flat;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    detail::flatten_op(cols[c], maxord, maxdeg, flat);
    for (std::size_t r = 0; r < nrows; ++r) A[r][c] = flat[r];
  }

  std::vector<WeylOp<Rat>> basis;
  for (const std::vector<Rat>& v : nullspace(A)) {
    std::vector<Poly<Rat>> u(static_cast<std::size_t>(target_order) + 1);
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      if (v[k] == 0) continue;
      u[static_cast<std::size_t>(unknowns[k].j)] +=
          Poly<Rat>::monomial(v[k], unknowns[k].i);
    }
    WeylOp<Rat> M(std::move(u));
    if (!commutator(L, M).is_zero()) throw Error("find_commuting: unsound basis element");
    basis.push_back(std::move(M));
  }
  return basis;
}

// Escalates the coefficient-degree bound by 2 until a basis member of the
// full target order shows up; no degree bound for partner coefficients is
// known a priori.
inline WeylOp<Rat> find_partner(const WeylOp<Rat>& L, int target_order, int initial_bound,
                                int extra_cap = 10) {
  for (int bound = initial_bound; bound <= initial_bound + extra_cap; bound += 2) {
    for (const WeylOp<Rat>& M : find_commuting(L, target_order, bound))
      if (M.order() == target_order) return M;
  }
  throw NoAlgebraicRelation("no commuting partner of order " + std::to_string(target_order) +
                            " within degree bound " + std::to_string(initial_bound + extra_cap));
}

inline int default_partner_bound(const WeylOp<Rat>& L) {
  int d = 0;
  for (int j = 0; j <= L.order(); ++j) d = std::max(d, L.coeff(j).degree());
  return 4 + 2 * d;
}

struct BCResult {
  SpectralCurve curve;
  WeylOp<Rat> partner;       // satisfies partner^2 = F_g(L4) when normalized
  bool partner_normalized = true;
};

namespace detail {

// solve sum_k e_k L4^k = rhs in the scalars e_k, k = 0..K-1
inline LinearSolution solve_in_powers(const std::vector<WeylOp<Rat>>& pows, int K,
                                      const std::vector<WeylOp<Rat>>& extra_cols,
                                      const WeylOp<Rat>& rhs) {
  int maxord = rhs.order() < 0 ? 0 : rhs.order();
  int maxdeg = 0;
  auto bump = [&](const WeylOp<Rat>& a) {
    maxord = std::max(maxord, a.order());
    for (int j = 0; j <= a.order(); ++j) maxdeg = std::max(maxdeg, a.coeff(j).degree());
  };
  for (int k = 0; k < K; ++k) bump(pows[static_cast<std::size_t>(k)]);
  for (const auto& c : extra_cols) bump(c);
  bump(rhs);

  const std::size_t ncols = static_cast<std::size_t>(K) + extra_cols.size();
  const std::size_t nrows = static_cast<std::size_t>(maxord + 1) * (maxdeg + 1);
  std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(ncols, Rat(0)));
  std::vector<Rat> b(nrows, Rat(0));
  std::vector<Rat> flat;
  std::size_t c = 0;
  for (const auto& col : extra_cols) {
    flatten_op(col, maxord, maxdeg, flat);
    for (std::size_t r = 0; r < nrows; ++r) A[r][c] = flat[r];
    ++c;
  }
  for (int k = 0; k < K; ++k, ++c) {
    flatten_op(pows[static_cast<std::size_t>(k)], maxord, maxdeg, flat);
    for (std::size_t r = 0; r < nrows; ++r) A[r][c] = flat[r];
  }
  flatten_op(rhs, maxord, maxdeg, flat);
  for (std::size_t r = 0; r < nrows; ++r) b[r] = flat[r];
  return solve_linear(A, b);
}

}  // namespace detail

// Burchnall-Chaundy curve of a commuting pair (L4, M) at genus g. The
// relation t*M^2 + 2*M*sigma(L4) = L4^(2g+1) + e(L4) is solved exactly; the
// sigma part absorbs the shear freedom M -> M + p(L4), which would otherwise
// move the curve, so F(z) = z^(2g+1) + e(z) + sigma(z)^2 / t is pinned to the
// pure monic odd form. (An even-order operator cannot be anti-self-adjoint,
// so normalizing the partner by its anti-self-adjoint part is not an option
// even when L4 is self-adjoint; the shear solve covers both cases.)
inline BCResult bc_curve(const WeylOp<Rat>& L4, const WeylOp<Rat>& M_in, int g) {
  if (g < 1) throw Error("bc_curve: genus must be >= 1");
  if (!commutator(L4, M_in).is_zero()) throw NotCommuting("[L4, M] != 0");
  if (M_in.order() != 4 * g + 2)
    throw DegeneratePartner("partner order is not 4g+2");

  std::vector<WeylOp<Rat>> pows{WeylOp<Rat>::one()};
  for (int k = 1; k <= 2 * g + 1; ++k) pows.push_back(pows.back() * L4);

  // unknowns: t, sigma_0..sigma_g, e_0..e_{2g}
  const WeylOp<Rat> M2 = M_in * M_in;
  std::vector<WeylOp<Rat>> cols;
  cols.push_back(M2);
  for (int j = 0; j <= g; ++j) cols.push_back(Rat(2) * (M_in * pows[static_cast<std::size_t>(j)]));
  LinearSolution sol =
      detail::solve_in_powers(pows, 2 * g + 1, cols, pows[static_cast<std::size_t>(2 * g + 1)]);
  if (!sol.consistent)
    throw NoAlgebraicRelation("no relation of genus " + std::to_string(g) + " shape");
  std::vector<Rat> u = sol.particular;
  if (u[0] == 0) {
    for (const auto& nv : sol.nullspace)
      if (nv[0] != 0) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += nv[i];
        break;
      }
    if (u[0] == 0) throw DegeneratePartner("degenerate relation: M^2 does not appear");
  }
  const Rat t = u[0];
  std::vector<Rat> sigma(u.begin() + 1, u.begin() + 2 + g);
  // the power columns sit on the left of the solved system, so e flips sign
  std::vector<Rat> e(u.begin() + 2 + g, u.begin() + 2 + g + 2 * g + 1);
  for (Rat& v : e) v = -v;

  // exact re-verification of t*M^2 + 2*M*sigma(L4) - L4^(2g+1) - e(L4) = 0
  WeylOp<Rat> check = t * M2;
  for (int j = 0; j <= g; ++j)
    check += (Rat(2) * sigma[static_cast<std::size_t>(j)]) * (M_in * pows[static_cast<std::size_t>(j)]);
  for (int k = 0; k <= 2 * g; ++k) check -= e[static_cast<std::size_t>(k)] * pows[static_cast<std::size_t>(k)];
  check -= pows[static_cast<std::size_t>(2 * g + 1)];
  if (!check.is_zero()) throw Error("bc_curve: post-verification failed");

  std::vector<Rat> c(static_cast<std::size_t>(2 * g + 1), Rat(0));
  for (int k = 0; k <= 2 * g; ++k) c[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
  const Poly<Rat> sig{std::vector<Rat>(sigma)};
  const Poly<Rat> sig2 = sig * sig;
  for (int k = 0; k <= sig2.degree(); ++k) c[static_cast<std::size_t>(k)] += sig2.coeff(k) / t;
  SpectralCurve curve(g, c);

  // N = t*M + sigma(L4) satisfies N^2 = t * F_g(L4); divide by sqrt(t) when
  // that stays rational
  WeylOp<Rat> N = t * M_in;
  for (int j = 0; j <= g; ++j) N += sigma[static_cast<std::size_t>(j)] * pows[static_cast<std::size_t>(j)];
  if (auto st = rational_sqrt(t)) {
    if (*st != 0) return {curve, N * (Rat(1) / *st), true};
  }
  return {curve, N, false};
}

}  // namespace weylab
