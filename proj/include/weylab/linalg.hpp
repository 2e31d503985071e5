#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylab/errors.hpp"
#include "weylab/scalar.hpp"

namespace weylab {

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;               // free unknowns set to 0
  std::vector<std::vector<Rat>> nullspace;   // canonical echelon basis
  std::vector<int> pivot_columns;
};

// Solves A u = b exactly. Rows are scaled to integers, the forward pass is
// fraction-free (Bareiss), back-substitution returns to rationals. The
// nullspace basis is canonical: one vector per free column, that free
// coordinate set to 1 and the other free coordinates to 0.
inline LinearSolution solve_linear(const std::vector<std::vector<Rat>>& A,
                                   const std::vector<Rat>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;

  std::vector<std::vector<Int>> M(rows, std::vector<Int>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(A[i][j]));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(b[i]));
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat v = A[i][j] * l;
      M[i][j] = boost::multiprecision::numerator(v);
    }
    const Rat v = b[i] * l;
    M[i][cols] = boost::multiprecision::numerator(v);
  }

  std::vector<int> pivots;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[r], M[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Int t = M[i][j] * M[r][c] - M[i][c] * M[r][j];
        M[i][j] = t / prev;
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  const std::size_t rank = r;

  LinearSolution sol;
  sol.pivot_columns = pivots;
  for (std::size_t i = rank; i < rows; ++i)
    if (M[i][cols] != 0) return sol;  // 0 = nonzero
  sol.consistent = true;

  // reduced echelon form over Rat
  std::vector<std::vector<Rat>> R(rank, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j <= cols; ++j) R[i][j] = Rat(M[i][j]);
  for (std::size_t i = rank; i-- > 0;) {
    const int pc = pivots[i];
    const Rat inv = Rat(1) / R[i][static_cast<std::size_t>(pc)];
    for (std::size_t j = static_cast<std::size_t>(pc); j <= cols; ++j) R[i][j] *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      const Rat f = R[k][static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (std::size_t j = static_cast<std::size_t>(pc); j <= cols; ++j)
        R[k][j] -= f * R[i][j];
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (int pc : pivots) is_pivot[static_cast<std::size_t>(pc)] = true;

  sol.particular.assign(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i)
    sol.particular[static_cast<std::size_t>(pivots[i])] = R[i][cols];

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i)
      v[static_cast<std::size_t>(pivots[i])] = -R[i][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

inline std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Rat>>& A) {
  if (A.empty()) return {};
  LinearSolution s = solve_linear(A, std::vector<Rat>(A.size(), Rat(0)));
  return s.nullspace;
}

}  // namespace weylab
