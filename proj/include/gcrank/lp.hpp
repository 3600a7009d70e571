#pragma once

// Exact linear programming over the rationals: max obj.x subject to A x <= b
// with x free. Dense two-phase simplex with Bland's rule (no cycling). Meant
// for the few-variable polytopes of the closure sandbox.

#include <cstddef>
#include <optional>
#include <vector>

#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"

namespace gcrank {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

class Tableau {
 public:
  // rows x (cols + 1); last column is the right-hand side.
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost.x over the current basis, restricted to `allowed` columns
  // entering. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced costs d_j = cost_j - sum_r cost_{basis r} t[r][j].
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_ && !enter; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational d = cost[j];
        for (std::size_t r = 0; r < rows_; ++r)
          if (t_[r][j] != 0) d -= cost[basis[r]] * t_[r][j];
        if (d > 0) enter = j;  // Bland: lowest index with positive reduced cost
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][*enter] <= 0) continue;
        const Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis)
      if (b == j) return true;
    return false;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> t_;
};

}  // namespace detail

/// max obj.x s.t. rows[i].x <= rhs[i], x in R^n.
inline LpResult lp_solve(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs,
                         const std::vector<Rational>& obj) {
  const std::size_t m = rows.size(), n = obj.size();
  if (rhs.size() != m) throw Error(ErrorCode::kLengthMismatch, "row and rhs counts differ");
  for (const auto& r : rows)
    if (r.size() != n) throw Error(ErrorCode::kLengthMismatch, "constraint length differs from objective");

  // Columns: x+ (n), x- (n), slack (m), artificial (m).
  const std::size_t cols = 2 * n + 2 * m;
  detail::Tableau tab(m, cols);
  tab.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int sgn = rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, j) = sgn * rows[i][j];
      tab.at(i, n + j) = -sgn * rows[i][j];
    }
    tab.at(i, 2 * n + i) = sgn;
    tab.at(i, 2 * n + m + i) = 1;
    tab.rhs(i) = sgn * rhs[i];
    tab.basis[i] = 2 * n + m + i;
  }

  // Phase 1: maximize -sum(artificials).
  std::vector<Rational> cost1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) cost1[2 * n + m + i] = -1;
  std::vector<bool> all(cols, true);
  tab.optimize(cost1, all);
  Rational infeas = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] >= 2 * n + m) infeas += tab.rhs(r);
  LpResult res;
  if (infeas != 0) {
    res.status = LpStatus::kInfeasible;
    return res;
  }
  // Drive remaining (zero-level) artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < 2 * n + m) continue;
    for (std::size_t j = 0; j < 2 * n + m; ++j) {
      if (tab.at(r, j) != 0 && !tab.is_basic(j)) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2 over the original columns only.
  std::vector<Rational> cost2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost2[j] = obj[j];
    cost2[n + j] = -obj[j];
  }
  std::vector<bool> allowed(cols, false);
  for (std::size_t j = 0; j < 2 * n + m; ++j) allowed[j] = true;
  if (!tab.optimize(cost2, allowed)) {
    res.status = LpStatus::kUnbounded;
    return res;
  }
  res.status = LpStatus::kOptimal;
  res.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto b = tab.basis[r];
    if (b < n) res.x[b] += tab.rhs(r);
    else if (b < 2 * n) res.x[b - n] -= tab.rhs(r);
  }
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += obj[j] * res.x[j];
  return res;
}

}  // namespace gcrank
