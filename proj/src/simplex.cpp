#include "dst/simplex.hpp"

#include <cstddef>

#include "dst/errors.hpp"

namespace dst::lp {

namespace {

// Dense simplex tableau: `rows` columns 0..num_cols-1 plus a rhs column,
// one objective row of reduced costs, and the basis column per row.
struct Tableau {
  std::vector<std::vector<Rational>> rows;  // each num_cols + 1 entries
  std::vector<Rational> objective;          // num_cols + 1 entries; last is -z
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;

  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    auto& prow = rows[pivot_row];
    const Rational inv = Rational(1) / prow[pivot_col];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row) continue;
      eliminate(rows[i], prow, pivot_col);
    }
    eliminate(objective, prow, pivot_col);
    basis[pivot_row] = pivot_col;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow,
                        std::size_t pivot_col) {
    if (target[pivot_col].is_zero()) return;
    const Rational factor = target[pivot_col];
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * prow[j];
  }

  // Bland's rule: entering column is the lowest-index one with a negative
  // reduced cost; ties in the ratio test break toward the lowest basis index.
  // Returns optimal/unbounded.
  Status run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t entering = num_cols;
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (allowed[j] && objective[j] < Rational(0)) {
          entering = j;
          break;
        }
      }
      if (entering == num_cols) return Status::optimal;

      std::size_t leaving = rows.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& coeff = rows[i][entering];
        if (coeff <= Rational(0)) continue;
        Rational ratio = rows[i].back() / coeff;
        if (leaving == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows.size()) return Status::unbounded;
      pivot(leaving, entering);
    }
  }
};

Solution solve(const Problem& problem, const std::vector<Rational>* cost) {
  const std::size_t n = problem.num_vars;
  const std::size_t m = problem.rows.size();
  if (problem.rhs.size() != m) throw Error("lp: rhs length does not match row count");
  for (const auto& row : problem.rows) {
    if (row.size() != n) throw Error("lp: row length does not match variable count");
  }

  Tableau t;
  t.num_cols = n + m;  // original variables then one artificial per row
  t.rows.assign(m, std::vector<Rational>(t.num_cols + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = problem.rhs[i] < Rational(0);
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = flip ? -problem.rows[i][j] : problem.rows[i][j];
    }
    t.rows[i][n + i] = Rational(1);
    t.rows[i].back() = flip ? -problem.rhs[i] : problem.rhs[i];
    t.basis[i] = n + i;
  }

  // Phase one: minimize the sum of the artificials.
  t.objective.assign(t.num_cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) t.objective[n + i] = Rational(1);
  for (std::size_t i = 0; i < m; ++i) {
    Tableau::eliminate(t.objective, t.rows[i], t.basis[i]);
  }
  std::vector<bool> allowed(t.num_cols, true);
  if (t.run(allowed) != Status::optimal) throw Error("lp: phase one cannot be unbounded");
  if (-t.objective.back() > Rational(0)) return {Status::infeasible, {}, {}};

  // Drive leftover artificials out of the basis; an all-zero row over the
  // original columns is a redundant constraint and is dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      t.pivot(i, col);
      ++i;
    }
  }

  Solution out;
  out.status = Status::optimal;
  if (cost != nullptr) {
    if (cost->size() != n) throw Error("lp: cost length does not match variable count");
    t.objective.assign(t.num_cols + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) t.objective[j] = (*cost)[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      Tableau::eliminate(t.objective, t.rows[i], t.basis[i]);
    }
    for (std::size_t j = n; j < t.num_cols; ++j) allowed[j] = false;
    const Status phase2 = t.run(allowed);
    if (phase2 != Status::optimal) return {Status::unbounded, {}, {}};
    out.objective = -t.objective.back();
  }
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i].back();
  }
  return out;
}

}  // namespace

Solution minimize(const Problem& problem, const std::vector<Rational>& cost) {
  return solve(problem, &cost);
}

Solution feasible_point(const Problem& problem) { return solve(problem, nullptr); }

}  // namespace dst::lp
