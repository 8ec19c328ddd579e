#ifndef DST_SIMPLEX_HPP
#define DST_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "dst/rational.hpp"

namespace dst::lp {

// Equality-form linear program over exact rationals:
//   minimize cost . x   subject to   rows . x = rhs,  x >= 0.
// Solved by the two-phase primal simplex with Bland's anti-cycling rule, so
// feasibility answers are exact yes/no decisions.  Intended for the tiny
// tableaux that arrow decisions produce (tens of variables).
struct Problem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;  // each of length num_vars
  std::vector<Rational> rhs;                // one per row
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> x;  // basic solution when status == optimal
};

Solution minimize(const Problem& problem, const std::vector<Rational>& cost);

// Phase one only: any feasible point, or infeasible.
Solution feasible_point(const Problem& problem);

}  // namespace dst::lp

#endif  // DST_SIMPLEX_HPP
