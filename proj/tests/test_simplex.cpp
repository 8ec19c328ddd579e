#include "doctest.h"
#include "dst/simplex.hpp"

using dst::Rational;
namespace lp = dst::lp;

namespace {
Rational r(long long n, long long d = 1) { return {n, d}; }
}  // namespace

TEST_CASE("feasible point on the probability simplex") {
  lp::Problem p;
  p.num_vars = 3;
  p.rows = {{r(1), r(1), r(1)}};
  p.rhs = {r(1)};
  const auto sol = lp::feasible_point(p);
  REQUIRE(sol.status == lp::Status::optimal);
  Rational sum;
  for (const auto& v : sol.x) {
    CHECK(v >= r(0));
    sum += v;
  }
  CHECK(sum == r(1));
}

TEST_CASE("infeasibility is detected exactly") {
  lp::Problem p;
  p.num_vars = 2;
  p.rows = {{r(1), r(1)}, {r(1), r(1)}};
  p.rhs = {r(1), r(2)};  // x+y cannot be both 1 and 2
  CHECK(lp::feasible_point(p).status == lp::Status::infeasible);

  lp::Problem q;
  q.num_vars = 1;
  q.rows = {{r(1)}};
  q.rhs = {r(-1)};  // x = -1 with x >= 0
  CHECK(lp::feasible_point(q).status == lp::Status::infeasible);
}

TEST_CASE("redundant rows are tolerated") {
  lp::Problem p;
  p.num_vars = 2;
  p.rows = {{r(1), r(1)}, {r(2), r(2)}};
  p.rhs = {r(1), r(2)};  // second row is twice the first
  const auto sol = lp::feasible_point(p);
  REQUIRE(sol.status == lp::Status::optimal);
  CHECK(sol.x[0] + sol.x[1] == r(1));
}

TEST_CASE("optimization finds exact optima") {
  // minimize x1 subject to x1 + x2 = 1: optimum 0
  lp::Problem p;
  p.num_vars = 2;
  p.rows = {{r(1), r(1)}};
  p.rhs = {r(1)};
  auto sol = lp::minimize(p, {r(1), r(0)});
  REQUIRE(sol.status == lp::Status::optimal);
  CHECK(sol.objective == r(0));
  CHECK(sol.x[0] == r(0));
  CHECK(sol.x[1] == r(1));

  // maximize x1 (minimize -x1): optimum value -1 at x1 = 1
  sol = lp::minimize(p, {r(-1), r(0)});
  REQUIRE(sol.status == lp::Status::optimal);
  CHECK(sol.objective == r(-1));
  CHECK(sol.x[0] == r(1));

  // fractional optimum: minimize x1 with 2 x1 + 3 x2 = 1, x2 <= 1/4 via slack
  lp::Problem q;
  q.num_vars = 3;  // x1, x2, slack
  q.rows = {{r(2), r(3), r(0)}, {r(0), r(1), r(1)}};
  q.rhs = {r(1), r(1, 4)};
  sol = lp::minimize(q, {r(1), r(0), r(0)});
  REQUIRE(sol.status == lp::Status::optimal);
  CHECK(sol.objective == r(1, 8));  // x2 at its cap 1/4, x1 = (1 - 3/4)/2
}

TEST_CASE("unbounded problems are reported") {
  // minimize -x1 with x1 - x2 = 0: x1 can grow forever
  lp::Problem p;
  p.num_vars = 2;
  p.rows = {{r(1), r(-1)}};
  p.rhs = {r(0)};
  CHECK(lp::minimize(p, {r(-1), r(0)}).status == lp::Status::unbounded);
}

TEST_CASE("a degenerate problem terminates under Bland's rule") {
  // multiple identical-ratio rows force degenerate pivots
  lp::Problem p;
  p.num_vars = 4;
  p.rows = {
      {r(1), r(1), r(0), r(0)},
      {r(1), r(0), r(1), r(0)},
      {r(1), r(0), r(0), r(1)},
  };
  p.rhs = {r(1), r(1), r(1)};
  const auto sol = lp::minimize(p, {r(-3), r(1), r(1), r(1)});
  REQUIRE(sol.status == lp::Status::optimal);
  CHECK(sol.objective == r(-3));  // x1 = 1, the rest 0
  CHECK(sol.x[0] == r(1));
}
