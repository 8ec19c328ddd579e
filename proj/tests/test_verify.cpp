#include <sstream>

#include "doctest.h"
#include "dst/verify.hpp"

using dst::check_norm_axioms;
using dst::check_universal;
using dst::Frame;
using dst::LawReport;
using dst::NormKind;
using dst::Rational;
using dst::UniversalDirection;
using dst::WeightVector;

namespace {
const Frame kAB({"a", "b"});
}

TEST_CASE("report rendering") {
  std::ostringstream out;
  render(out, LawReport{"some-law", 42, {}});
  CHECK(out.str() == "PASS some-law (42 cases)\n");

  std::ostringstream bad;
  render(bad, LawReport{"other-law", 3, {"first", "second"}});
  CHECK(bad.str() == "FAIL other-law: first (+1 more)\n");
}

TEST_CASE("conjoin passes the coproduct check over the exhaustive grid") {
  const auto grid = dst::weight_grid(kAB, 2);  // 27 vectors keeps this quick
  CHECK(grid.size() == 27);
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      REQUIRE(check_universal(a, b, conjoin_weights(a, b), grid, UniversalDirection::coproduct)
                  .passed());
      REQUIRE(check_universal(a, b, disjoin_weights(a, b), grid, UniversalDirection::product)
                  .passed());
    }
  }
}

TEST_CASE("check_universal flags non-minimal and non-bounding candidates") {
  const WeightVector a(kAB, {{1, Rational(1, 2)}});
  const WeightVector b(kAB, {{2, Rational(1, 2)}});
  const std::vector<WeightVector> sample = {a, b, conjoin_weights(a, b)};

  // too small: not an upper bound at all
  const auto low = check_universal(a, b, WeightVector(kAB), sample,
                                   UniversalDirection::coproduct);
  REQUIRE_FALSE(low.passed());
  CHECK(low.failures[0].rfind("not an upper bound", 0) == 0);

  // too big: bounds the pair but is not least
  const WeightVector both(kAB, {{1, Rational(1)}, {2, Rational(1)}});
  const auto big = check_universal(a, b, both, sample, UniversalDirection::coproduct);
  REQUIRE_FALSE(big.passed());
  CHECK(big.failures[0].rfind("not minimal", 0) == 0);

  // combining a belief with itself overshoots: the private demo reproduces it
  CHECK(dst::combination_not_conjunction_demo().passed());
}

TEST_CASE("norm axiom checks accept the three named operations") {
  const auto grid = dst::unit_grid(4);
  const auto reports = dst::norm_axiom_suite(4);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.passed());

  // min is no t-conorm: 0 is not neutral
  const auto wrong = check_norm_axioms(
      [](const Rational& x, const Rational& y) { return dst::min(x, y); }, NormKind::t_conorm,
      grid, "min");
  REQUIRE_FALSE(wrong.passed());
  bool neutrality_failure = false;
  for (const auto& f : wrong.failures) {
    neutrality_failure = neutrality_failure || f.find("neutral") != std::string::npos;
  }
  CHECK(neutrality_failure);

  // truncated addition fails associativity on this grid
  const auto bounded_sum = check_norm_axioms(
      [](const Rational& x, const Rational& y) { return dst::min(Rational(1), x + y); },
      NormKind::t_conorm, grid, "bounded-sum");
  CHECK(bounded_sum.passed());  // bounded sum is in fact a t-conorm
}

TEST_CASE("norm axiom checks validate the grid") {
  std::vector<Rational> no_one = {Rational(0), Rational(1, 2)};
  CHECK_THROWS_AS(check_norm_axioms(
                      [](const Rational& x, const Rational& y) { return dst::max(x, y); },
                      NormKind::t_conorm, no_one, "max"),
                  dst::OutOfRange);
}

TEST_CASE("suites are deterministic given a seed") {
  const auto first = dst::dempster_law_suite(3, 40, 1234);
  const auto second = dst::dempster_law_suite(3, 40, 1234);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].law == second[i].law);
    CHECK(first[i].cases == second[i].cases);
    CHECK(first[i].failures == second[i].failures);
  }
}

TEST_CASE("every stock suite passes at small sizes") {
  for (const auto& batch : {
           dst::dempster_law_suite(2, 50, 7),
           dst::weight_combination_suite(2, 50, 8),
           dst::lattice_law_suite(2, 50, 9),
           dst::decomposition_suite(2, 50, 10),
           dst::arrow_soundness_suite(2, 25, 11),
           dst::extremal_object_suite(2, 20, 12),
           dst::universal_random_suite(100, 13),
           dst::norm_axiom_suite(4),
       }) {
    for (const auto& report : batch) {
      INFO(report.law);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("the oracle convolution is independent and exact") {
  const dst::MassDistribution left = dst::simple_support(kAB, 1, Rational(1, 2));
  const dst::MassDistribution right = dst::simple_support(kAB, 2, Rational(1, 3));
  const dst::MassDistribution out = dst::oracle_combine(left, right);
  CHECK(out.at(0) == Rational(1, 6));
  CHECK(out.at(1) == Rational(1, 3));
  CHECK(out.at(2) == Rational(1, 6));
  CHECK(out.at(3) == Rational(1, 3));
  CHECK(dst::oracle_combine(out, dst::categorical(kAB, 3)) == out);
}
