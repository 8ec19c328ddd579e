#include "doctest.h"
#include "dst/combination.hpp"
#include "dst/errors.hpp"
#include "dst/verify.hpp"

using dst::categorical;
using dst::combine_normalized;
using dst::combine_unnormalized;
using dst::condition;
using dst::Frame;
using dst::MassDistribution;
using dst::Rational;
using dst::simple_support;

namespace {
const Frame kAB({"a", "b"});
}

TEST_CASE("the worked combination of two simple supports") {
  const MassDistribution a_half = simple_support(kAB, 1, Rational(1, 2));
  const MassDistribution b_third = simple_support(kAB, 2, Rational(1, 3));
  const MassDistribution expected(kAB, {{0, Rational(1, 6)},
                                        {1, Rational(1, 3)},
                                        {2, Rational(1, 6)},
                                        {3, Rational(1, 3)}});
  CHECK(combine_unnormalized(a_half, b_third) == expected);
  CHECK(dst::oracle_combine(a_half, b_third) == expected);
}

TEST_CASE("vacuous evidence is neutral, categoricals intersect") {
  const MassDistribution m(kAB, {{0, Rational(1, 6)},
                                 {1, Rational(1, 3)},
                                 {2, Rational(1, 6)},
                                 {3, Rational(1, 3)}});
  CHECK(combine_unnormalized(m, categorical(kAB, 3)) == m);
  CHECK(combine_unnormalized(categorical(kAB, 1), categorical(kAB, 3)) == categorical(kAB, 1));
  CHECK(combine_unnormalized(categorical(kAB, 1), categorical(kAB, 2)) == categorical(kAB, 0));
  CHECK_THROWS_AS(combine_unnormalized(m, categorical(Frame({"a", "c"}), 3)),
                  dst::FrameMismatch);
}

TEST_CASE("normalized combination strips and reports the conflict") {
  const MassDistribution a_half = simple_support(kAB, 1, Rational(1, 2));
  const MassDistribution b_third = simple_support(kAB, 2, Rational(1, 3));
  const auto [mass, report] = combine_normalized(a_half, b_third);
  CHECK(report.conflict == Rational(1, 6));
  CHECK_FALSE(report.total_conflict);
  CHECK(mass == MassDistribution(kAB, {{1, Rational(2, 5)},
                                       {2, Rational(1, 5)},
                                       {3, Rational(2, 5)}}));

  const auto [same, zero] = combine_normalized(a_half, categorical(kAB, 3));
  CHECK(same == a_half);
  CHECK(zero.conflict == Rational(0));
}

TEST_CASE("normalized combination rejects bad inputs and total conflict") {
  const MassDistribution unnormalized(kAB, {{0, Rational(1, 2)}, {3, Rational(1, 2)}});
  CHECK_THROWS_AS(combine_normalized(unnormalized, categorical(kAB, 3)),
                  dst::NotNormalizedInput);
  CHECK_THROWS_AS(combine_normalized(categorical(kAB, 1), categorical(kAB, 2)),
                  dst::TotalConflict);
}

TEST_CASE("conditioning") {
  CHECK(condition(categorical(kAB, 3), 1, false) == categorical(kAB, 1));
  CHECK(condition(simple_support(kAB, 2, Rational(1, 3)), 1, false) ==
        MassDistribution(kAB, {{0, Rational(1, 3)}, {1, Rational(2, 3)}}));
  CHECK(condition(simple_support(kAB, 2, Rational(1, 3)), 1, true) == categorical(kAB, 1));
  CHECK_THROWS_AS(condition(categorical(kAB, 2), 1, true), dst::TotalConflict);
  CHECK(condition(categorical(kAB, 2), 1, false) == categorical(kAB, 0));
}

TEST_CASE("combination laws on random masses at several frame sizes") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    const Frame frame(names);
    const MassDistribution vacuous = categorical(frame, frame.universe());
    const MassDistribution contradiction = categorical(frame, 0);
    dst::CaseGenerator gen(900 + n);
    for (int rep = 0; rep < 60; ++rep) {
      const MassDistribution m1 = gen.mass(frame);
      const MassDistribution m2 = gen.mass(frame);
      const MassDistribution m3 = gen.mass(frame);
      const MassDistribution c12 = combine_unnormalized(m1, m2);
      REQUIRE(c12 == combine_unnormalized(m2, m1));
      REQUIRE(combine_unnormalized(c12, m3) ==
              combine_unnormalized(m1, combine_unnormalized(m2, m3)));
      REQUIRE(combine_unnormalized(m1, vacuous) == m1);
      REQUIRE(combine_unnormalized(m1, contradiction) == contradiction);
      REQUIRE(dst::oracle_combine(m1, m2) == c12);
    }
  }
}

TEST_CASE("normalized combination equals renormalized unnormalized combination") {
  const Frame frame({"a", "b", "c"});
  dst::CaseGenerator gen(31337);
  for (int rep = 0; rep < 60; ++rep) {
    const MassDistribution m1 = gen.mass(frame, /*normalized=*/true);
    const MassDistribution m2 = gen.mass(frame, /*normalized=*/true);
    const MassDistribution u = combine_unnormalized(m1, m2);
    if (u.at(0).is_one()) continue;
    const auto [normalized, report] = combine_normalized(m1, m2);
    REQUIRE(report.conflict == u.at(0));
    const Rational scale = Rational(1) - report.conflict;
    for (dst::Mask s = 1; s <= frame.universe(); ++s) {
      REQUIRE(normalized.at(s) == u.at(s) / scale);
    }
    REQUIRE(normalized.at(0) == Rational(0));
  }
}
