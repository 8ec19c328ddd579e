#include <vector>

#include "doctest.h"
#include "dst/errors.hpp"
#include "dst/mass.hpp"
#include "dst/verify.hpp"

using dst::categorical;
using dst::Frame;
using dst::Mask;
using dst::MassDistribution;
using dst::Rational;
using dst::SetFunction;
using dst::SetFunctionKind;

namespace {
const Frame kAB({"a", "b"});
// The running example: {a}^(1/2) combined with {b}^(1/3).
const MassDistribution kWorked(kAB, {{0, Rational(1, 6)},
                                     {1, Rational(1, 3)},
                                     {2, Rational(1, 6)},
                                     {3, Rational(1, 3)}});
}  // namespace

TEST_CASE("mass construction validates its entries") {
  CHECK(MassDistribution(kAB, {{1, Rational(1, 2)}, {3, Rational(1, 2)}}).at(1) ==
        Rational(1, 2));
  CHECK_THROWS_AS(MassDistribution(kAB, {{1, Rational(1, 2)}}), dst::SumNotOne);
  CHECK_THROWS_AS(MassDistribution(kAB, {{1, Rational(1, 2)}, {1, Rational(1, 2)}}),
                  dst::DuplicateEntry);
  CHECK_THROWS_AS(MassDistribution(kAB, {{1, Rational(3, 2)}, {3, Rational(-1, 2)}}),
                  dst::OutOfRange);
  CHECK_THROWS_AS(MassDistribution(kAB, {{4, Rational(1)}}), dst::FrameMismatch);
  CHECK_THROWS_AS(MassDistribution::from_values(kAB, {Rational(1)}), dst::OutOfRange);
}

TEST_CASE("categorical masses") {
  const MassDistribution vacuous = categorical(kAB, kAB.universe());
  CHECK(vacuous.at(3) == Rational(1));
  CHECK(vacuous.is_normalized());
  CHECK(vacuous.focal_elements() == std::vector<Mask>{3});

  const MassDistribution contradiction = categorical(kAB, 0);
  CHECK(contradiction.at(0) == Rational(1));
  CHECK_FALSE(contradiction.is_normalized());

  const MassDistribution on_a = categorical(kAB, 1);
  CHECK(on_a.at(1) == Rational(1));
  CHECK(on_a.at(2) == Rational(0));
  CHECK_THROWS_AS(categorical(kAB, 7), dst::FrameMismatch);
}

TEST_CASE("simple support masses") {
  const MassDistribution s = dst::simple_support(kAB, 1, Rational(1, 2));
  CHECK(s.at(1) == Rational(1, 2));
  CHECK(s.at(3) == Rational(1, 2));
  CHECK_THROWS_AS(dst::simple_support(kAB, 3, Rational(1, 2)), dst::OutOfRange);
  CHECK_THROWS_AS(dst::simple_support(kAB, 1, Rational(3, 2)), dst::OutOfRange);
}

TEST_CASE("transforms of the worked example match the summation oracle") {
  // Oracle first: the naive summations fix the expected values...
  const SetFunction bel_oracle = dst::oracle_transform(kWorked, SetFunctionKind::belief);
  CHECK(bel_oracle.values() ==
        std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 6), Rational(5, 6)});
  const SetFunction q_oracle = dst::oracle_transform(kWorked, SetFunctionKind::commonality);
  CHECK(q_oracle.values() ==
        std::vector<Rational>{Rational(1), Rational(2, 3), Rational(1, 2), Rational(1, 3)});

  // ...and the zeta-based transform must reproduce them exactly.
  CHECK(transform(kWorked, SetFunctionKind::belief) == bel_oracle);
  CHECK(transform(kWorked, SetFunctionKind::commonality) == q_oracle);
  CHECK(transform(kWorked, SetFunctionKind::plausibility) ==
        dst::oracle_transform(kWorked, SetFunctionKind::plausibility));
}

TEST_CASE("belief of the vacuous mass is the indicator of the whole frame") {
  const SetFunction bel = transform(categorical(kAB, 3), SetFunctionKind::belief);
  CHECK(bel.values() ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("commonality inversion recovers the worked example") {
  const SetFunction q(kAB, SetFunctionKind::commonality,
                      {Rational(1), Rational(2, 3), Rational(1, 2), Rational(1, 3)});
  CHECK(mass_from_transform(q) == kWorked);

  // unit commonality everywhere is the vacuous belief
  const SetFunction unit(kAB, SetFunctionKind::commonality,
                         {Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(mass_from_transform(unit) == categorical(kAB, 3));

  // bel of the vacuous inverts back
  CHECK(mass_from_transform(transform(categorical(kAB, 3), SetFunctionKind::belief)) ==
        categorical(kAB, 3));
}

TEST_CASE("invalid transforms are rejected") {
  CHECK_THROWS_AS(mass_from_transform(SetFunction(
                      kAB, SetFunctionKind::belief,
                      {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1)})),
                  dst::NotAValidTransform);  // bel({}) != 0
  CHECK_THROWS_AS(mass_from_transform(SetFunction(
                      kAB, SetFunctionKind::commonality,
                      {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)})),
                  dst::NotAValidTransform);  // q({}) != 1
  CHECK_THROWS_AS(mass_from_transform(SetFunction(
                      kAB, SetFunctionKind::commonality,
                      {Rational(1), Rational(1), Rational(1), Rational(0)})),
                  dst::NotAValidTransform);  // recovered mass negative
  CHECK_THROWS_AS(mass_from_transform(SetFunction(
                      kAB, SetFunctionKind::plausibility,
                      {Rational(0), Rational(1), Rational(1), Rational(1)})),
                  dst::NotAValidTransform);  // pl not invertible here
}

TEST_CASE("random masses: round trips, the pl identity, monotonicity, range") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    const Frame frame(names);
    dst::CaseGenerator gen(777 + n);
    for (int rep = 0; rep < 200; ++rep) {
      const MassDistribution m = gen.mass(frame);
      const SetFunction bel = transform(m, SetFunctionKind::belief);
      const SetFunction pl = transform(m, SetFunctionKind::plausibility);
      const SetFunction q = transform(m, SetFunctionKind::commonality);

      REQUIRE(mass_from_transform(bel) == m);
      REQUIRE(mass_from_transform(q) == m);

      const Rational empty_mass = m.at(0);
      for (Mask s = 0; s <= frame.universe(); ++s) {
        REQUIRE(bel.at(s).in_unit_interval());
        REQUIRE(pl.at(s).in_unit_interval());
        REQUIRE(q.at(s).in_unit_interval());
        REQUIRE(pl.at(s) ==
                Rational(1) - empty_mass - bel.at(static_cast<Mask>(~s) & frame.universe()));
      }

      if (rep < 20) {  // the exhaustive pair sweep is pricier, sample it
        for (Mask hi = 0; hi <= frame.universe(); ++hi) {
          for (Mask lo = hi;; lo = (lo - 1) & hi) {  // lo runs over subsets of hi
            REQUIRE(bel.at(lo) <= bel.at(hi));
            REQUIRE(q.at(lo) >= q.at(hi));
            if (lo == 0) break;
          }
        }
      }
    }
  }
}

TEST_CASE("fast transforms agree with the naive oracle on random masses") {
  const Frame frame({"a", "b", "c", "d"});
  dst::CaseGenerator gen(4242);
  for (int rep = 0; rep < 50; ++rep) {
    const MassDistribution m = gen.mass(frame);
    for (auto kind : {SetFunctionKind::belief, SetFunctionKind::plausibility,
                      SetFunctionKind::commonality}) {
      REQUIRE(transform(m, kind) == dst::oracle_transform(m, kind));
    }
  }
}

TEST_CASE("describe renders nonzero masses in mask order") {
  CHECK(describe(kWorked) == "{}:1/6 {a}:1/3 {b}:1/6 {a b}:1/3");
  CHECK(describe(categorical(kAB, 3)) == "{a b}:1");
}
