#include "doctest.h"
#include "dst/errors.hpp"
#include "dst/io.hpp"
#include "dst/verify.hpp"

using dst::emit_bba;
using dst::emit_wgt;
using dst::Frame;
using dst::MassDistribution;
using dst::parse_bba_text;
using dst::parse_wgt_text;
using dst::Rational;
using dst::WeightVector;

TEST_CASE("canonical mass files parse and re-emit byte-identically") {
  const std::string text =
      "frame: a b\n"
      "mass {a} = 1/2\n"
      "mass {a b} = 1/2\n";
  const MassDistribution m = parse_bba_text(text);
  CHECK(m.at(1) == Rational(1, 2));
  CHECK(emit_bba(m) == text);
}

TEST_CASE("parsing tolerates comments, spacing, decimals and integer values") {
  const MassDistribution m = parse_bba_text(
      "# header comment\n"
      "\n"
      "frame:   a   b  # trailing comment\n"
      "mass { b a } = 0.25\n"
      "mass {} = 1/4\n"
      "mass {a} = 0.5\n");
  CHECK(m.at(3) == Rational(1, 4));
  CHECK(m.at(0) == Rational(1, 4));
  CHECK(m.at(1) == Rational(1, 2));
  CHECK(emit_bba(m) ==
        "frame: a b\n"
        "mass {} = 1/4\n"
        "mass {a} = 1/2\n"
        "mass {a b} = 1/4\n");

  const MassDistribution one = parse_bba_text("frame: x\nmass {x} = 1\n");
  CHECK(emit_bba(one) == "frame: x\nmass {x} = 1\n");
}

TEST_CASE("mass parse errors") {
  CHECK_THROWS_AS(parse_bba_text("mass {a} = 1\n"), dst::ParseError);  // no frame line
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {b} = 1\n"), dst::ParseError);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {a} 1\n"), dst::ParseError);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nweight {a} = 1\n"), dst::ParseError);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {a} = 1/2\n"), dst::SumNotOne);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {a} = 1/2\nmass {a} = 1/2\n"),
                  dst::DuplicateEntry);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {a} = 0.1234567890\n"), dst::ParseError);
  CHECK_THROWS_AS(parse_bba_text("frame: a a\nmass {a} = 1\n"), dst::DuplicateElement);
  CHECK_THROWS_AS(parse_bba_text("frame: a\nmass {a} = 3/2\nmass {} = -1/2\n"),
                  dst::OutOfRange);
}

TEST_CASE("weight files") {
  const std::string text =
      "frame: a b\n"
      "weight {} = 1/8\n"
      "weight {a} = 1/2\n";
  const WeightVector w = parse_wgt_text(text);
  CHECK(w.at(0) == Rational(1, 8));
  CHECK(w.at(1) == Rational(1, 2));
  CHECK(emit_wgt(w) == text);

  // the all-zero vector is just a frame line
  CHECK(emit_wgt(WeightVector(Frame({"a", "b"}))) == "frame: a b\n");
  CHECK(parse_wgt_text("frame: a b\n").is_vacuous());

  CHECK_THROWS_AS(parse_wgt_text("frame: a b\nweight {a b} = 1/2\n"), dst::ParseError);
  CHECK_THROWS_AS(parse_wgt_text("frame: a b\nweight {a} = 9/8\n"), dst::OutOfRange);
  CHECK_THROWS_AS(parse_wgt_text("frame: a b\nmass {a} = 1/2\n"), dst::ParseError);
}

TEST_CASE("random masses and weights round trip through their text forms") {
  const Frame frame({"a", "b", "c"});
  dst::CaseGenerator gen(8080);
  for (int rep = 0; rep < 100; ++rep) {
    const MassDistribution m = gen.mass(frame);
    REQUIRE(parse_bba_text(emit_bba(m)) == m);
    const WeightVector w = gen.weights(frame, true);
    REQUIRE(parse_wgt_text(emit_wgt(w)) == w);
  }
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(dst::load_bba("/nonexistent/path.bba"), dst::ParseError);
}
