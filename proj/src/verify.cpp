#include "dst/verify.hpp"

#include <algorithm>
#include <ostream>

#include "dst/errors.hpp"

namespace dst {

namespace {

Frame letter_frame(std::size_t n) {
  static const std::string alphabet = "abcdefghijklmnop";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, alphabet.at(i));
  return Frame(std::move(names));
}

std::string equation(const std::string& lhs, const std::string& rhs) {
  return "lhs (" + lhs + ") != rhs (" + rhs + ")";
}

}  // namespace

void render(std::ostream& out, const LawReport& report) {
  if (report.passed()) {
    out << "PASS " << report.law << " (" << report.cases << " cases)\n";
  } else {
    out << "FAIL " << report.law << ": " << report.failures.front();
    if (report.failures.size() > 1) {
      out << " (+" << report.failures.size() - 1 << " more)";
    }
    out << "\n";
  }
}

void render(std::ostream& out, std::span<const LawReport> reports) {
  for (const auto& r : reports) render(out, r);
}

MassDistribution oracle_combine(const MassDistribution& a, const MassDistribution& b) {
  require_same_frame(a.frame(), b.frame());
  const std::size_t n = a.values().size();
  std::vector<Rational> out(n);
  for (Mask x = 0; x < n; ++x) {
    if (a.values()[x].is_zero()) continue;
    for (Mask y = 0; y < n; ++y) {
      if (b.values()[y].is_zero()) continue;
      out[x & y] += a.values()[x] * b.values()[y];
    }
  }
  return MassDistribution::from_values(a.frame(), std::move(out));
}

SetFunction oracle_transform(const MassDistribution& m, SetFunctionKind kind) {
  const std::size_t n = m.values().size();
  std::vector<Rational> out(n);
  for (Mask a = 0; a < n; ++a) {
    for (Mask x = 0; x < n; ++x) {
      const bool counted = kind == SetFunctionKind::belief ? ((x & a) == x && x != 0)
                           : kind == SetFunctionKind::plausibility ? (x & a) != 0
                                                                   : (x & a) == a;
      if (counted) out[a] += m.values()[x];
    }
  }
  return SetFunction(m.frame(), kind, std::move(out));
}

LawReport check_universal(const WeightVector& a, const WeightVector& b,
                          const WeightVector& candidate, std::span<const WeightVector> sample,
                          UniversalDirection direction) {
  require_same_frame(a.frame(), b.frame());
  require_same_frame(a.frame(), candidate.frame());
  LawReport report{direction == UniversalDirection::coproduct ? "coproduct-universal-property"
                                                              : "product-universal-property",
                   2 + sample.size(),
                   {}};
  if (direction == UniversalDirection::coproduct) {
    if (!leq_weights(a, candidate) || !leq_weights(b, candidate)) {
      report.failures.push_back("not an upper bound: candidate (" + describe(candidate) +
                                ") vs A (" + describe(a) + "), B (" + describe(b) + ")");
    }
    for (const auto& c : sample) {
      if (leq_weights(a, c) && leq_weights(b, c) && !leq_weights(candidate, c)) {
        report.failures.push_back("not minimal: C (" + describe(c) +
                                  ") bounds A and B but not candidate (" + describe(candidate) +
                                  ")");
      }
    }
  } else {
    if (!leq_weights(candidate, a) || !leq_weights(candidate, b)) {
      report.failures.push_back("not a lower bound: candidate (" + describe(candidate) +
                                ") vs A (" + describe(a) + "), B (" + describe(b) + ")");
    }
    for (const auto& c : sample) {
      if (leq_weights(c, a) && leq_weights(c, b) && !leq_weights(c, candidate)) {
        report.failures.push_back("not maximal: C (" + describe(c) +
                                  ") is below A and B but not below candidate (" +
                                  describe(candidate) + ")");
      }
    }
  }
  return report;
}

LawReport check_norm_axioms(const UnitOp& op, NormKind kind, std::span<const Rational> grid,
                            std::string_view op_name) {
  const Rational zero(0), one(1);
  bool has_zero = false, has_one = false;
  for (const auto& g : grid) {
    if (!g.in_unit_interval()) throw OutOfRange("grid value " + g.str() + " outside [0,1]");
    has_zero = has_zero || g.is_zero();
    has_one = has_one || g.is_one();
  }
  if (!has_zero || !has_one) throw OutOfRange("the grid must contain both 0 and 1");

  LawReport report{std::string(kind == NormKind::t_conorm ? "t-conorm" : "t-norm") + " axioms: " +
                       std::string(op_name),
                   0,
                   {}};
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  for (const auto& x : grid) {
    for (const auto& y : grid) {
      ++report.cases;
      const Rational xy = op(x, y);
      if (!xy.in_unit_interval()) {
        fail("leaves [0,1]: op(" + x.str() + "," + y.str() + ") = " + xy.str());
      }
      if (xy != op(y, x)) {
        fail("not commutative at (" + x.str() + "," + y.str() + ")");
      }
    }
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      for (const auto& z : grid) {
        ++report.cases;
        if (op(op(x, y), z) != op(x, op(y, z))) {
          fail("not associative at (" + x.str() + "," + y.str() + "," + z.str() + ")");
        }
      }
    }
  }
  const Rational& neutral = kind == NormKind::t_conorm ? zero : one;
  for (const auto& x : grid) {
    ++report.cases;
    if (op(neutral, x) != x || op(x, neutral) != x) {
      fail("neutral element " + neutral.str() + " fails at " + x.str());
    }
  }
  for (const auto& x : grid) {
    for (const auto& x2 : grid) {
      if (!(x <= x2)) continue;
      for (const auto& y : grid) {
        ++report.cases;
        if (op(x, y) > op(x2, y) || op(y, x) > op(y, x2)) {
          fail("not monotone: x=" + x.str() + " x'=" + x2.str() + " y=" + y.str());
        }
      }
    }
  }
  ++report.cases;
  if (kind == NormKind::t_conorm) {
    if (!op(one, one).is_one()) fail("corner condition 1*1=1 fails");
  } else {
    if (!op(zero, zero).is_zero()) fail("corner condition 0*0=0 fails");
  }
  return report;
}

MassDistribution CaseGenerator::mass(const Frame& frame, bool normalized) {
  const std::size_t n = frame.subset_count();
  std::uniform_int_distribution<int> draw(-4, 8);
  for (;;) {
    std::vector<Rational> numerators(n);
    BigInt total = 0;
    for (std::size_t s = normalized ? 1 : 0; s < n; ++s) {
      const int v = std::max(0, draw(engine_));
      numerators[s] = Rational(v);
      total += v;
    }
    if (total.is_zero()) continue;
    const Rational sum{total, BigInt(1)};
    for (auto& v : numerators) v /= sum;
    return MassDistribution::from_values(frame, std::move(numerators));
  }
}

ProbabilityDistribution CaseGenerator::probability(const Frame& frame) {
  const std::size_t n = frame.size();
  std::uniform_int_distribution<int> draw(-2, 6);
  for (;;) {
    std::vector<Rational> atoms(n);
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int v = std::max(0, draw(engine_));
      atoms[i] = Rational(v);
      total += v;
    }
    if (total.is_zero()) continue;
    const Rational sum{total, BigInt(1)};
    for (auto& v : atoms) v /= sum;
    return ProbabilityDistribution(frame, std::move(atoms));
  }
}

WeightVector CaseGenerator::weights(const Frame& frame, bool allow_dogmatic) {
  const std::size_t n = frame.subset_count();
  constexpr unsigned kDen = 8;
  std::vector<Rational> w(n);
  for (Mask s = 0; s + 1 < n; ++s) {
    if (index(2) == 0) continue;  // keep roughly half the slots vacuous
    const unsigned top = allow_dogmatic ? kDen : kDen - 1;
    w[s] = Rational(static_cast<long long>(index(top + 1)), kDen);
  }
  return WeightVector::from_values(frame, std::move(w));
}

WeightVector CaseGenerator::raise_some(const WeightVector& w) {
  std::vector<Rational> out = w.values();
  const Mask universe = w.frame().universe();
  for (Mask s = 0; s < out.size(); ++s) {
    if (s == universe || index(2) == 0) continue;
    out[s] += (Rational(1) - out[s]) * unit_rational(4);
  }
  return WeightVector::from_values(w.frame(), std::move(out));
}

WeightVector CaseGenerator::lower_some(const WeightVector& w) {
  std::vector<Mask> positive;
  for (Mask s = 0; s < w.values().size(); ++s) {
    if (!w.values()[s].is_zero()) positive.push_back(s);
  }
  if (positive.empty()) throw Error("cannot lower a vacuous weight vector");
  std::vector<Rational> out = w.values();
  const Mask chosen = positive[index(positive.size())];
  out[chosen] *= Rational(static_cast<long long>(index(4)), 4);  // strictly smaller
  for (Mask s : positive) {
    if (s != chosen && index(4) == 0) out[s] *= unit_rational(4);
  }
  return WeightVector::from_values(w.frame(), std::move(out));
}

Rational CaseGenerator::unit_rational(unsigned max_denominator) {
  const auto den = static_cast<long long>(1 + index(max_denominator));
  const auto num = static_cast<long long>(index(static_cast<std::size_t>(den) + 1));
  return {num, den};
}

std::size_t CaseGenerator::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

std::vector<Rational> unit_grid(unsigned denominator) {
  std::vector<Rational> grid;
  for (unsigned i = 0; i <= denominator; ++i) {
    grid.emplace_back(static_cast<long long>(i), static_cast<long long>(denominator));
  }
  return grid;
}

std::vector<WeightVector> weight_grid(const Frame& frame, unsigned denominator) {
  const std::vector<Rational> grid = unit_grid(denominator);
  const std::size_t slots = frame.subset_count() - 1;  // everything but the universe
  std::vector<WeightVector> out;
  std::vector<std::size_t> pick(slots, 0);
  for (;;) {
    std::vector<Rational> w(frame.subset_count());
    for (std::size_t s = 0; s < slots; ++s) w[s] = grid[pick[s]];
    out.push_back(WeightVector::from_values(frame, std::move(w)));
    std::size_t carry = 0;
    while (carry < slots && ++pick[carry] == grid.size()) pick[carry++] = 0;
    if (carry == slots) break;
  }
  return out;
}

std::vector<LawReport> dempster_law_suite(std::size_t frame_size, std::size_t cases,
                                          std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);
  const MassDistribution vacuous = categorical(frame, frame.universe());
  const MassDistribution contradiction = categorical(frame, 0);
  const std::vector<MassDistribution> specials = {vacuous, contradiction, categorical(frame, 1)};

  LawReport commutes{"combination-commutative", cases, {}};
  LawReport associates{"combination-associative", cases, {}};
  LawReport neutral{"vacuous-neutral-for-combination", cases, {}};
  LawReport absorbing{"contradiction-absorbing-for-combination", cases, {}};
  LawReport oracle{"combination-agrees-with-convolution-oracle", cases, {}};
  LawReport q_route{"combination-agrees-with-commonality-product", cases, {}};

  for (std::size_t i = 0; i < cases; ++i) {
    const MassDistribution m1 = i < specials.size() ? specials[i] : gen.mass(frame);
    const MassDistribution m2 = gen.mass(frame);
    const MassDistribution m3 = gen.mass(frame);
    const std::string inputs =
        "m1 (" + describe(m1) + "), m2 (" + describe(m2) + "), m3 (" + describe(m3) + ")";

    const MassDistribution c12 = combine_unnormalized(m1, m2);
    if (c12 != combine_unnormalized(m2, m1)) {
      commutes.failures.push_back(inputs);
    }
    if (combine_unnormalized(c12, m3) != combine_unnormalized(m1, combine_unnormalized(m2, m3))) {
      associates.failures.push_back(inputs);
    }
    if (combine_unnormalized(m1, vacuous) != m1) {
      neutral.failures.push_back(inputs);
    }
    if (combine_unnormalized(m1, contradiction) != contradiction) {
      absorbing.failures.push_back(inputs);
    }
    const MassDistribution by_oracle = oracle_combine(m1, m2);
    if (by_oracle != c12) {
      oracle.failures.push_back(inputs + "; " + equation(describe(c12), describe(by_oracle)));
    }
    const SetFunction q1 = transform(m1, SetFunctionKind::commonality);
    const SetFunction q2 = transform(m2, SetFunctionKind::commonality);
    std::vector<Rational> product(q1.values().size());
    for (std::size_t s = 0; s < product.size(); ++s) {
      product[s] = q1.values()[s] * q2.values()[s];
    }
    const MassDistribution by_q =
        mass_from_transform(SetFunction(frame, SetFunctionKind::commonality, std::move(product)));
    if (by_q != c12) {
      q_route.failures.push_back(inputs + "; " + equation(describe(c12), describe(by_q)));
    }
  }
  return {commutes, associates, neutral, absorbing, oracle, q_route};
}

std::vector<LawReport> weight_combination_suite(std::size_t frame_size, std::size_t cases,
                                                std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);
  WeightVector all_one(frame);
  {
    std::vector<Rational> w(frame.subset_count(), Rational(1));
    w[frame.universe()] = Rational(0);
    all_one = WeightVector::from_values(frame, std::move(w));
  }
  const std::vector<WeightVector> specials = {
      WeightVector(frame), all_one, WeightVector(frame, {{0, Rational(1)}})};

  LawReport law{"weight-combination-matches-mass-combination", cases, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    const WeightVector w1 = i < specials.size() ? specials[i] : gen.weights(frame, true);
    const WeightVector w2 = gen.weights(frame, true);
    const MassDistribution via_weights = expand(combine_weights(w1, w2));
    const MassDistribution via_masses = combine_unnormalized(expand(w1), expand(w2));
    if (via_weights != via_masses) {
      law.failures.push_back("w1 (" + describe(w1) + "), w2 (" + describe(w2) + "); " +
                             equation(describe(via_weights), describe(via_masses)));
    }
  }
  return {law};
}

std::vector<LawReport> lattice_law_suite(std::size_t frame_size, std::size_t cases,
                                         std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);
  const WeightVector zero(frame);
  WeightVector ones(frame);
  {
    std::vector<Rational> w(frame.subset_count(), Rational(1));
    w[frame.universe()] = Rational(0);
    ones = WeightVector::from_values(frame, std::move(w));
  }

  LawReport conj_comm{"conjunction-commutative", cases, {}};
  LawReport conj_assoc{"conjunction-associative", cases, {}};
  LawReport conj_idem{"conjunction-idempotent", cases, {}};
  LawReport disj_comm{"disjunction-commutative", cases, {}};
  LawReport disj_assoc{"disjunction-associative", cases, {}};
  LawReport disj_idem{"disjunction-idempotent", cases, {}};
  LawReport absorption{"conjunction-disjunction-absorption", cases, {}};
  LawReport neutral{"vacuous-neutral-for-conjunction-top-neutral-for-disjunction", cases, {}};
  LawReport order{"conjunction-above-disjunction-below", cases, {}};

  for (std::size_t i = 0; i < cases; ++i) {
    const WeightVector a = i == 0 ? zero : (i == 1 ? ones : gen.weights(frame, true));
    const WeightVector b = gen.weights(frame, true);
    const WeightVector c = gen.weights(frame, true);
    const std::string inputs =
        "A (" + describe(a) + "), B (" + describe(b) + "), C (" + describe(c) + ")";

    if (conjoin_weights(a, b) != conjoin_weights(b, a)) conj_comm.failures.push_back(inputs);
    if (conjoin_weights(conjoin_weights(a, b), c) != conjoin_weights(a, conjoin_weights(b, c))) {
      conj_assoc.failures.push_back(inputs);
    }
    if (conjoin_weights(a, a) != a) conj_idem.failures.push_back(inputs);
    if (disjoin_weights(a, b) != disjoin_weights(b, a)) disj_comm.failures.push_back(inputs);
    if (disjoin_weights(disjoin_weights(a, b), c) != disjoin_weights(a, disjoin_weights(b, c))) {
      disj_assoc.failures.push_back(inputs);
    }
    if (disjoin_weights(a, a) != a) disj_idem.failures.push_back(inputs);
    if (conjoin_weights(a, disjoin_weights(a, b)) != a ||
        disjoin_weights(a, conjoin_weights(a, b)) != a) {
      absorption.failures.push_back(inputs);
    }
    if (conjoin_weights(a, zero) != a || disjoin_weights(a, ones) != a) {
      neutral.failures.push_back(inputs);
    }
    if (!leq_weights(a, conjoin_weights(a, b)) || !leq_weights(disjoin_weights(a, b), a)) {
      order.failures.push_back(inputs);
    }
  }
  return {conj_comm, conj_assoc, conj_idem, disj_comm,
          disj_assoc, disj_idem,  absorption, neutral,
          order};
}

std::vector<LawReport> decomposition_suite(std::size_t frame_size, std::size_t cases,
                                           std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);

  LawReport roundtrip{"decomposition-inverts-expansion", cases, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    const WeightVector w = i == 0 ? WeightVector(frame) : gen.weights(frame, false);
    const Decomposition d = decompose(expand(w));
    if (d.status != DecomposeStatus::decomposed || *d.weights != w) {
      roundtrip.failures.push_back("w (" + describe(w) + ") -> " +
                                   (d.status == DecomposeStatus::decomposed
                                        ? describe(*d.weights)
                                        : d.detail));
    }
  }

  LawReport dogmatic{"dogmatic-masses-refuse-decomposition", cases, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    MassDistribution m = categorical(frame, 0);
    if (i == 1) {
      m = categorical(frame, 1);
    } else if (i > 1) {
      // random mass, then all mass on the universe pushed onto the empty set
      const MassDistribution r = gen.mass(frame);
      std::vector<Rational> v = r.values();
      v[0] += v[frame.universe()];
      v[frame.universe()] = Rational(0);
      m = MassDistribution::from_values(frame, std::move(v));
    }
    if (decompose(m).status != DecomposeStatus::not_decomposable) {
      dogmatic.failures.push_back("m (" + describe(m) + ") unexpectedly decomposed");
    }
  }

  // A fixed Bayesian-style mass whose canonical weight on {} is -4/5.
  LawReport rejects{"non-separable-mass-rejected", 1, {}};
  {
    const Frame two = letter_frame(2);
    const MassDistribution m(two, {{1, Rational(2, 5)}, {2, Rational(2, 5)}, {3, Rational(1, 5)}});
    const Decomposition d = decompose(m);
    if (d.status != DecomposeStatus::not_separable) {
      rejects.failures.push_back("expected not-separable, got a different status");
    }
    if (canonical_weights(m)[0] != Rational(-4, 5)) {
      rejects.failures.push_back("canonical weight on {} is not -4/5");
    }
  }
  return {roundtrip, dogmatic, rejects};
}

std::vector<LawReport> arrow_soundness_suite(std::size_t frame_size, std::size_t cases,
                                             std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);

  LawReport found{"arrow-found-when-weights-rise", cases, {}};
  LawReport refused{"arrow-refused-when-weights-fall", cases, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    const WeightVector w = gen.weights(frame, false);
    const WeightVector target = conjoin_weights(w, gen.weights(frame, false));
    const auto arrow = arrow_exists_dempster(expand(w), expand(target), false);
    if (!arrow || !holds(*arrow)) {
      found.failures.push_back("w (" + describe(w) + ") -> target (" + describe(target) + ")");
    }

    WeightVector high = gen.weights(frame, false);
    while (high.is_vacuous()) high = gen.weights(frame, false);
    const WeightVector low = gen.lower_some(high);
    if (arrow_exists_dempster(expand(high), expand(low), false)) {
      refused.failures.push_back("unexpected arrow from (" + describe(high) + ") to (" +
                                 describe(low) + ")");
    }
  }
  return {found, refused};
}

std::vector<LawReport> extremal_object_suite(std::size_t frame_size, std::size_t cases,
                                             std::uint64_t seed) {
  const Frame frame = letter_frame(frame_size);
  CaseGenerator gen(seed);
  const MassDistribution vacuous = categorical(frame, frame.universe());
  const MassDistribution contradiction = categorical(frame, 0);

  std::vector<MassDistribution> open_samples = {vacuous, contradiction, categorical(frame, 1)};
  while (open_samples.size() < cases) open_samples.push_back(gen.mass(frame));
  std::vector<MassDistribution> normalized_samples = {vacuous, categorical(frame, 1)};
  while (normalized_samples.size() < cases) {
    normalized_samples.push_back(gen.mass(frame, /*normalized=*/true));
  }

  auto lift = [](const ExtremalReport& r, std::string law) {
    return LawReport{std::move(law), r.cases, r.failures};
  };

  std::vector<LawReport> out;
  out.push_back(lift(check_extremal(vacuous, open_samples, Direction::initial, false),
                     "vacuous-initial-in-unnormalized-category"));
  out.push_back(lift(check_extremal(vacuous, normalized_samples, Direction::initial, true),
                     "vacuous-initial-in-normalized-category"));
  out.push_back(lift(check_extremal(contradiction, open_samples, Direction::terminal, false),
                     "contradiction-terminal-in-unnormalized-logic"));

  // Boolean logic, exhaustively: the whole frame is the one initial object
  // and the empty set the one terminal object.
  std::vector<Subset> all_subsets;
  for (Mask s = 0; s <= frame.universe(); ++s) all_subsets.emplace_back(frame, s);
  out.push_back(lift(check_extremal(Subset(frame, frame.universe()), all_subsets,
                                    Direction::initial),
                     "universe-initial-in-boolean-logic"));
  out.push_back(lift(check_extremal(Subset(frame, 0), all_subsets, Direction::terminal),
                     "empty-set-terminal-in-boolean-logic"));
  {
    LawReport only{"no-other-boolean-subset-extremal", 0, {}};
    for (const auto& s : all_subsets) {
      if (s.bits() != frame.universe()) {
        ++only.cases;
        if (check_extremal(s, all_subsets, Direction::initial).passed()) {
          only.failures.push_back(s.text() + " unexpectedly initial");
        }
      }
      if (s.bits() != 0) {
        ++only.cases;
        if (check_extremal(s, all_subsets, Direction::terminal).passed()) {
          only.failures.push_back(s.text() + " unexpectedly terminal");
        }
      }
    }
    out.push_back(std::move(only));
  }

  // The Bayesian category has no initial object; the uniform prior cannot
  // reach (1/2, 1/4, 1/4) by conditioning.
  {
    const Frame three = letter_frame(3);
    const ProbabilityDistribution uniform(
        three, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    const ProbabilityDistribution unreachable(
        three, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    std::vector<ProbabilityDistribution> samples = {
        unreachable, ProbabilityDistribution(three, {Rational(1), Rational(0), Rational(0)})};
    while (samples.size() < cases) samples.push_back(gen.probability(three));
    const ExtremalReport inner = check_extremal(uniform, samples, Direction::initial);
    LawReport law{"bayes-uniform-not-initial", inner.cases, {}};
    const bool reproduced =
        std::any_of(inner.failures.begin(), inner.failures.end(), [&](const std::string& f) {
          return f.find(describe(unreachable)) != std::string::npos;
        });
    if (!reproduced) {
      law.failures.push_back("expected the counterexample (" + describe(unreachable) +
                             ") to defeat initiality, but it did not");
    }
    out.push_back(std::move(law));
  }
  return out;
}

std::vector<LawReport> universal_grid_suite(unsigned grid_denominator) {
  const Frame frame = letter_frame(2);
  const std::vector<WeightVector> grid = weight_grid(frame, grid_denominator);

  LawReport lub{"cautious-conjunction-is-least-upper-bound", 0, {}};
  LawReport glb{"bold-disjunction-is-greatest-lower-bound", 0, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      ++lub.cases;
      const LawReport c = check_universal(grid[i], grid[j], conjoin_weights(grid[i], grid[j]),
                                          grid, UniversalDirection::coproduct);
      for (const auto& f : c.failures) lub.failures.push_back(f);
      ++glb.cases;
      const LawReport d = check_universal(grid[i], grid[j], disjoin_weights(grid[i], grid[j]),
                                          grid, UniversalDirection::product);
      for (const auto& f : d.failures) glb.failures.push_back(f);
    }
  }
  return {lub, glb};
}

std::vector<LawReport> universal_random_suite(std::size_t triples, std::uint64_t seed) {
  const Frame frame = letter_frame(3);
  CaseGenerator gen(seed);
  LawReport lub{"cautious-conjunction-is-least-upper-bound (random)", triples, {}};
  LawReport glb{"bold-disjunction-is-greatest-lower-bound (random)", triples, {}};
  for (std::size_t i = 0; i < triples; ++i) {
    const WeightVector a = gen.weights(frame, true);
    const WeightVector b = gen.weights(frame, true);
    const std::vector<WeightVector> sample = {gen.weights(frame, true)};
    const LawReport c = check_universal(a, b, conjoin_weights(a, b), sample,
                                        UniversalDirection::coproduct);
    for (const auto& f : c.failures) lub.failures.push_back(f);
    const LawReport d =
        check_universal(a, b, disjoin_weights(a, b), sample, UniversalDirection::product);
    for (const auto& f : d.failures) glb.failures.push_back(f);
  }
  return {lub, glb};
}

LawReport combination_not_conjunction_demo() {
  const Frame frame = letter_frame(2);
  const WeightVector a(frame, {{1, Rational(1, 2)}});
  const WeightVector candidate = combine_weights(a, a);  // weight 3/4 on {a}
  const std::vector<WeightVector> sample = {a};
  const LawReport inner =
      check_universal(a, a, candidate, sample, UniversalDirection::coproduct);
  LawReport law{"combination-is-not-the-conjunction", 1, {}};
  const bool minimality_violated =
      std::any_of(inner.failures.begin(), inner.failures.end(),
                  [](const std::string& f) { return f.rfind("not minimal", 0) == 0; });
  if (!minimality_violated) {
    law.failures.push_back(
        "combine_weights(A, A) unexpectedly satisfied coproduct minimality against A");
  }
  return law;
}

std::vector<LawReport> norm_axiom_suite(unsigned grid_denominator) {
  const std::vector<Rational> grid = unit_grid(grid_denominator);
  const UnitOp probabilistic_sum = [](const Rational& x, const Rational& y) {
    return x + y - x * y;
  };
  const UnitOp maximum = [](const Rational& x, const Rational& y) { return max(x, y); };
  const UnitOp minimum = [](const Rational& x, const Rational& y) { return min(x, y); };
  return {
      check_norm_axioms(probabilistic_sum, NormKind::t_conorm, grid, "a+b-ab"),
      check_norm_axioms(maximum, NormKind::t_conorm, grid, "max"),
      check_norm_axioms(minimum, NormKind::t_norm, grid, "min"),
  };
}

}  // namespace dst
