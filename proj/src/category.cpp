#include "dst/category.hpp"

#include <algorithm>

#include "dst/errors.hpp"
#include "dst/simplex.hpp"

namespace dst {

namespace {

constexpr std::size_t kArrowDecisionCap = 4;  // frame elements

void require_small_frame(const Frame& frame) {
  if (frame.size() > kArrowDecisionCap) {
    throw FrameTooLarge("arrow decisions are exact only up to " +
                        std::to_string(kArrowDecisionCap) + " frame elements");
  }
}

// c[A][X] = sum of source(Y) over Y with X & Y == A; the combination
// e (x) source is then linear in e with these coefficients.
std::vector<std::vector<Rational>> convolution_coefficients(const MassDistribution& source) {
  const std::size_t n = source.values().size();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
  for (Mask x = 0; x < n; ++x) {
    for (Mask y = 0; y < n; ++y) {
      if (source.values()[y].is_zero()) continue;
      c[x & y][x] += source.values()[y];
    }
  }
  return c;
}

// Feasibility system for e (x) source == target over variables e_X >= 0.
lp::Problem unnormalized_system(const MassDistribution& source, const MassDistribution& target) {
  const std::size_t n = source.values().size();
  const auto c = convolution_coefficients(source);
  lp::Problem p;
  p.num_vars = n;
  for (Mask a = 0; a < n; ++a) {
    p.rows.push_back(c[a]);
    p.rhs.push_back(target.values()[a]);
  }
  p.rows.emplace_back(n, Rational(1));  // masses sum to one
  p.rhs.push_back(Rational(1));
  return p;
}

// Normalized variant: variables are e_X for X != {} (shifted down by one)
// plus a final conflict variable t = (e (x) source)({}).  The target equation
// for A != {} reads  sum_X e_X c[A][X] + target(A) t = target(A), so that the
// rescaled combination hits the target whenever t < 1.
lp::Problem normalized_system(const MassDistribution& source, const MassDistribution& target) {
  const std::size_t n = source.values().size();
  const auto c = convolution_coefficients(source);
  lp::Problem p;
  p.num_vars = n;  // n - 1 evidence coordinates + t
  for (Mask a = 0; a < n; ++a) {
    std::vector<Rational> row(n);
    for (Mask x = 1; x < n; ++x) row[x - 1] = c[a][x];
    if (a == 0) {
      row[n - 1] = Rational(-1);
      p.rhs.push_back(Rational(0));
    } else {
      row[n - 1] = target.values()[a];
      p.rhs.push_back(target.values()[a]);
    }
    p.rows.push_back(std::move(row));
  }
  std::vector<Rational> sum_row(n, Rational(1));
  sum_row[n - 1] = Rational(0);
  p.rows.push_back(std::move(sum_row));
  p.rhs.push_back(Rational(1));
  return p;
}

MassDistribution evidence_from_solution(const Frame& frame, const std::vector<Rational>& x,
                                        bool normalized) {
  std::vector<Rational> values(frame.subset_count());
  if (normalized) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i) values[i + 1] = x[i];
  } else {
    values = x;
  }
  return MassDistribution::from_values(frame, std::move(values));
}

std::string brief_failure(const std::string& what, const std::string& sample) {
  return what + " for sample (" + sample + ")";
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(Frame frame, std::vector<Rational> atoms)
    : frame_(std::move(frame)), atoms_(std::move(atoms)) {
  if (atoms_.size() != frame_.size()) {
    throw OutOfRange("probability needs exactly one atom value per frame element");
  }
  Rational sum;
  for (const auto& a : atoms_) {
    if (a < Rational(0)) throw OutOfRange("negative atom probability " + a.str());
    sum += a;
  }
  if (!sum.is_one()) throw SumNotOne("atom probabilities sum to " + sum.str() + ", expected 1");
}

Rational ProbabilityDistribution::event_probability(Mask subset) const {
  if (subset > frame_.universe()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  Rational sum;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (subset & (Mask{1} << i)) sum += atoms_[i];
  }
  return sum;
}

std::string describe(const ProbabilityDistribution& p) {
  std::string out;
  for (std::size_t i = 0; i < p.atoms().size(); ++i) {
    if (!out.empty()) out += ' ';
    out += p.frame().elements()[i] + ":" + p.atoms()[i].str();
  }
  return out;
}

bool holds(const DempsterArrow& a) {
  if (a.source.frame() != a.target.frame() || a.source.frame() != a.evidence.frame()) {
    return false;
  }
  if (!a.normalized) {
    return combine_unnormalized(a.evidence, a.source) == a.target;
  }
  if (!a.source.is_normalized() || !a.target.is_normalized() || !a.evidence.is_normalized()) {
    return false;
  }
  try {
    return combine_normalized(a.evidence, a.source).first == a.target;
  } catch (const TotalConflict&) {
    return false;
  }
}

bool holds(const BooleanArrow& a) {
  return a.source.frame() == a.target.frame() && a.source.frame() == a.evidence.frame() &&
         (a.evidence.bits() & a.source.bits()) == a.target.bits();
}

bool holds(const BayesArrow& a) {
  if (a.source.frame() != a.target.frame() || a.source.frame() != a.evidence.frame()) {
    return false;
  }
  if (a.source.event_probability(a.evidence.bits()).is_zero()) return false;
  return bayes_condition(a.source, a.evidence.bits()) == a.target;
}

DempsterArrow identity_arrow(const MassDistribution& m, bool normalized) {
  if (normalized && !m.is_normalized()) {
    throw NotNormalizedInput("identity arrow in the normalized category needs a normalized mass");
  }
  return {m, m, categorical(m.frame(), m.frame().universe()), normalized};
}

DempsterArrow compose(const DempsterArrow& first, const DempsterArrow& second) {
  if (first.normalized != second.normalized) {
    throw KindMismatch("cannot compose arrows of the two different Dempster categories");
  }
  if (first.target != second.source) {
    throw EndpointMismatch("middle objects of the composition differ");
  }
  MassDistribution evidence =
      first.normalized ? combine_normalized(first.evidence, second.evidence).first
                       : combine_unnormalized(first.evidence, second.evidence);
  DempsterArrow out{first.source, second.target, std::move(evidence), first.normalized};
  if (!holds(out)) {
    throw ValidationError("composite evidence does not map the source to the target");
  }
  return out;
}

BooleanArrow compose(const BooleanArrow& first, const BooleanArrow& second) {
  if (first.target != second.source) {
    throw EndpointMismatch("middle objects of the composition differ");
  }
  BooleanArrow out{first.source, second.target, intersect(first.evidence, second.evidence)};
  if (!holds(out)) {
    throw ValidationError("composite evidence does not map the source to the target");
  }
  return out;
}

BayesArrow compose(const BayesArrow& first, const BayesArrow& second) {
  if (first.target != second.source) {
    throw EndpointMismatch("middle objects of the composition differ");
  }
  BayesArrow out{first.source, second.target, intersect(first.evidence, second.evidence)};
  if (!holds(out)) {
    throw ValidationError("composite evidence does not map the source to the target");
  }
  return out;
}

std::optional<DempsterArrow> arrow_exists_dempster(const MassDistribution& source,
                                                   const MassDistribution& target,
                                                   bool normalized) {
  require_same_frame(source.frame(), target.frame());
  require_small_frame(source.frame());
  if (normalized && (!source.is_normalized() || !target.is_normalized())) {
    throw NotNormalizedInput("normalized-category arrows need normalized endpoints");
  }
  const Frame& frame = source.frame();

  // Canonical witnesses first: the identity, absorption into the total
  // contradiction, and evidence from total ignorance.
  if (source == target) return identity_arrow(source, normalized);
  if (!normalized && target == categorical(frame, 0)) {
    return DempsterArrow{source, target, categorical(frame, 0), false};
  }
  if (source == categorical(frame, frame.universe())) {
    DempsterArrow direct{source, target, target, normalized};
    if (holds(direct)) return direct;
  }

  if (!normalized) {
    auto solution = lp::feasible_point(unnormalized_system(source, target));
    if (solution.status != lp::Status::optimal) return std::nullopt;
    DempsterArrow out{source, target, evidence_from_solution(frame, solution.x, false), false};
    if (!holds(out)) throw Error("internal: simplex witness failed revalidation");
    return out;
  }

  // Minimize the conflict t; an arrow exists iff the system is feasible with
  // t strictly below 1.
  lp::Problem p = normalized_system(source, target);
  std::vector<Rational> cost(p.num_vars);
  cost[p.num_vars - 1] = Rational(1);
  auto solution = lp::minimize(p, cost);
  if (solution.status != lp::Status::optimal) return std::nullopt;
  if (solution.objective >= Rational(1)) return std::nullopt;
  DempsterArrow out{source, target, evidence_from_solution(frame, solution.x, true), true};
  if (!holds(out)) throw Error("internal: simplex witness failed revalidation");
  return out;
}

bool dempster_witness_unique(const MassDistribution& source, const MassDistribution& target,
                             bool normalized) {
  require_same_frame(source.frame(), target.frame());
  require_small_frame(source.frame());
  lp::Problem p =
      normalized ? normalized_system(source, target) : unnormalized_system(source, target);
  const std::size_t coords = normalized ? p.num_vars - 1 : p.num_vars;
  for (std::size_t i = 0; i < coords; ++i) {
    std::vector<Rational> cost(p.num_vars);
    cost[i] = Rational(1);
    auto low = lp::minimize(p, cost);
    cost[i] = Rational(-1);
    auto high = lp::minimize(p, cost);
    if (low.status != lp::Status::optimal || high.status != lp::Status::optimal) {
      throw Error("internal: uniqueness probe on an infeasible system");
    }
    if (low.objective != -high.objective) return false;
  }
  return true;
}

std::optional<BooleanArrow> boolean_hom(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  if (!contains(a, b)) return std::nullopt;
  return BooleanArrow{a, b, b};
}

std::pair<Subset, Subset> boolean_meet_join(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return {intersect(a, b), unite(a, b)};
}

ProbabilityDistribution bayes_condition(const ProbabilityDistribution& p, Mask subset) {
  const Rational total = p.event_probability(subset);
  if (total.is_zero()) {
    throw ZeroProbabilityEvidence("conditioning on an event of probability zero");
  }
  std::vector<Rational> atoms(p.atoms().size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (subset & (Mask{1} << i)) atoms[i] = p.atoms()[i] / total;
  }
  return ProbabilityDistribution(p.frame(), std::move(atoms));
}

std::optional<BayesArrow> bayes_arrow_exists(const ProbabilityDistribution& source,
                                             const ProbabilityDistribution& target) {
  require_same_frame(source.frame(), target.frame());
  const Frame& frame = source.frame();
  for (Mask x = 0; x <= frame.universe(); ++x) {
    if (source.event_probability(x).is_zero()) continue;
    if (bayes_condition(source, x) == target) {
      return BayesArrow{source, target, Subset(frame, x)};
    }
  }
  return std::nullopt;
}

ExtremalReport check_extremal(const MassDistribution& candidate,
                              std::span<const MassDistribution> samples, Direction direction,
                              bool normalized) {
  ExtremalReport report{describe(candidate), direction, samples.size(), {}};
  for (const auto& sample : samples) {
    if (direction == Direction::initial) {
      auto arrow = arrow_exists_dempster(candidate, sample, normalized);
      if (!arrow) {
        report.failures.push_back(brief_failure("no arrow", describe(sample)));
      } else if (!dempster_witness_unique(candidate, sample, normalized)) {
        report.failures.push_back(brief_failure("witness not unique", describe(sample)));
      }
    } else {
      if (!arrow_exists_dempster(sample, candidate, normalized)) {
        report.failures.push_back(brief_failure("no arrow", describe(sample)));
      }
    }
  }
  return report;
}

ExtremalReport check_extremal(const Subset& candidate, std::span<const Subset> samples,
                              Direction direction) {
  ExtremalReport report{candidate.text(), direction, samples.size(), {}};
  for (const auto& sample : samples) {
    const bool ok = direction == Direction::initial ? contains(candidate, sample)
                                                    : contains(sample, candidate);
    if (!ok) report.failures.push_back(brief_failure("no arrow", sample.text()));
  }
  return report;
}

ExtremalReport check_extremal(const ProbabilityDistribution& candidate,
                              std::span<const ProbabilityDistribution> samples,
                              Direction direction) {
  ExtremalReport report{describe(candidate), direction, samples.size(), {}};
  for (const auto& sample : samples) {
    const bool ok = direction == Direction::initial
                        ? bayes_arrow_exists(candidate, sample).has_value()
                        : bayes_arrow_exists(sample, candidate).has_value();
    if (!ok) report.failures.push_back(brief_failure("no arrow", describe(sample)));
  }
  return report;
}

}  // namespace dst
