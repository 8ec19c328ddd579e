#include "dst/separable.hpp"

#include <algorithm>

#include "dst/errors.hpp"

namespace dst {

namespace {

void validate_weights(const Frame& frame, const std::vector<Rational>& weights) {
  if (weights.size() != frame.subset_count()) {
    throw OutOfRange("dense weight array has wrong length for the frame");
  }
  if (!weights[frame.universe()].is_zero()) {
    throw OutOfRange("the universe carries no weight in a separable representation");
  }
  for (const auto& w : weights) {
    if (!w.in_unit_interval()) {
      throw OutOfRange("weight " + w.str() + " outside [0,1]");
    }
  }
}

}  // namespace

WeightVector::WeightVector(Frame frame)
    : frame_(std::move(frame)), weights_(frame_.subset_count()) {}

WeightVector::WeightVector(Frame frame, const std::vector<std::pair<Mask, Rational>>& entries)
    : frame_(std::move(frame)), weights_(frame_.subset_count()) {
  std::vector<bool> seen(weights_.size(), false);
  for (const auto& [mask, value] : entries) {
    if (mask >= weights_.size()) {
      throw FrameMismatch("subset mask " + std::to_string(mask) + " is not on the frame");
    }
    if (seen[mask]) {
      throw DuplicateEntry("subset " + frame_.subset_text(mask) + " assigned twice");
    }
    seen[mask] = true;
    weights_[mask] = value;
  }
  validate_weights(frame_, weights_);
}

WeightVector WeightVector::from_values(Frame frame, std::vector<Rational> weights) {
  validate_weights(frame, weights);
  WeightVector w(frame);
  w.weights_ = std::move(weights);
  return w;
}

const Rational& WeightVector::at(Mask subset) const {
  if (subset >= weights_.size()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  return weights_[subset];
}

bool WeightVector::is_vacuous() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w.is_zero(); });
}

bool WeightVector::is_dogmatic() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w.is_one(); });
}

MassDistribution expand(const WeightVector& w) {
  // q of X^alpha is 1 on subsets of X and 1-alpha elsewhere, and q is
  // multiplicative under combination, so the product needs one pass per
  // positive weight.
  const Frame& frame = w.frame();
  std::vector<Rational> q(frame.subset_count(), Rational(1));
  for (Mask x = 0; x < q.size(); ++x) {
    const Rational& alpha = w.values()[x];
    if (alpha.is_zero()) continue;
    const Rational factor = Rational(1) - alpha;
    for (Mask s = 0; s < q.size(); ++s) {
      if ((s & x) != s) q[s] *= factor;  // s not a subset of x
    }
  }
  superset_sums_invert_in_place(q);
  return MassDistribution::from_values(frame, std::move(q));
}

WeightVector combine_weights(const WeightVector& a, const WeightVector& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Rational> out(a.values().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Rational& x = a.values()[s];
    const Rational& y = b.values()[s];
    out[s] = x + y - x * y;
  }
  return WeightVector::from_values(a.frame(), std::move(out));
}

WeightVector conjoin_weights(const WeightVector& a, const WeightVector& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Rational> out(a.values().size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = max(a.values()[s], b.values()[s]);
  return WeightVector::from_values(a.frame(), std::move(out));
}

WeightVector disjoin_weights(const WeightVector& a, const WeightVector& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Rational> out(a.values().size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = min(a.values()[s], b.values()[s]);
  return WeightVector::from_values(a.frame(), std::move(out));
}

bool leq_weights(const WeightVector& a, const WeightVector& b) {
  require_same_frame(a.frame(), b.frame());
  for (std::size_t s = 0; s < a.values().size(); ++s) {
    if (a.values()[s] > b.values()[s]) return false;
  }
  return true;
}

std::optional<WeightVector> weight_arrow_witness(const WeightVector& a, const WeightVector& b) {
  if (!leq_weights(a, b)) return std::nullopt;
  std::vector<Rational> out(a.values().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Rational& x = a.values()[s];
    const Rational& y = b.values()[s];
    if (x.is_one()) continue;  // y is 1 as well; weight 0 already works
    out[s] = (y - x) / (Rational(1) - x);
  }
  return WeightVector::from_values(a.frame(), std::move(out));
}

std::vector<Rational> canonical_weights(const MassDistribution& m) {
  const Mask universe = m.frame().universe();
  if (m.values()[universe].is_zero()) {
    throw OutOfRange("canonical weights need positive mass on the universe");
  }
  std::vector<Rational> q = m.values();
  superset_sums_in_place(q);  // all entries positive since m(universe) > 0

  // Multiplicative superset Moebius: v[A] = product over B containing A of
  // q(B)^((-1)^|B-A|).  The canonical weight is then 1 - 1/v[A].
  for (std::size_t bit = 1; bit < q.size(); bit <<= 1) {
    for (std::size_t s = 0; s < q.size(); ++s) {
      if (!(s & bit)) q[s] /= q[s | bit];
    }
  }
  std::vector<Rational> weights(q.size());
  for (Mask s = 0; s < q.size(); ++s) {
    if (s == universe) continue;
    weights[s] = Rational(1) - Rational(1) / q[s];
  }
  return weights;
}

std::string describe(const WeightVector& w) {
  std::string out;
  for (Mask s = 0; s < w.values().size(); ++s) {
    if (w.values()[s].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += w.frame().subset_text(s) + ":" + w.values()[s].str();
  }
  return out.empty() ? "(vacuous)" : out;
}

Decomposition decompose(const MassDistribution& m) {
  if (m.values()[m.frame().universe()].is_zero()) {
    return {DecomposeStatus::not_decomposable, std::nullopt,
            "zero mass on the whole frame: no canonical weights"};
  }
  std::vector<Rational> weights = canonical_weights(m);
  for (Mask s = 0; s < weights.size(); ++s) {
    if (!weights[s].in_unit_interval()) {
      return {DecomposeStatus::not_separable, std::nullopt,
              "canonical weight on " + m.frame().subset_text(s) + " is " + weights[s].str() +
                  ", outside [0,1]"};
    }
  }
  return {DecomposeStatus::decomposed,
          WeightVector::from_values(m.frame(), std::move(weights)), ""};
}

}  // namespace dst
