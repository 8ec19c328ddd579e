#include "dst/mass.hpp"

#include <numeric>

#include "dst/errors.hpp"

namespace dst {

namespace {

void validate_values(const Frame& frame, const std::vector<Rational>& values) {
  if (values.size() != frame.subset_count()) {
    throw OutOfRange("dense mass array has wrong length for the frame");
  }
  Rational sum;
  for (const auto& v : values) {
    if (!v.in_unit_interval()) {
      throw OutOfRange("mass value " + v.str() + " outside [0,1]");
    }
    sum += v;
  }
  if (!sum.is_one()) {
    throw SumNotOne("masses sum to " + sum.str() + ", expected exactly 1");
  }
}

}  // namespace

MassDistribution::MassDistribution(Frame frame, std::vector<Rational> values, int)
    : frame_(std::move(frame)), values_(std::move(values)) {}

MassDistribution::MassDistribution(Frame frame,
                                   const std::vector<std::pair<Mask, Rational>>& entries)
    : frame_(std::move(frame)), values_(frame_.subset_count()) {
  std::vector<bool> seen(values_.size(), false);
  for (const auto& [mask, value] : entries) {
    if (mask >= values_.size()) {
      throw FrameMismatch("subset mask " + std::to_string(mask) + " is not on the frame");
    }
    if (seen[mask]) {
      throw DuplicateEntry("subset " + frame_.subset_text(mask) + " assigned twice");
    }
    seen[mask] = true;
    values_[mask] = value;
  }
  validate_values(frame_, values_);
}

MassDistribution MassDistribution::from_values(Frame frame, std::vector<Rational> values) {
  validate_values(frame, values);
  return MassDistribution(std::move(frame), std::move(values), 0);
}

const Rational& MassDistribution::at(Mask subset) const {
  if (subset >= values_.size()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  return values_[subset];
}

std::vector<Mask> MassDistribution::focal_elements() const {
  std::vector<Mask> out;
  for (Mask s = 0; s < values_.size(); ++s) {
    if (!values_[s].is_zero()) out.push_back(s);
  }
  return out;
}

MassDistribution categorical(const Frame& frame, Mask subset) {
  if (subset > frame.universe()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  std::vector<Rational> values(frame.subset_count());
  values[subset] = Rational(1);
  return MassDistribution::from_values(frame, std::move(values));
}

MassDistribution simple_support(const Frame& frame, Mask subset, const Rational& alpha) {
  if (subset > frame.universe()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  if (subset == frame.universe()) {
    throw OutOfRange("a simple support must be focused on a proper subset");
  }
  if (!alpha.in_unit_interval()) {
    throw OutOfRange("support weight " + alpha.str() + " outside [0,1]");
  }
  std::vector<Rational> values(frame.subset_count());
  values[subset] = alpha;
  values[frame.universe()] = Rational(1) - alpha;
  return MassDistribution::from_values(frame, std::move(values));
}

std::string describe(const MassDistribution& m) {
  std::string out;
  for (Mask s = 0; s < m.values().size(); ++s) {
    if (m.values()[s].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += m.frame().subset_text(s) + ":" + m.values()[s].str();
  }
  return out;
}

std::string_view kind_name(SetFunctionKind kind) {
  switch (kind) {
    case SetFunctionKind::belief: return "bel";
    case SetFunctionKind::plausibility: return "pl";
    case SetFunctionKind::commonality: return "q";
  }
  return "?";
}

SetFunction::SetFunction(Frame frame, SetFunctionKind kind, std::vector<Rational> values)
    : frame_(std::move(frame)), kind_(kind), values_(std::move(values)) {
  if (values_.size() != frame_.subset_count()) {
    throw OutOfRange("set-function array has wrong length for the frame");
  }
}

const Rational& SetFunction::at(Mask subset) const {
  if (subset >= values_.size()) {
    throw FrameMismatch("subset mask " + std::to_string(subset) + " is not on the frame");
  }
  return values_[subset];
}

void subset_sums_in_place(std::vector<Rational>& a) {
  for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] += a[s ^ bit];
    }
  }
}

void subset_sums_invert_in_place(std::vector<Rational>& a) {
  for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
}

void superset_sums_in_place(std::vector<Rational>& a) {
  for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!(s & bit)) a[s] += a[s | bit];
    }
  }
}

void superset_sums_invert_in_place(std::vector<Rational>& a) {
  for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!(s & bit)) a[s] -= a[s | bit];
    }
  }
}

SetFunction transform(const MassDistribution& m, SetFunctionKind kind) {
  const Frame& frame = m.frame();
  std::vector<Rational> a = m.values();
  switch (kind) {
    case SetFunctionKind::belief: {
      const Rational empty_mass = a[0];
      subset_sums_in_place(a);
      for (auto& v : a) v -= empty_mass;
      break;
    }
    case SetFunctionKind::commonality: {
      superset_sums_in_place(a);
      break;
    }
    case SetFunctionKind::plausibility: {
      // pl(A) = 1 - sum of m(X) over X disjoint from A = 1 - subset_sum(complement A)
      subset_sums_in_place(a);
      const Mask universe = frame.universe();
      std::vector<Rational> pl(a.size());
      for (Mask s = 0; s < pl.size(); ++s) {
        pl[s] = Rational(1) - a[(~s) & universe];
      }
      a = std::move(pl);
      break;
    }
  }
  return SetFunction(frame, kind, std::move(a));
}

MassDistribution mass_from_transform(const SetFunction& f) {
  const Frame& frame = f.frame();
  std::vector<Rational> a = f.values();
  switch (f.kind()) {
    case SetFunctionKind::belief: {
      if (!a[0].is_zero()) {
        throw NotAValidTransform("belief function must vanish on the empty set");
      }
      const Rational empty_mass = Rational(1) - a[frame.universe()];
      for (auto& v : a) v += empty_mass;
      subset_sums_invert_in_place(a);
      break;
    }
    case SetFunctionKind::commonality: {
      if (!a[0].is_one()) {
        throw NotAValidTransform("commonality function must equal 1 on the empty set");
      }
      superset_sums_invert_in_place(a);
      break;
    }
    case SetFunctionKind::plausibility:
      throw NotAValidTransform("plausibility input is not accepted; invert bel or q instead");
  }
  Rational sum;
  for (const auto& v : a) {
    if (v < Rational(0)) {
      throw NotAValidTransform("recovered mass " + v.str() + " is negative");
    }
    sum += v;
  }
  if (!sum.is_one()) {
    throw NotAValidTransform("recovered masses sum to " + sum.str() + ", expected 1");
  }
  return MassDistribution::from_values(frame, std::move(a));
}

}  // namespace dst
