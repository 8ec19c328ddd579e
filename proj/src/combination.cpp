#include "dst/combination.hpp"

#include "dst/errors.hpp"

namespace dst {

namespace {

MassDistribution normalize_away_conflict(MassDistribution u) {
  const Rational conflict = u.values()[0];
  if (conflict.is_one()) throw TotalConflict("the combined evidence is totally contradictory");
  std::vector<Rational> values = u.values();
  const Rational scale = Rational(1) - conflict;
  values[0] = Rational(0);
  for (std::size_t s = 1; s < values.size(); ++s) values[s] /= scale;
  return MassDistribution::from_values(u.frame(), std::move(values));
}

}  // namespace

MassDistribution combine_unnormalized(const MassDistribution& a, const MassDistribution& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Rational> qa = a.values();
  std::vector<Rational> qb = b.values();
  superset_sums_in_place(qa);
  superset_sums_in_place(qb);
  for (std::size_t s = 0; s < qa.size(); ++s) qa[s] *= qb[s];
  superset_sums_invert_in_place(qa);
  return MassDistribution::from_values(a.frame(), std::move(qa));
}

std::pair<MassDistribution, ConflictReport> combine_normalized(const MassDistribution& a,
                                                               const MassDistribution& b) {
  require_same_frame(a.frame(), b.frame());
  if (!a.is_normalized() || !b.is_normalized()) {
    throw NotNormalizedInput("normalized combination requires inputs with zero mass on {}");
  }
  MassDistribution u = combine_unnormalized(a, b);
  ConflictReport report{u.values()[0], u.values()[0].is_one()};
  if (report.total_conflict) {
    throw TotalConflict("totally conflicting evidence (K = 1)");
  }
  return {normalize_away_conflict(std::move(u)), std::move(report)};
}

MassDistribution condition(const MassDistribution& m, Mask subset, bool normalized) {
  MassDistribution u = combine_unnormalized(m, categorical(m.frame(), subset));
  if (!normalized) return u;
  if (u.values()[0].is_one()) {
    throw TotalConflict("conditioning on a subset with zero plausibility");
  }
  return normalize_away_conflict(std::move(u));
}

}  // namespace dst
