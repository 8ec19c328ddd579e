#ifndef DST_COMBINATION_HPP
#define DST_COMBINATION_HPP

#include <utility>

#include "dst/mass.hpp"

namespace dst {

// Mass the unnormalized combination put on the empty set, i.e. the weight of
// the evidence pairs that contradict each other outright.
struct ConflictReport {
  Rational conflict;
  bool total_conflict = false;
};

// Unnormalized combination: the convolution of the two masses under subset
// intersection.  Computed through commonalities (pointwise product, then
// exact inversion), which is O(n 2^n); the literal double sum lives in the
// verify module as an independent oracle.
MassDistribution combine_unnormalized(const MassDistribution& a, const MassDistribution& b);

// Normalized combination: both inputs must already be normalized (no mass on
// the empty set; throws NotNormalizedInput otherwise).  The conflict K is
// stripped from the empty set and the rest rescaled by 1/(1-K).  Throws
// TotalConflict when K = 1.
std::pair<MassDistribution, ConflictReport> combine_normalized(const MassDistribution& a,
                                                               const MassDistribution& b);

// Conditioning on "the answer is in X": combination with the categorical
// mass 1{X}, optionally normalized.  The normalized form throws
// TotalConflict when X has zero plausibility under m.
MassDistribution condition(const MassDistribution& m, Mask subset, bool normalized);

}  // namespace dst

#endif  // DST_COMBINATION_HPP
