#ifndef DST_MASS_HPP
#define DST_MASS_HPP

#include <string>
#include <utility>
#include <vector>

#include "dst/frame.hpp"
#include "dst/rational.hpp"

namespace dst {

// A mass distribution on a frame: one Rational per subset, all in [0, 1],
// summing to exactly 1.  Mass on the empty set is allowed; a distribution
// with zero mass on the empty set is called normalized and is the only kind
// admitted by the normalized combination rule.
//
// Storage is a dense array of length 2^n indexed by subset mask.  Values are
// immutable after construction.
class MassDistribution {
 public:
  // Builds from an explicit focal-element list; unlisted subsets get mass 0.
  // Throws FrameMismatch (mask out of range), DuplicateEntry, OutOfRange
  // (value outside [0,1]) or SumNotOne.
  MassDistribution(Frame frame, const std::vector<std::pair<Mask, Rational>>& entries);

  // Builds from a dense value array of length 2^n; same validation.
  static MassDistribution from_values(Frame frame, std::vector<Rational> values);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(Mask subset) const;

  bool is_normalized() const { return values_[0].is_zero(); }

  // Focal elements in increasing mask order.
  std::vector<Mask> focal_elements() const;

  friend bool operator==(const MassDistribution& a, const MassDistribution& b) {
    return a.frame_ == b.frame_ && a.values_ == b.values_;
  }
  friend bool operator!=(const MassDistribution& a, const MassDistribution& b) { return !(a == b); }

 private:
  MassDistribution(Frame frame, std::vector<Rational> values, int);  // unchecked

  Frame frame_;
  std::vector<Rational> values_;

  friend MassDistribution combine_unnormalized(const MassDistribution&, const MassDistribution&);
  friend class WeightVector;
};

// The categorical mass 1{X}: all mass on the single subset X.  1{universe}
// is the vacuous belief, 1{empty} the total contradiction.
MassDistribution categorical(const Frame& frame, Mask subset);

// Simple support X^alpha: mass alpha on X (X != universe) and 1 - alpha on
// the universe.  alpha must be in [0, 1].
MassDistribution simple_support(const Frame& frame, Mask subset, const Rational& alpha);

enum class SetFunctionKind { belief, plausibility, commonality };

std::string_view kind_name(SetFunctionKind kind);  // "bel", "pl", "q"

// A set function derived from a mass distribution:
//   belief       bel(A) = sum of m(X) over nonempty X contained in A
//   plausibility pl(A)  = sum of m(X) over X meeting A
//   commonality  q(A)   = sum of m(X) over X containing A
// Note bel(universe) = 1 - m(empty): the empty set never counts as support.
class SetFunction {
 public:
  SetFunction(Frame frame, SetFunctionKind kind, std::vector<Rational> values);

  const Frame& frame() const { return frame_; }
  SetFunctionKind kind() const { return kind_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(Mask subset) const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.kind_ == b.kind_ && a.frame_ == b.frame_ && a.values_ == b.values_;
  }
  friend bool operator!=(const SetFunction& a, const SetFunction& b) { return !(a == b); }

 private:
  Frame frame_;
  SetFunctionKind kind_;
  std::vector<Rational> values_;
};

// Exact forward transform, O(n 2^n) via in-place zeta recurrences.
SetFunction transform(const MassDistribution& m, SetFunctionKind kind);

// Exact inverse for belief and commonality inputs (Moebius inversion); the
// round trip transform(mass_from_transform(f), f.kind()) == f is an identity.
// Throws NotAValidTransform when no valid mass yields f (including any
// plausibility input, which this operation does not accept).
MassDistribution mass_from_transform(const SetFunction& f);

// One-line rendering of the focal elements, e.g. "{}:1/6 {a}:1/3 {a b}:1/2".
std::string describe(const MassDistribution& m);

// Zeta/Moebius recurrences on dense power-set arrays, shared by the
// transform code and the separable-weight machinery.
void subset_sums_in_place(std::vector<Rational>& a);        // a'[S] = sum over X subset of S
void subset_sums_invert_in_place(std::vector<Rational>& a);
void superset_sums_in_place(std::vector<Rational>& a);      // a'[S] = sum over X superset of S
void superset_sums_invert_in_place(std::vector<Rational>& a);

}  // namespace dst

#endif  // DST_MASS_HPP
