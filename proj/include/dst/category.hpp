#ifndef DST_CATEGORY_HPP
#define DST_CATEGORY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dst/combination.hpp"
#include "dst/mass.hpp"

namespace dst {

// Objects of the Bayesian category: an exact probability per frame element.
class ProbabilityDistribution {
 public:
  ProbabilityDistribution(Frame frame, std::vector<Rational> atoms);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& atoms() const { return atoms_; }
  Rational event_probability(Mask subset) const;

  friend bool operator==(const ProbabilityDistribution& a, const ProbabilityDistribution& b) {
    return a.frame_ == b.frame_ && a.atoms_ == b.atoms_;
  }
  friend bool operator!=(const ProbabilityDistribution& a, const ProbabilityDistribution& b) {
    return !(a == b);
  }

 private:
  Frame frame_;
  std::vector<Rational> atoms_;
};

// One-line rendering, e.g. "a:1/2 b:1/4 c:1/4".
std::string describe(const ProbabilityDistribution& p);

// An arrow of one of the belief categories together with the evidence that
// realizes it.  Every constructor and every composition revalidates the
// defining identity, so a witness in hand is always a proof.

struct DempsterArrow {
  MassDistribution source;
  MassDistribution target;
  MassDistribution evidence;
  bool normalized = false;  // which of the two Dempster categories
};

struct BooleanArrow {
  Subset source;
  Subset target;
  Subset evidence;
};

struct BayesArrow {
  ProbabilityDistribution source;
  ProbabilityDistribution target;
  Subset evidence;
};

// True iff the evidence really maps source to target.
bool holds(const DempsterArrow& a);
bool holds(const BooleanArrow& a);
bool holds(const BayesArrow& a);

DempsterArrow identity_arrow(const MassDistribution& m, bool normalized);

// Composition as evidence combination (intersection for subsets).  Throws
// EndpointMismatch when the middle objects differ and KindMismatch when one
// Dempster arrow is normalized and the other is not.
DempsterArrow compose(const DempsterArrow& first, const DempsterArrow& second);
BooleanArrow compose(const BooleanArrow& first, const BooleanArrow& second);
BayesArrow compose(const BayesArrow& first, const BayesArrow& second);

// Decides whether any evidence combines with `source` to give `target`,
// exactly, by phase-one simplex over the evidence masses (the constraint
// system is linear once the source is fixed).  Returns one witness when
// feasible.  In the normalized category the evidence must itself be
// normalized and the combination must not be totally conflicting.
//
// Exact but sized for small frames: throws FrameTooLarge above 4 elements.
std::optional<DempsterArrow> arrow_exists_dempster(const MassDistribution& source,
                                                   const MassDistribution& target,
                                                   bool normalized);

// True iff the evidence mass realizing source -> target is unique, decided
// by minimizing and maximizing every coordinate over the feasible set.
// Requires that an arrow exists.
bool dempster_witness_unique(const MassDistribution& source, const MassDistribution& target,
                             bool normalized);

// Boolean category: X : A -> B iff X intersected with A equals B, so an
// arrow exists iff B is a subset of A, with X = B as witness.
std::optional<BooleanArrow> boolean_hom(const Subset& a, const Subset& b);

// In the Boolean logic (the preorder of reverse inclusion) the coproduct of
// A and B is the intersection and the product is the union.
std::pair<Subset, Subset> boolean_meet_join(const Subset& a, const Subset& b);

// Conditionalization: renormalize inside X, zero outside.  Throws
// ZeroProbabilityEvidence when P(X) = 0.
ProbabilityDistribution bayes_condition(const ProbabilityDistribution& p, Mask subset);

// Searches every subset of positive probability, in increasing mask order,
// for one that conditions `source` into `target`.
std::optional<BayesArrow> bayes_arrow_exists(const ProbabilityDistribution& source,
                                             const ProbabilityDistribution& target);

enum class Direction { initial, terminal };

// Sampled extremal-object check: `initial` asks for an arrow from the
// candidate to every sample, `terminal` for an arrow from every sample to
// the candidate.  Never a proof, always "passed on N samples".
struct ExtremalReport {
  std::string subject;
  Direction direction = Direction::initial;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Dempster categories; initial-direction checks also demand a unique witness.
ExtremalReport check_extremal(const MassDistribution& candidate,
                              std::span<const MassDistribution> samples, Direction direction,
                              bool normalized);
// Boolean logic.
ExtremalReport check_extremal(const Subset& candidate, std::span<const Subset> samples,
                              Direction direction);
// Bayesian category.
ExtremalReport check_extremal(const ProbabilityDistribution& candidate,
                              std::span<const ProbabilityDistribution> samples,
                              Direction direction);

}  // namespace dst

#endif  // DST_CATEGORY_HPP
