#ifndef DST_SEPARABLE_HPP
#define DST_SEPARABLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dst/combination.hpp"
#include "dst/mass.hpp"

namespace dst {

// A separable belief state written as exponents: one weight in [0, 1] per
// subset other than the universe, the weight on X being the alpha of the
// simple support X^alpha in the product.  The all-zero vector is the vacuous
// belief.  Weight-level operations never re-canonicalize: two vectors that
// expand to the same mass (possible once some weight reaches 1) stay
// distinct here, and belief-level questions go through expand().
class WeightVector {
 public:
  explicit WeightVector(Frame frame);  // all-zero
  WeightVector(Frame frame, const std::vector<std::pair<Mask, Rational>>& entries);
  static WeightVector from_values(Frame frame, std::vector<Rational> weights);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& values() const { return weights_; }
  const Rational& at(Mask subset) const;

  bool is_vacuous() const;   // all weights zero
  bool is_dogmatic() const;  // some weight equal to 1

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.frame_ == b.frame_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }

 private:
  Frame frame_;
  std::vector<Rational> weights_;  // dense over 2^n masks; the universe slot stays 0
};

// The mass the weight vector denotes: the unnormalized combination of the
// simple supports X^alpha over every X with positive weight.  The empty
// product is the vacuous belief.
MassDistribution expand(const WeightVector& w);

// Weight-level image of the unnormalized combination: pointwise
// a + b - a*b.  expand(combine_weights(u, v)) equals
// combine_unnormalized(expand(u), expand(v)) exactly.
WeightVector combine_weights(const WeightVector& a, const WeightVector& b);

// Cautious conjunction: pointwise max, the least upper bound in the
// weight-vector order.
WeightVector conjoin_weights(const WeightVector& a, const WeightVector& b);

// Bold disjunction: pointwise min, the greatest lower bound.
WeightVector disjoin_weights(const WeightVector& a, const WeightVector& b);

// The weight-vector order: a <= b pointwise.  Exactly the separable-evidence
// reachability order, since a + e - a*e = b is solvable with e in [0,1] iff
// a <= b.
bool leq_weights(const WeightVector& a, const WeightVector& b);

// The separable evidence realizing a -> b when leq_weights(a, b): weight
// (b - a)/(1 - a) per subset, or 0 where a = b = 1.  nullopt when no such
// evidence exists.
std::optional<WeightVector> weight_arrow_witness(const WeightVector& a, const WeightVector& b);

enum class DecomposeStatus {
  decomposed,
  not_decomposable,  // zero mass on the universe: canonical weights undefined
  not_separable,     // canonical weights exist but leave [0,1]
};

struct Decomposition {
  DecomposeStatus status;
  std::optional<WeightVector> weights;  // set iff status == decomposed
  std::string detail;                   // human-readable reason on failure
};

// Canonical exponents of m, defined whenever m(universe) > 0:
//   weight(A) = 1 - product over B containing A of q(B)^(+-1),
// the sign alternating with |B| - |A|.  Values may leave [0,1]; the
// decomposition below rejects those as not separable.
std::vector<Rational> canonical_weights(const MassDistribution& m);

// Inverse of expand on its image: recovers the unique weight vector of a
// separable, non-dogmatic mass, so decompose(expand(w)) == w whenever every
// weight of w is below 1.
Decomposition decompose(const MassDistribution& m);

// One-line rendering of the nonzero weights, "(vacuous)" when all are zero.
std::string describe(const WeightVector& w);

}  // namespace dst

#endif  // DST_SEPARABLE_HPP
