#ifndef DST_VERIFY_HPP
#define DST_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dst/category.hpp"
#include "dst/separable.hpp"

namespace dst {

// Outcome of checking one algebraic law over a finite sample.  A law passes
// iff no counterexample was found; reports always state how many cases ran,
// so a pass is never mistaken for a proof.
struct LawReport {
  std::string law;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // inputs plus both sides of the identity

  bool passed() const { return failures.empty(); }
};

// "PASS law (N cases)" or "FAIL law: first counterexample (k more)".
void render(std::ostream& out, const LawReport& report);
void render(std::ostream& out, std::span<const LawReport> reports);

// The literal double sum of the combination rule, kept deliberately
// independent of the transform-based fast path it cross-checks.
MassDistribution oracle_combine(const MassDistribution& a, const MassDistribution& b);

// Naive O(4^n) set-function transform, the oracle for the zeta-based one.
SetFunction oracle_transform(const MassDistribution& m, SetFunctionKind kind);

enum class UniversalDirection { coproduct, product };

// Checks the universal property of `candidate` for the pair (a, b) in the
// weight-vector preorder against a finite sample of objects: a coproduct
// must be an upper bound of a and b and below every common upper bound in
// the sample; a product dually.
LawReport check_universal(const WeightVector& a, const WeightVector& b,
                          const WeightVector& candidate, std::span<const WeightVector> sample,
                          UniversalDirection direction);

enum class NormKind { t_conorm, t_norm };

using UnitOp = std::function<Rational(const Rational&, const Rational&)>;

// Exhaustively checks the t-conorm (neutral 0, corner 1*1=1) or t-norm
// (neutral 1, corner 0*0=0) axioms over a grid: commutativity,
// associativity, neutrality, monotonicity in both arguments, corner.
// The grid must contain 0 and 1.
LawReport check_norm_axioms(const UnitOp& op, NormKind kind, std::span<const Rational> grid,
                            std::string_view op_name);

// Deterministic generator of random exact-rational test cases.  Masses are
// drawn as small nonnegative integers and normalized by their sum, so
// boundary cases (zero focal sets) occur naturally; suites additionally
// inject categorical and vacuous masses by hand.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

  MassDistribution mass(const Frame& frame, bool normalized = false);
  ProbabilityDistribution probability(const Frame& frame);
  WeightVector weights(const Frame& frame, bool allow_dogmatic);
  // Nondecreasing pointwise rescale of w toward 1 (for reachable targets).
  WeightVector raise_some(const WeightVector& w);
  // Pointwise <= w with at least one weight strictly lowered; w must not be
  // vacuous.
  WeightVector lower_some(const WeightVector& w);
  Rational unit_rational(unsigned max_denominator);
  std::size_t index(std::size_t bound);  // uniform in [0, bound)

 private:
  std::mt19937_64 engine_;
};

// {0, 1/d, 2/d, ..., 1}
std::vector<Rational> unit_grid(unsigned denominator);

// Every weight vector whose weights all lie on unit_grid(denominator);
// (d+1)^(2^n - 1) vectors, so only sensible for tiny frames.
std::vector<WeightVector> weight_grid(const Frame& frame, unsigned denominator);

// ---- Law suites -----------------------------------------------------------
//
// Each suite returns one report per law.  All sampling is seeded and the
// reports are deterministic functions of (frame size, case count, seed).

// Commutativity, associativity, neutrality of the vacuous mass, absorption
// by the total contradiction, and agreement of the fast combination with
// the double-sum oracle and with the commonality-product route.
std::vector<LawReport> dempster_law_suite(std::size_t frame_size, std::size_t cases,
                                          std::uint64_t seed);

// expand(combine_weights(u, v)) == combine_unnormalized(expand(u), expand(v)),
// with dogmatic weights included.
std::vector<LawReport> weight_combination_suite(std::size_t frame_size, std::size_t cases,
                                                std::uint64_t seed);

// Lattice laws of conjoin/disjoin: commutative, associative, idempotent,
// absorption, neutral elements (all-zero for conjoin, all-one for disjoin),
// and consistency with the weight order.
std::vector<LawReport> lattice_law_suite(std::size_t frame_size, std::size_t cases,
                                         std::uint64_t seed);

// decompose(expand(w)) == w for non-dogmatic w; masses without mass on the
// universe refuse decomposition; the canonical-weight test rejects a known
// non-separable mass whose weight on {} falls outside [0,1].
std::vector<LawReport> decomposition_suite(std::size_t frame_size, std::size_t cases,
                                           std::uint64_t seed);

// Weight order vs. arrow decision: pointwise increase implies an arrow with
// an exactly revalidating witness; a strict pointwise decrease between
// non-dogmatic vectors implies no arrow.
std::vector<LawReport> arrow_soundness_suite(std::size_t frame_size, std::size_t cases,
                                             std::uint64_t seed);

// Extremal objects: the vacuous mass is initial (with unique witnesses) in
// both Dempster categories; the total contradiction is terminal in the
// unnormalized logic; the whole frame is initial and the empty set terminal
// in the Boolean logic (exhaustive, including that no other subset is
// initial or terminal); the uniform prior fails to be initial in the
// Bayesian category.
std::vector<LawReport> extremal_object_suite(std::size_t frame_size, std::size_t cases,
                                             std::uint64_t seed);

// Exhaustive least-upper-bound / greatest-lower-bound verification of
// conjoin/disjoin over the full weight grid on a two-element frame.
std::vector<LawReport> universal_grid_suite(unsigned grid_denominator);

// Random universal-property triples on a three-element frame.
std::vector<LawReport> universal_random_suite(std::size_t triples, std::uint64_t seed);

// The combination rule is not idempotent, hence not the conjunction: for
// A = ({a}:1/2), combine_weights(A, A) fails coproduct minimality against
// A itself.  The report passes iff that violation is reproduced.
LawReport combination_not_conjunction_demo();

// a+b-ab and max satisfy the t-conorm axioms, min the t-norm axioms.
std::vector<LawReport> norm_axiom_suite(unsigned grid_denominator);

}  // namespace dst

#endif  // DST_VERIFY_HPP
