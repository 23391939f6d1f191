#ifndef CRN_LIE_ENGINE_HPP
#define CRN_LIE_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/polynomial.hpp"

namespace crn {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr int kDefaultTrials = 5;
inline constexpr int kDefaultSamplePoints = 5;

/// g_r : x -> gamma(.,r) * x^alpha(.,r).
PolyVectorField step_field(const ReactionNetwork& net, int r);

/// sum over the given steps of k_n * g_n, with k_n symbolic.
PolyVectorField drift_field(const ReactionNetwork& net, const std::vector<int>& steps);

/// Input-affine mass-action system: xdot = f(x) + sum_i g_i(x) u_i.
/// With all steps as inputs the drift is zero.
struct MassActionSystem {
  ReactionNetwork network;
  InputSet inputs;
  PolyVectorField drift;                   // f = sum_{n in N} k_n g_n
  std::vector<PolyVectorField> controls;   // g_i, aligned with inputs.indices
};

MassActionSystem build_system(const ReactionNetwork& net, const InputSet& inputs);

/// Classification of [g_i, g_j] from the two Hadamard tests
/// alpha(.,i) (*) gamma(.,j) and alpha(.,j) (*) gamma(.,i):
///   Zero    the bracket is the zero field: both tests vanish, or the step
///           fields are proportional (a degenerate alignment the Hadamard
///           tests alone cannot see).
///   MinusI  only the first is nonzero: bracket = -kappa_{i,j} x^alpha(.,j) gamma(.,i).
///   PlusJ   only the second is nonzero: bracket = +kappa_{j,i} x^alpha(.,i) gamma(.,j).
///   Mixed   both nonzero: the genuine two-column combination.
/// Zero <=> the symbolic bracket vanishes, exactly.
enum class BracketClass { Zero, MinusI, PlusJ, Mixed };

BracketClass structural_bracket_class(const ReactionNetwork& net, int i, int j);

/// Bracket expression tree, printed in paper notation: "g2", "[f,g1]",
/// "[g1,[f,g1]]". Cheap to copy.
class Provenance {
 public:
  static Provenance drift();
  static Provenance control(int step_index);  // prints 1-based
  static Provenance bracket(const Provenance& left, const Provenance& right);
  std::string str() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct BasisField {
  PolyVectorField field;
  Provenance provenance;
  int depth = 0;  // bracket nesting depth; generators g_i have depth 0
};

/// Generated spanning set for the controllability distribution, with the
/// sample points the closure used for admission.
struct DistributionBasis {
  std::vector<BasisField> fields;
  int depth_reached = 0;
  bool saturated = false;   // worklist exhausted with no depth-cap skips
  int pruned_count = 0;     // zero or span-redundant candidates discarded
  std::vector<RationalPoint> sample_points;
};

struct ClosureOptions {
  int depth_cap;
  std::uint64_t seed = kDefaultSeed;
  int sample_points = kDefaultSamplePoints;
  /// Extra admission points, e.g. the point of a pointwise rank query.
  /// Coordinates may be zero or negative.
  std::vector<RationalPoint> extra_points;
};

/// 2*M; comfortably above the depth the consecutive-chain argument needs.
int default_depth_cap(const ReactionNetwork& net);

/// Worklist closure of Lie({g_i} u {[f,g_i]}) under bracketing with f and
/// with every other admitted field. A candidate is kept only when it grows
/// the evaluated span at one of the sample points. Deterministic in the seed.
DistributionBasis generate_distribution(const MassActionSystem& sys,
                                        const ClosureOptions& options);

struct RankTrial {
  RationalPoint point;
  int rank = 0;

  bool operator==(const RankTrial&) const = default;
};

struct RankVerdict {
  int generic_rank = 0;
  int target = 0;  // rank gamma
  bool controllable_ae = false;
  std::vector<RankTrial> trials;
  std::uint64_t seed = kDefaultSeed;
  int depth_reached = 0;
  bool saturated = false;

  bool operator==(const RankVerdict&) const = default;
};

/// Evaluates the basis at `trials` strictly positive random rational points
/// and takes the maximum exact rank; by the polynomial-identity argument one
/// full-rank witness certifies the almost-everywhere lower bound.
RankVerdict generic_rank(const DistributionBasis& basis, const ReactionNetwork& net,
                         int trials, std::uint64_t seed);

struct PointRank {
  int rank = 0;
  /// Provenance strings of a spanning subset achieving the rank.
  std::vector<std::string> certificate;
};

/// Exact rank of the evaluated basis at an arbitrary point (zero or negative
/// coordinates allowed).
PointRank rank_at_point(const DistributionBasis& basis, const RationalPoint& point);

/// Strictly positive point with numerators/denominators uniform in [1, 10^6].
RationalPoint random_positive_point(const ReactionNetwork& net, SplitMix64& rng);

struct AnalysisOptions {
  int trials = kDefaultTrials;
  int depth_cap = 0;  // 0 means 2*M
  std::uint64_t seed = kDefaultSeed;
  int sample_points = kDefaultSamplePoints;
  std::vector<RationalPoint> extra_points;
};

struct ControllabilityResult {
  DistributionBasis basis;
  RankVerdict verdict;
};

/// Closure plus generic-rank verdict in one call.
ControllabilityResult analyze_controllability(const ReactionNetwork& net,
                                              const InputSet& inputs,
                                              const AnalysisOptions& options = {});

/// Makes step r reversible, adds the new step to the input set and reruns the
/// pipeline; true when the augmented system is controllable a.e. (Passing all
/// steps as inputs gives the all-inputs reversibility check.)
bool reversibility_preserves(const ReactionNetwork& net, int r, const InputSet& inputs,
                             const AnalysisOptions& options = {});

}  // namespace crn

#endif
