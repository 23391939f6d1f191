#ifndef CRN_STRUCTURE_HPP
#define CRN_STRUCTURE_HPP

#include <string>
#include <vector>

#include "crn/lie_engine.hpp"
#include "crn/network.hpp"

namespace crn {

/// A step is an initializer when every species of its reactant complex is
/// either a direct catalyst of the step itself or appears in other steps
/// only as a direct catalyst there, and the reactant species are not all
/// direct catalysts. Returned sorted.
std::vector<int> find_initializers(const ReactionNetwork& net);

/// True when no reactant species of step r is stoichiometrically changed by
/// any other step: alpha(.,r) (*) gamma(.,j) = 0 for all j != r. Under this
/// condition no bracket ever produces a gamma(.,r) component, so the step's
/// rate coefficient is provably required in every controllable input set.
bool reactants_isolated(const ReactionNetwork& net, int r);

/// Minimal closed step groups: a group is closed when no reactant species of
/// the group is produced non-catalytically by a step outside it. Groups that
/// contain an initializer are dropped, and the kept groups are pairwise
/// disjoint (smallest-first greedy selection).
std::vector<std::vector<int>> find_initializer_classes(const ReactionNetwork& net);

struct InitializerReport {
  std::vector<int> initializers;
  std::vector<std::vector<int>> classes;
  int lower_bound = 0;  // |initializers| + |classes|
};

InitializerReport analyze_initializers(const ReactionNetwork& net);

struct ConsecutiveCertificate {
  bool is_consecutive = false;
  std::vector<int> order;  // removal order i_1..i_R when consecutive
  int failure_stage = -1;
  int failure_initializer_count = 0;
  std::string failure_reason;
};

/// Peels the network by repeatedly removing its unique initializer; succeeds
/// when the peeling empties the network.
ConsecutiveCertificate is_consecutive(const ReactionNetwork& net);

struct InputSetVerdict {
  InputSet inputs;
  bool controllable_ae = false;
  std::vector<int> critical_steps;  // subset of inputs
  bool minimal = false;
  RankVerdict verdict;
};

/// Reruns the generic-rank pipeline once per single-input removal; an input
/// is critical when the rank drops below rank gamma without it. `minimal`
/// reports whether every input came out critical (no single input is
/// redundant).
InputSetVerdict certify_critical_steps(const ReactionNetwork& net, const InputSet& inputs,
                                       const AnalysisOptions& options = {});

struct MinimalInputsOptions {
  AnalysisOptions analysis;
  int max_size = 0;   // 0 means rank gamma
  long budget = 0;    // max candidate pipeline runs; 0 means unlimited
};

struct MinimalInputsResult {
  std::vector<InputSetVerdict> sets;  // all controllable sets of the minimal size found
  int lower_bound = 0;
  bool lower_bound_attained = false;
  bool complete = true;  // false when the budget or size cap cut the search short
  long candidates_examined = 0;
};

/// Exhaustive search by increasing size, pruned to candidates that contain
/// every initializer and meet every initializer class.
MinimalInputsResult minimal_input_sets(const ReactionNetwork& net,
                                       const MinimalInputsOptions& options = {});

}  // namespace crn

#endif
