#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include <string>
#include <vector>

namespace crn {

/// One reaction step: reactant complex alpha(.,r), product complex beta(.,r)
/// and the rate coefficient symbol k_r. Vectors are indexed by species and
/// hold molecule counts >= 0. A step with reactant == product (a null step)
/// is rejected at network construction.
struct ReactionStep {
  std::vector<int> reactant;
  std::vector<int> product;
  std::string rate_symbol;
};

/// A mass-action reaction network: M species, R steps, and the derived
/// stoichiometric matrix gamma = beta - alpha. Immutable after construction;
/// safe to share across threads.
class ReactionNetwork {
 public:
  ReactionNetwork(std::vector<std::string> species, std::vector<ReactionStep> steps);

  int species_count() const { return static_cast<int>(species_.size()); }
  int step_count() const { return static_cast<int>(steps_.size()); }

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<ReactionStep>& steps() const { return steps_; }
  const std::string& species_name(int m) const;
  const ReactionStep& step(int r) const;

  /// -1 when the name/symbol is not present.
  int species_index(const std::string& name) const;
  int step_index(const std::string& rate_symbol) const;

  int alpha(int m, int r) const;
  int beta(int m, int r) const;
  int gamma(int m, int r) const;
  std::vector<int> gamma_column(int r) const;

 private:
  void check_indices(int m, int r) const;

  std::vector<std::string> species_;
  std::vector<ReactionStep> steps_;
  std::vector<std::vector<int>> gamma_;  // M x R
};

/// Subset I of step indices whose rate coefficients are control inputs;
/// the complement N keeps fixed symbolic coefficients. May be empty only
/// for the deliberate all-drift query.
struct InputSet {
  std::vector<int> indices;  // sorted, unique

  static InputSet of(std::vector<int> steps, const ReactionNetwork& net);
  static InputSet all(const ReactionNetwork& net);

  bool contains(int r) const;
  std::vector<int> complement(const ReactionNetwork& net) const;
  std::size_t size() const { return indices.size(); }
};

/// Exact rank of gamma over the rationals (fraction-free integer elimination).
int stoichiometric_rank(const ReactionNetwork& net);

/// gamma(m,r) == 0 and alpha(m,r) != 0: the species enters and leaves the
/// step in equal amounts.
bool is_direct_catalyst_of_step(const ReactionNetwork& net, int m, int r);

/// Row gamma(m,.) identically zero: every participation is catalytic.
bool is_direct_catalyst_of_network(const ReactionNetwork& net, int m);

/// Appends the reverse of step r (reactant <-> product swapped) under a
/// fresh rate symbol. Leaves rank gamma unchanged.
ReactionNetwork make_reversible(const ReactionNetwork& net, int r);

/// Equality up to species ordering: same step sequence with the same rate
/// symbols and the same per-species-name molecule counts.
bool structurally_equal(const ReactionNetwork& a, const ReactionNetwork& b);

}  // namespace crn

#endif
