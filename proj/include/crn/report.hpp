#ifndef CRN_REPORT_HPP
#define CRN_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crn/lie_engine.hpp"
#include "crn/linearization.hpp"
#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn {

/// One controllability verdict for an input set, with the basis fields the
/// closure kept (provenance in paper notation plus the printed polynomials).
struct GenericVerdictSection {
  InputSet inputs;
  RankVerdict verdict;
  std::vector<std::pair<std::string, std::string>> basis;  // provenance, field text
  std::optional<InputSetVerdict> criticality;
};

struct PointVerdictSection {
  InputSet inputs;
  RationalPoint point;
  PointRank rank;
  int target = 0;
  bool controllable_at_point = false;
};

struct LinearizationSection {
  LinearizedSystem lin;
  KalmanResult kalman;
};

/// Everything a command run produced, serializable to text and JSON.
/// The JSON schema is fixed: {network, structure, verdicts, minimal_sets,
/// seed, version}; sections a command did not compute are null.
struct AnalysisReport {
  explicit AnalysisReport(ReactionNetwork net) : network(std::move(net)) {}

  ReactionNetwork network;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> warnings;

  std::optional<InitializerReport> structure;
  std::optional<ConsecutiveCertificate> consecutive;
  std::vector<GenericVerdictSection> verdicts;
  std::vector<PointVerdictSection> point_queries;
  std::optional<LinearizationSection> linearization;
  std::optional<MinimalInputsResult> minimal_sets;
};

/// Report namer: concentrations print as x1..xM, rate parameters print as
/// the network's rate symbols.
VarNamer report_namer(const ReactionNetwork& net);

std::vector<std::pair<std::string, std::string>> describe_basis(
    const DistributionBasis& basis, const ReactionNetwork& net);

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

}  // namespace crn

#endif
