#include "crn/report.hpp"

#include <sstream>

#include "crn/parser.hpp"
#include "crn/version.hpp"

namespace crn {

namespace {

using nlohmann::ordered_json;

std::string step_symbol(const ReactionNetwork& net, int r) {
  return net.step(r).rate_symbol;
}

std::vector<std::string> symbols_of(const ReactionNetwork& net,
                                    const std::vector<int>& steps) {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (int r : steps) out.push_back(step_symbol(net, r));
  return out;
}

ordered_json point_json(const ReactionNetwork& net, const RationalPoint& p) {
  ordered_json x = ordered_json::object();
  for (std::size_t m = 0; m < p.x.size(); ++m)
    x[net.species()[m]] = to_string(p.x[m]);
  ordered_json k = ordered_json::object();
  for (std::size_t r = 0; r < p.k.size(); ++r)
    k[step_symbol(net, static_cast<int>(r))] = to_string(p.k[r]);
  return ordered_json{{"x", x}, {"k", k}};
}

std::string point_text(const ReactionNetwork& net, const RationalPoint& p) {
  std::string out;
  for (std::size_t m = 0; m < p.x.size(); ++m) {
    if (!out.empty()) out += ", ";
    out += net.species()[m] + "=" + to_string(p.x[m]);
  }
  for (std::size_t r = 0; r < p.k.size(); ++r) {
    if (!out.empty()) out += ", ";
    out += step_symbol(net, static_cast<int>(r)) + "=" + to_string(p.k[r]);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

ordered_json verdict_json(const ReactionNetwork& net, const GenericVerdictSection& v) {
  ordered_json entry;
  entry["kind"] = "generic";
  entry["inputs"] = symbols_of(net, v.inputs.indices);
  entry["controllable_ae"] = v.verdict.controllable_ae;
  entry["generic_rank"] = v.verdict.generic_rank;
  entry["target"] = v.verdict.target;
  entry["saturated"] = v.verdict.saturated;
  entry["depth_reached"] = v.verdict.depth_reached;
  ordered_json trials = ordered_json::array();
  for (const RankTrial& t : v.verdict.trials)
    trials.push_back(ordered_json{{"point", point_json(net, t.point)}, {"rank", t.rank}});
  entry["trials"] = trials;
  ordered_json basis = ordered_json::array();
  for (const auto& [prov, field] : v.basis)
    basis.push_back(ordered_json{{"provenance", prov}, {"field", field}});
  entry["basis"] = basis;
  if (v.criticality) {
    entry["critical_steps"] = symbols_of(net, v.criticality->critical_steps);
    entry["minimal"] = v.criticality->minimal;
  } else {
    entry["critical_steps"] = nullptr;
    entry["minimal"] = nullptr;
  }
  return entry;
}

ordered_json point_query_json(const ReactionNetwork& net, const PointVerdictSection& q) {
  ordered_json entry;
  entry["kind"] = "point";
  entry["inputs"] = symbols_of(net, q.inputs.indices);
  entry["point"] = point_json(net, q.point);
  entry["rank"] = q.rank.rank;
  entry["target"] = q.target;
  entry["controllable_at_point"] = q.controllable_at_point;
  entry["certificate"] = q.rank.certificate;
  return entry;
}

ordered_json linearization_json(const ReactionNetwork& net, const LinearizationSection& s) {
  ordered_json entry;
  entry["kind"] = "linearization";
  ordered_json x = ordered_json::object();
  for (std::size_t m = 0; m < s.lin.x_star.size(); ++m)
    x[net.species()[m]] = to_string(s.lin.x_star[m]);
  ordered_json k = ordered_json::object();
  for (std::size_t r = 0; r < s.lin.k_values.size(); ++r)
    k[step_symbol(net, static_cast<int>(r))] = to_string(s.lin.k_values[r]);
  entry["point"] = x;
  entry["k_values"] = k;
  ordered_json residual = ordered_json::array();
  for (const Rational& v : s.lin.residual) residual.push_back(to_string(v));
  entry["residual"] = residual;
  entry["at_equilibrium"] = s.lin.at_equilibrium;
  entry["nonpositive_warning"] = s.lin.warned_nonpositive;
  entry["rank_b"] = s.kalman.rank_b;
  entry["kalman_rank"] = s.kalman.rank;
  entry["a_preserves_stoichiometric_space"] = s.kalman.a_preserves_stoichiometric_space;
  return entry;
}

}  // namespace

VarNamer report_namer(const ReactionNetwork& net) {
  return [&net](Var v) {
    if (v.kind == VarKind::RateParam && v.index < net.step_count())
      return net.step(v.index).rate_symbol;
    return default_var_name(v);
  };
}

std::vector<std::pair<std::string, std::string>> describe_basis(
    const DistributionBasis& basis, const ReactionNetwork& net) {
  VarNamer namer = report_namer(net);
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(basis.fields.size());
  for (const BasisField& f : basis.fields)
    out.emplace_back(f.provenance.str(), str(f.field, namer));
  return out;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  const ReactionNetwork& net = report.network;
  ordered_json doc;

  ordered_json network;
  network["species"] = net.species();
  ordered_json steps = ordered_json::array();
  std::istringstream lines(print_network(net));
  std::string line;
  int r = 0;
  while (std::getline(lines, line)) {
    steps.push_back(ordered_json{{"rate", step_symbol(net, r)}, {"text", line}});
    ++r;
  }
  network["steps"] = steps;
  network["M"] = net.species_count();
  network["R"] = net.step_count();
  network["rank_gamma"] = stoichiometric_rank(net);
  network["note"] = "assumes the stoichiometric and kinetic subspaces coincide";
  doc["network"] = network;

  if (report.structure) {
    ordered_json s;
    s["initializers"] = symbols_of(net, report.structure->initializers);
    ordered_json classes = ordered_json::array();
    for (const auto& cls : report.structure->classes) classes.push_back(symbols_of(net, cls));
    s["classes"] = classes;
    s["lower_bound"] = report.structure->lower_bound;
    ordered_json guaranteed = ordered_json::array();
    for (int init : report.structure->initializers)
      if (reactants_isolated(net, init)) guaranteed.push_back(step_symbol(net, init));
    s["criticality_guaranteed"] = guaranteed;
    if (report.consecutive) {
      ordered_json c;
      c["is_consecutive"] = report.consecutive->is_consecutive;
      if (report.consecutive->is_consecutive)
        c["order"] = symbols_of(net, report.consecutive->order);
      else
        c["failure_reason"] = report.consecutive->failure_reason;
      s["consecutive"] = c;
    } else {
      s["consecutive"] = nullptr;
    }
    doc["structure"] = s;
  } else {
    doc["structure"] = nullptr;
  }

  ordered_json verdicts = ordered_json::array();
  for (const GenericVerdictSection& v : report.verdicts)
    verdicts.push_back(verdict_json(net, v));
  for (const PointVerdictSection& q : report.point_queries)
    verdicts.push_back(point_query_json(net, q));
  if (report.linearization)
    verdicts.push_back(linearization_json(net, *report.linearization));
  doc["verdicts"] = verdicts;

  if (report.minimal_sets) {
    ordered_json sets = ordered_json::array();
    for (const InputSetVerdict& s : report.minimal_sets->sets) {
      ordered_json entry;
      entry["inputs"] = symbols_of(net, s.inputs.indices);
      entry["critical_steps"] = symbols_of(net, s.critical_steps);
      entry["minimal"] = s.minimal;
      sets.push_back(entry);
    }
    doc["minimal_sets"] =
        ordered_json{{"sets", sets},
                     {"lower_bound", report.minimal_sets->lower_bound},
                     {"lower_bound_attained", report.minimal_sets->lower_bound_attained},
                     {"complete", report.minimal_sets->complete}};
  } else {
    doc["minimal_sets"] = nullptr;
  }

  doc["warnings"] = report.warnings;
  doc["seed"] = report.seed;
  doc["version"] = kToolVersion;
  return doc;
}

std::string to_text(const AnalysisReport& report) {
  const ReactionNetwork& net = report.network;
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << " (seed " << report.seed << ")\n";
  out << "note: assumes the stoichiometric and kinetic subspaces coincide\n";
  out << "network: M=" << net.species_count() << " species, R=" << net.step_count()
      << " steps, rank gamma = " << stoichiometric_rank(net) << "\n";
  {
    std::istringstream lines(print_network(net));
    std::string line;
    int r = 0;
    while (std::getline(lines, line)) out << "  step " << ++r << ": " << line << "\n";
  }
  out << "  concentration variables: ";
  for (int m = 0; m < net.species_count(); ++m)
    out << (m ? ", " : "") << "x" << (m + 1) << "=" << net.species()[m];
  out << "\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";

  if (report.structure) {
    const InitializerReport& s = *report.structure;
    out << "structure:\n";
    out << "  initializers: "
        << (s.initializers.empty() ? "(none)" : join(symbols_of(net, s.initializers), ", "));
    std::vector<std::string> guaranteed;
    for (int init : s.initializers)
      if (reactants_isolated(net, init)) guaranteed.push_back(step_symbol(net, init));
    if (!guaranteed.empty())
      out << "  [criticality guaranteed: " << join(guaranteed, ", ") << "]";
    out << "\n";
    out << "  initializer classes: ";
    if (s.classes.empty()) {
      out << "(none)";
    } else {
      for (std::size_t i = 0; i < s.classes.size(); ++i)
        out << (i ? ", " : "") << "{" << join(symbols_of(net, s.classes[i]), ", ") << "}";
    }
    out << "\n";
    out << "  lower bound on control inputs: " << s.lower_bound << "\n";
    if (report.consecutive) {
      if (report.consecutive->is_consecutive)
        out << "  consecutive: yes, order "
            << join(symbols_of(net, report.consecutive->order), ", ") << "\n";
      else
        out << "  consecutive: no (" << report.consecutive->failure_reason << ")\n";
    }
  }

  for (const GenericVerdictSection& v : report.verdicts) {
    out << "inputs {" << join(symbols_of(net, v.inputs.indices), ", ") << "}: ";
    if (v.verdict.controllable_ae) {
      out << "controllable a.e. (generic rank " << v.verdict.generic_rank << " / "
          << v.verdict.target << ")\n";
    } else if (v.verdict.saturated) {
      out << "not controllable a.e. (probabilistic, seed " << v.verdict.seed
          << "; generic rank " << v.verdict.generic_rank << " / " << v.verdict.target
          << ")\n";
    } else {
      out << "not shown controllable (depth " << v.verdict.depth_reached
          << ", saturated=no; generic rank " << v.verdict.generic_rank << " / "
          << v.verdict.target << ")\n";
    }
    out << "  basis (" << v.basis.size() << " fields):\n";
    for (const auto& [prov, field] : v.basis) out << "    " << prov << " = " << field << "\n";
    out << "  trial ranks:";
    for (const RankTrial& t : v.verdict.trials) out << " " << t.rank;
    out << "\n";
    if (v.criticality) {
      out << "  critical steps: "
          << (v.criticality->critical_steps.empty()
                  ? "(none)"
                  : join(symbols_of(net, v.criticality->critical_steps), ", "))
          << (v.criticality->minimal ? "  [input set is irredundant]" : "") << "\n";
    }
  }

  for (const PointVerdictSection& q : report.point_queries) {
    out << "rank at point (" << point_text(net, q.point) << ") with inputs {"
        << join(symbols_of(net, q.inputs.indices), ", ") << "}: " << q.rank.rank << " / "
        << q.target << (q.controllable_at_point ? " -- controllable at the point"
                                                : " -- NOT controllable at the point")
        << "\n";
    out << "  spanning fields: " << join(q.rank.certificate, ", ") << "\n";
  }

  if (report.linearization) {
    const LinearizationSection& s = *report.linearization;
    out << "linearization at (" ;
    for (std::size_t m = 0; m < s.lin.x_star.size(); ++m)
      out << (m ? ", " : "") << net.species()[m] << "=" << to_string(s.lin.x_star[m]);
    out << "):\n";
    if (s.lin.warned_nonpositive)
      out << "  warning: point or rate values are not strictly positive\n";
    out << "  residual: (";
    for (std::size_t m = 0; m < s.lin.residual.size(); ++m)
      out << (m ? ", " : "") << to_string(s.lin.residual[m]);
    out << ")" << (s.lin.at_equilibrium ? "  [equilibrium]" : "  [NOT an equilibrium]")
        << "\n";
    out << "  rank B = " << s.kalman.rank_b << ", Kalman rank = " << s.kalman.rank
        << ", rank gamma = " << stoichiometric_rank(net) << "\n";
    out << "  A maps Im(gamma) into itself: "
        << (s.kalman.a_preserves_stoichiometric_space ? "yes" : "no") << "\n";
  }

  if (report.minimal_sets) {
    const MinimalInputsResult& m = *report.minimal_sets;
    out << "minimal input sets (lower bound " << m.lower_bound << ", "
        << (m.complete ? "complete search" : "search truncated") << "):\n";
    if (m.sets.empty()) {
      out << "  none found within the size cap\n";
    } else {
      for (const InputSetVerdict& s : m.sets)
        out << "  {" << join(symbols_of(net, s.inputs.indices), ", ") << "}\n";
      out << "  lower bound attained: " << (m.lower_bound_attained ? "yes" : "no") << "\n";
    }
  }
  return out.str();
}

}  // namespace crn
