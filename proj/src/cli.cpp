#include "crn/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "crn/parser.hpp"
#include "crn/report.hpp"
#include "crn/version.hpp"

namespace crn {

namespace {

ReactionNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str()).network;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::map<std::string, Rational> parse_assignments(const std::string& csv,
                                                  const std::string& what) {
  std::map<std::string, Rational> out;
  for (const std::string& item : split_csv(csv)) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(what + ": expected name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    out[name] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  return std::stoull(text, nullptr, 0);  // accepts decimal and 0x... forms
}

InputSet resolve_inputs(const ReactionNetwork& net, const std::string& csv, bool all) {
  if (all && !csv.empty())
    throw std::runtime_error("--inputs and --all-inputs are mutually exclusive");
  if (all) return InputSet::all(net);
  if (csv.empty()) throw std::runtime_error("choose --inputs <symbols> or --all-inputs");
  std::vector<int> steps;
  for (const std::string& symbol : split_csv(csv)) {
    int r = net.step_index(symbol);
    if (r < 0) throw std::runtime_error("unknown rate symbol: " + symbol);
    steps.push_back(r);
  }
  return InputSet::of(std::move(steps), net);
}

struct CommonOptions {
  int trials = kDefaultTrials;
  int depth = 0;
  std::string seed_text = "0xC0FFEE";
  bool json = false;

  void attach(CLI::App* cmd, bool with_pipeline) {
    cmd->add_flag("--json", json, "emit a JSON report");
    if (with_pipeline) {
      cmd->add_option("--trials", trials, "random rank trials (default 5)");
      cmd->add_option("--depth", depth, "bracket depth cap (default 2*M)");
      cmd->add_option("--seed", seed_text, "RNG seed (default 0xC0FFEE)");
    }
  }

  AnalysisOptions analysis() const {
    AnalysisOptions opt;
    opt.trials = trials;
    opt.depth_cap = depth;
    opt.seed = parse_seed(seed_text);
    return opt;
  }
};

void emit(const AnalysisReport& report, bool json, std::ostream& out) {
  if (json)
    out << to_json(report).dump(2) << "\n";
  else
    out << to_text(report);
}

/// Builds the x/k assignment for a point query. Unassigned species and
/// unassigned non-input rate coefficients default to 1 and are recorded as
/// warnings.
RationalPoint build_point(const ReactionNetwork& net,
                          const std::map<std::string, Rational>& point_values,
                          const std::map<std::string, Rational>& param_values,
                          const InputSet& inputs, std::vector<std::string>& warnings) {
  for (const auto& [name, value] : point_values)
    if (net.species_index(name) < 0)
      throw std::runtime_error("unknown species in --point: " + name);
  for (const auto& [name, value] : param_values)
    if (net.step_index(name) < 0)
      throw std::runtime_error("unknown rate symbol in --params: " + name);

  RationalPoint p;
  std::vector<std::string> defaulted;
  for (int m = 0; m < net.species_count(); ++m) {
    auto it = point_values.find(net.species()[m]);
    if (it == point_values.end()) {
      p.x.push_back(Rational(1));
      defaulted.push_back(net.species()[m]);
    } else {
      p.x.push_back(it->second);
    }
  }
  for (int r = 0; r < net.step_count(); ++r) {
    auto it = param_values.find(net.step(r).rate_symbol);
    if (it == param_values.end()) {
      p.k.push_back(Rational(1));
      // Input coefficients are control inputs; their k value never appears.
      if (!inputs.contains(r)) defaulted.push_back(net.step(r).rate_symbol);
    } else {
      p.k.push_back(it->second);
    }
  }
  if (!defaulted.empty()) {
    std::string msg = "defaulted to 1:";
    for (const std::string& name : defaulted) msg += " " + name;
    warnings.push_back(msg);
  }
  return p;
}

int cmd_analyze(const std::string& file, const std::string& inputs_csv, bool all_inputs,
                const CommonOptions& common, std::ostream& out) {
  ReactionNetwork net = load_network(file);
  InputSet inputs = resolve_inputs(net, inputs_csv, all_inputs);
  AnalysisOptions options = common.analysis();

  AnalysisReport report(net);
  report.seed = options.seed;
  report.structure = analyze_initializers(net);
  report.consecutive = is_consecutive(net);

  ControllabilityResult result = analyze_controllability(net, inputs, options);
  GenericVerdictSection section;
  section.inputs = inputs;
  section.verdict = result.verdict;
  section.basis = describe_basis(result.basis, net);
  if (result.verdict.controllable_ae)
    section.criticality = certify_critical_steps(net, inputs, options);
  bool controllable = result.verdict.controllable_ae;
  if (!controllable) {
    std::string missing;
    for (int init : report.structure->initializers)
      if (!inputs.contains(init) && reactants_isolated(net, init))
        missing += (missing.empty() ? "" : ", ") + net.step(init).rate_symbol;
    if (!missing.empty())
      report.warnings.push_back(
          "input set omits the initializer(s) " + missing +
          "; an initializer's rate coefficient must be a control input");
  }
  report.verdicts.push_back(std::move(section));

  emit(report, common.json, out);
  return controllable ? 0 : 1;
}

int cmd_structure(const std::string& file, const CommonOptions& common, std::ostream& out) {
  ReactionNetwork net = load_network(file);
  AnalysisReport report(net);
  report.structure = analyze_initializers(net);
  report.consecutive = is_consecutive(net);
  emit(report, common.json, out);
  return 0;
}

int cmd_minimal_inputs(const std::string& file, long budget, int max_size,
                       const CommonOptions& common, std::ostream& out) {
  ReactionNetwork net = load_network(file);
  MinimalInputsOptions options;
  options.analysis = common.analysis();
  options.budget = budget;
  options.max_size = max_size;

  AnalysisReport report(net);
  report.seed = options.analysis.seed;
  report.structure = analyze_initializers(net);
  report.minimal_sets = minimal_input_sets(net, options);
  bool found = !report.minimal_sets->sets.empty();
  emit(report, common.json, out);
  return found ? 0 : 1;
}

int cmd_rank_at(const std::string& file, const std::string& inputs_csv, bool all_inputs,
                const std::string& point_csv, const std::string& params_csv,
                const CommonOptions& common, std::ostream& out) {
  ReactionNetwork net = load_network(file);
  InputSet inputs = (inputs_csv.empty() && !all_inputs)
                        ? InputSet::all(net)
                        : resolve_inputs(net, inputs_csv, all_inputs);
  AnalysisOptions options = common.analysis();

  AnalysisReport report(net);
  report.seed = options.seed;
  RationalPoint point = build_point(net, parse_assignments(point_csv, "--point"),
                                    parse_assignments(params_csv, "--params"), inputs,
                                    report.warnings);
  // The query point joins the closure's admission points so fields that only
  // matter on its locus are generated.
  options.extra_points.push_back(point);
  ControllabilityResult result = analyze_controllability(net, inputs, options);

  PointVerdictSection section;
  section.inputs = inputs;
  section.point = point;
  section.rank = rank_at_point(result.basis, point);
  section.target = stoichiometric_rank(net);
  section.controllable_at_point = (section.rank.rank == section.target);
  bool controllable = section.controllable_at_point;
  report.point_queries.push_back(std::move(section));

  emit(report, common.json, out);
  return controllable ? 0 : 1;
}

int cmd_linearize(const std::string& file, const std::string& point_csv,
                  const std::string& params_csv, const CommonOptions& common,
                  std::ostream& out) {
  ReactionNetwork net = load_network(file);
  AnalysisReport report(net);

  std::map<std::string, Rational> point_values = parse_assignments(point_csv, "--point");
  std::map<std::string, Rational> param_values = parse_assignments(params_csv, "--params");
  RationalPoint point = build_point(net, point_values, param_values,
                                    InputSet{{}}, report.warnings);

  LinearizationSection section;
  section.lin = linearize_at(net, point.x, point.k);
  section.kalman = kalman_rank(section.lin, net);
  if (section.lin.warned_nonpositive)
    report.warnings.push_back("point or rate values are not strictly positive");
  if (!section.lin.at_equilibrium)
    report.warnings.push_back("the supplied point is not an equilibrium (see residual)");
  report.linearization = std::move(section);

  emit(report, common.json, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string(kToolName) +
               " -- controllability analysis of mass-action reaction networks"};
  app.require_subcommand(1);

  std::string file, inputs_csv, point_csv, params_csv;
  bool all_inputs = false;
  long budget = 0;
  int max_size = 0;
  CommonOptions analyze_common, structure_common, minimal_common, rank_common,
      linearize_common;

  CLI::App* analyze = app.add_subcommand("analyze", "generic controllability verdict");
  analyze->add_option("file", file, "reaction network (.crn)")->required();
  analyze->add_option("--inputs", inputs_csv, "comma-separated rate symbols");
  analyze->add_flag("--all-inputs", all_inputs, "every rate coefficient is an input");
  analyze_common.attach(analyze, true);

  CLI::App* structure =
      app.add_subcommand("structure", "initializers, classes, consecutive order");
  structure->add_option("file", file, "reaction network (.crn)")->required();
  structure_common.attach(structure, false);

  CLI::App* minimal =
      app.add_subcommand("minimal-inputs", "smallest controllable input sets");
  minimal->add_option("file", file, "reaction network (.crn)")->required();
  minimal->add_option("--budget", budget, "max candidate sets to try (0 = unlimited)");
  minimal->add_option("--max-size", max_size, "subset size cap (default rank gamma)");
  minimal_common.attach(minimal, true);

  CLI::App* rank_at = app.add_subcommand("rank-at", "pointwise rank with certificate");
  rank_at->add_option("file", file, "reaction network (.crn)")->required();
  rank_at->add_option("--point", point_csv, "species assignments, e.g. X1=0,X2=1/2")
      ->required();
  rank_at->add_option("--params", params_csv, "rate values, e.g. k2=1 (default 1)");
  rank_at->add_option("--inputs", inputs_csv, "comma-separated rate symbols");
  rank_at->add_flag("--all-inputs", all_inputs, "every rate coefficient is an input");
  rank_common.attach(rank_at, true);

  CLI::App* linearize =
      app.add_subcommand("linearize", "Jacobian/Kalman analysis at a point");
  linearize->add_option("file", file, "reaction network (.crn)")->required();
  linearize->add_option("--point", point_csv, "species assignments")->required();
  linearize->add_option("--params", params_csv, "rate values (default 1)");
  linearize_common.attach(linearize, false);

  std::vector<std::string> argv_like = args;
  try {
    app.parse(std::vector<std::string>(argv_like.rbegin(), argv_like.rend()));
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    int code = app.exit(e, usage, usage);
    (code == 0 ? out : err) << usage.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(file, inputs_csv, all_inputs, analyze_common, out);
    if (app.got_subcommand(structure)) return cmd_structure(file, structure_common, out);
    if (app.got_subcommand(minimal))
      return cmd_minimal_inputs(file, budget, max_size, minimal_common, out);
    if (app.got_subcommand(rank_at))
      return cmd_rank_at(file, inputs_csv, all_inputs, point_csv, params_csv, rank_common,
                         out);
    if (app.got_subcommand(linearize))
      return cmd_linearize(file, point_csv, params_csv, linearize_common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crn
