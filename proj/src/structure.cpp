#include "crn/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace crn {

namespace {

bool participates(const ReactionNetwork& net, int m, int r) {
  return net.alpha(m, r) != 0 || net.beta(m, r) != 0;
}

// Initializers restricted to the steps with active[r] set; participation
// checks ignore removed steps. Used by the consecutive-reaction peeling.
std::vector<int> initializers_of(const ReactionNetwork& net,
                                 const std::vector<bool>& active) {
  std::vector<int> out;
  for (int r = 0; r < net.step_count(); ++r) {
    if (!active[r]) continue;
    bool has_noncatalytic_reactant = false;
    bool blocked = false;
    for (int m = 0; m < net.species_count() && !blocked; ++m) {
      if (net.alpha(m, r) == 0) continue;
      if (is_direct_catalyst_of_step(net, m, r)) continue;  // exempt species
      has_noncatalytic_reactant = true;
      for (int j = 0; j < net.step_count(); ++j) {
        if (j == r || !active[j] || !participates(net, m, j)) continue;
        if (!is_direct_catalyst_of_step(net, m, j)) {
          blocked = true;
          break;
        }
      }
    }
    if (!blocked && has_noncatalytic_reactant) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<int> find_initializers(const ReactionNetwork& net) {
  return initializers_of(net, std::vector<bool>(net.step_count(), true));
}

bool reactants_isolated(const ReactionNetwork& net, int r) {
  net.step(r);
  for (int m = 0; m < net.species_count(); ++m) {
    if (net.alpha(m, r) == 0) continue;
    for (int j = 0; j < net.step_count(); ++j)
      if (j != r && net.gamma(m, j) != 0) return false;
  }
  return true;
}

namespace {

// Closure from a seed step: pull in every outside step that produces a
// reactant species of the group non-catalytically.
std::vector<int> class_closure(const ReactionNetwork& net, int seed) {
  std::set<int> group{seed};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : std::vector<int>(group.begin(), group.end())) {
      for (int m = 0; m < net.species_count(); ++m) {
        if (net.alpha(m, s) == 0) continue;
        for (int j = 0; j < net.step_count(); ++j) {
          if (group.count(j)) continue;
          if (net.beta(m, j) > 0 && net.gamma(m, j) != 0) {
            group.insert(j);
            changed = true;
          }
        }
      }
    }
  }
  return std::vector<int>(group.begin(), group.end());
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<int>> find_initializer_classes(const ReactionNetwork& net) {
  std::vector<int> initializers = find_initializers(net);

  std::vector<std::vector<int>> closures;
  for (int r = 0; r < net.step_count(); ++r) {
    std::vector<int> c = class_closure(net, r);
    if (std::find(closures.begin(), closures.end(), c) == closures.end())
      closures.push_back(std::move(c));
  }

  std::vector<std::vector<int>> minimal;
  for (const auto& c : closures) {
    bool has_smaller = false;
    for (const auto& other : closures)
      if (other != c && is_subset(other, c)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(c);
  }

  // Classes overlapping the initializer set carry no extra lower-bound
  // information; the remaining classes are made pairwise disjoint.
  std::vector<std::vector<int>> eligible;
  for (const auto& c : minimal) {
    bool contains_initializer = false;
    for (int r : c)
      if (std::binary_search(initializers.begin(), initializers.end(), r)) {
        contains_initializer = true;
        break;
      }
    if (!contains_initializer) eligible.push_back(c);
  }

  std::sort(eligible.begin(), eligible.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::vector<int>> out;
  std::set<int> used;
  for (const auto& c : eligible) {
    bool overlaps = false;
    for (int r : c)
      if (used.count(r)) {
        overlaps = true;
        break;
      }
    if (overlaps) continue;
    used.insert(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

InitializerReport analyze_initializers(const ReactionNetwork& net) {
  InitializerReport report;
  report.initializers = find_initializers(net);
  report.classes = find_initializer_classes(net);
  report.lower_bound =
      static_cast<int>(report.initializers.size() + report.classes.size());
  return report;
}

ConsecutiveCertificate is_consecutive(const ReactionNetwork& net) {
  ConsecutiveCertificate cert;
  std::vector<bool> active(net.step_count(), true);
  int remaining = net.step_count();
  int stage = 0;
  while (remaining > 0) {
    ++stage;
    std::vector<int> inits = initializers_of(net, active);
    if (inits.size() != 1) {
      cert.failure_stage = stage;
      cert.failure_initializer_count = static_cast<int>(inits.size());
      cert.failure_reason = "stage " + std::to_string(stage) + ": found " +
                            std::to_string(inits.size()) +
                            " initializers, expected exactly one";
      return cert;
    }
    cert.order.push_back(inits.front());
    active[inits.front()] = false;
    --remaining;
  }
  cert.is_consecutive = true;
  return cert;
}

InputSetVerdict certify_critical_steps(const ReactionNetwork& net, const InputSet& inputs,
                                       const AnalysisOptions& options) {
  InputSetVerdict out;
  out.inputs = inputs;
  out.verdict = analyze_controllability(net, inputs, options).verdict;
  out.controllable_ae = out.verdict.controllable_ae;
  if (!out.controllable_ae) return out;

  for (int i : inputs.indices) {
    std::vector<int> reduced;
    for (int r : inputs.indices)
      if (r != i) reduced.push_back(r);
    bool still_controllable =
        !reduced.empty() &&
        analyze_controllability(net, InputSet::of(std::move(reduced), net), options)
            .verdict.controllable_ae;
    if (!still_controllable) out.critical_steps.push_back(i);
  }
  out.minimal = (out.critical_steps.size() == inputs.indices.size());
  return out;
}

namespace {

// Lexicographic enumeration of size-k subsets of `pool` that hit every class.
// Initializers are fixed members and not part of the pool.
void enumerate_candidates(const std::vector<int>& pool, std::size_t k,
                          const std::vector<std::vector<int>>& classes,
                          std::vector<int>& picked,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          std::size_t start, bool& stop) {
  if (stop) return;
  if (picked.size() == k) {
    for (const auto& cls : classes) {
      bool hit = false;
      for (int r : cls)
        if (std::find(picked.begin(), picked.end(), r) != picked.end()) {
          hit = true;
          break;
        }
      if (!hit) return;
    }
    if (!visit(picked)) stop = true;
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    picked.push_back(pool[i]);
    enumerate_candidates(pool, k, classes, picked, visit, i + 1, stop);
    picked.pop_back();
    if (stop) return;
  }
}

}  // namespace

MinimalInputsResult minimal_input_sets(const ReactionNetwork& net,
                                       const MinimalInputsOptions& options) {
  MinimalInputsResult result;
  InitializerReport report = analyze_initializers(net);
  result.lower_bound = std::max(1, report.lower_bound);

  int rank = stoichiometric_rank(net);
  int max_size = options.max_size > 0 ? options.max_size : rank;
  max_size = std::min(max_size, net.step_count());
  max_size = std::max(max_size, result.lower_bound);

  std::vector<int> pool;
  for (int r = 0; r < net.step_count(); ++r)
    if (!std::binary_search(report.initializers.begin(), report.initializers.end(), r))
      pool.push_back(r);

  for (int size = result.lower_bound; size <= max_size; ++size) {
    std::size_t extra = static_cast<std::size_t>(size) - report.initializers.size();
    if (size < static_cast<int>(report.initializers.size())) continue;
    if (extra > pool.size()) break;

    std::vector<InputSetVerdict> found;
    bool stop = false;
    std::vector<int> picked;
    auto visit = [&](const std::vector<int>& chosen) {
      if (options.budget > 0 && result.candidates_examined >= options.budget) {
        result.complete = false;
        return false;
      }
      ++result.candidates_examined;
      std::vector<int> steps = report.initializers;
      steps.insert(steps.end(), chosen.begin(), chosen.end());
      InputSet candidate = InputSet::of(std::move(steps), net);
      InputSetVerdict verdict = certify_critical_steps(net, candidate, options.analysis);
      if (verdict.controllable_ae) {
        verdict.minimal = true;
        found.push_back(std::move(verdict));
      }
      return true;
    };
    enumerate_candidates(pool, extra, report.classes, picked, visit, 0, stop);

    if (!found.empty()) {
      result.sets = std::move(found);
      result.lower_bound_attained = (size == result.lower_bound);
      return result;
    }
    if (stop) return result;  // budget exhausted mid-size
  }
  // Nothing found within the size cap; sets of larger size may still exist.
  result.complete = false;
  return result;
}

}  // namespace crn
