#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "crn/matrix.hpp"

namespace crn {

ReactionNetwork::ReactionNetwork(std::vector<std::string> species,
                                 std::vector<ReactionStep> steps)
    : species_(std::move(species)), steps_(std::move(steps)) {
  const int m_count = static_cast<int>(species_.size());
  const int r_count = static_cast<int>(steps_.size());
  if (m_count < 1) throw std::invalid_argument("network needs at least one species");
  if (r_count < 1) throw std::invalid_argument("network needs at least one reaction step");

  // Names must be identifiers so every network prints to parseable text.
  auto check_identifier = [](const std::string& name, const char* what) {
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) != 0);
    for (std::size_t i = 1; ok && i < name.size(); ++i)
      ok = std::isalnum(static_cast<unsigned char>(name[i])) != 0 || name[i] == '_';
    if (!ok)
      throw std::invalid_argument(std::string(what) + " is not an identifier: '" +
                                  name + "'");
  };

  std::set<std::string> seen_species;
  for (const std::string& name : species_) {
    check_identifier(name, "species name");
    if (!seen_species.insert(name).second)
      throw std::invalid_argument("duplicate species name: " + name);
  }

  std::set<std::string> seen_rates;
  for (int r = 0; r < r_count; ++r) {
    const ReactionStep& s = steps_[r];
    if (static_cast<int>(s.reactant.size()) != m_count ||
        static_cast<int>(s.product.size()) != m_count)
      throw std::invalid_argument("step " + std::to_string(r + 1) +
                                  ": complex vectors must have one entry per species");
    for (int m = 0; m < m_count; ++m)
      if (s.reactant[m] < 0 || s.product[m] < 0)
        throw std::invalid_argument("step " + std::to_string(r + 1) +
                                    ": negative molecule count");
    if (s.reactant == s.product)
      throw std::invalid_argument("step " + std::to_string(r + 1) +
                                  ": null step (reactant complex equals product complex)");
    check_identifier(s.rate_symbol, "rate symbol");
    if (!seen_rates.insert(s.rate_symbol).second)
      throw std::invalid_argument("duplicate rate symbol: " + s.rate_symbol);
  }

  gamma_.assign(m_count, std::vector<int>(r_count, 0));
  for (int r = 0; r < r_count; ++r)
    for (int m = 0; m < m_count; ++m)
      gamma_[m][r] = steps_[r].product[m] - steps_[r].reactant[m];
}

void ReactionNetwork::check_indices(int m, int r) const {
  if (m < 0 || m >= species_count())
    throw std::out_of_range("species index out of range: " + std::to_string(m));
  if (r < 0 || r >= step_count())
    throw std::out_of_range("step index out of range: " + std::to_string(r));
}

const std::string& ReactionNetwork::species_name(int m) const {
  check_indices(m, 0);
  return species_[m];
}

const ReactionStep& ReactionNetwork::step(int r) const {
  check_indices(0, r);
  return steps_[r];
}

int ReactionNetwork::species_index(const std::string& name) const {
  for (int m = 0; m < species_count(); ++m)
    if (species_[m] == name) return m;
  return -1;
}

int ReactionNetwork::step_index(const std::string& rate_symbol) const {
  for (int r = 0; r < step_count(); ++r)
    if (steps_[r].rate_symbol == rate_symbol) return r;
  return -1;
}

int ReactionNetwork::alpha(int m, int r) const {
  check_indices(m, r);
  return steps_[r].reactant[m];
}

int ReactionNetwork::beta(int m, int r) const {
  check_indices(m, r);
  return steps_[r].product[m];
}

int ReactionNetwork::gamma(int m, int r) const {
  check_indices(m, r);
  return gamma_[m][r];
}

std::vector<int> ReactionNetwork::gamma_column(int r) const {
  check_indices(0, r);
  std::vector<int> col(species_count());
  for (int m = 0; m < species_count(); ++m) col[m] = gamma_[m][r];
  return col;
}

InputSet InputSet::of(std::vector<int> steps, const ReactionNetwork& net) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  for (int r : steps)
    if (r < 0 || r >= net.step_count())
      throw std::out_of_range("input step index out of range: " + std::to_string(r));
  return InputSet{std::move(steps)};
}

InputSet InputSet::all(const ReactionNetwork& net) {
  std::vector<int> idx(net.step_count());
  for (int r = 0; r < net.step_count(); ++r) idx[r] = r;
  return InputSet{std::move(idx)};
}

bool InputSet::contains(int r) const {
  return std::binary_search(indices.begin(), indices.end(), r);
}

std::vector<int> InputSet::complement(const ReactionNetwork& net) const {
  std::vector<int> out;
  for (int r = 0; r < net.step_count(); ++r)
    if (!contains(r)) out.push_back(r);
  return out;
}

int stoichiometric_rank(const ReactionNetwork& net) {
  std::vector<std::vector<BigInt>> m(net.species_count(),
                                     std::vector<BigInt>(net.step_count()));
  for (int i = 0; i < net.species_count(); ++i)
    for (int r = 0; r < net.step_count(); ++r) m[i][r] = net.gamma(i, r);
  return integer_rank(std::move(m));
}

bool is_direct_catalyst_of_step(const ReactionNetwork& net, int m, int r) {
  return net.gamma(m, r) == 0 && net.alpha(m, r) != 0;
}

bool is_direct_catalyst_of_network(const ReactionNetwork& net, int m) {
  for (int r = 0; r < net.step_count(); ++r)
    if (net.gamma(m, r) != 0) return false;
  return true;
}

ReactionNetwork make_reversible(const ReactionNetwork& net, int r) {
  const ReactionStep& orig = net.step(r);
  ReactionStep reversed;
  reversed.reactant = orig.product;
  reversed.product = orig.reactant;
  std::string base = orig.rate_symbol + "_rev";
  std::string symbol = base;
  for (int n = 2; net.step_index(symbol) >= 0; ++n) symbol = base + std::to_string(n);
  reversed.rate_symbol = symbol;

  std::vector<ReactionStep> steps = net.steps();
  steps.push_back(std::move(reversed));
  return ReactionNetwork(net.species(), std::move(steps));
}

bool structurally_equal(const ReactionNetwork& a, const ReactionNetwork& b) {
  if (a.step_count() != b.step_count()) return false;
  std::set<std::string> sa(a.species().begin(), a.species().end());
  std::set<std::string> sb(b.species().begin(), b.species().end());
  if (sa != sb) return false;
  for (int r = 0; r < a.step_count(); ++r) {
    if (a.step(r).rate_symbol != b.step(r).rate_symbol) return false;
    std::map<std::string, std::pair<int, int>> ca, cb;
    for (int m = 0; m < a.species_count(); ++m)
      if (a.alpha(m, r) != 0 || a.beta(m, r) != 0)
        ca[a.species()[m]] = {a.alpha(m, r), a.beta(m, r)};
    for (int m = 0; m < b.species_count(); ++m)
      if (b.alpha(m, r) != 0 || b.beta(m, r) != 0)
        cb[b.species()[m]] = {b.alpha(m, r), b.beta(m, r)};
    if (ca != cb) return false;
  }
  return true;
}

}  // namespace crn
