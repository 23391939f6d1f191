#ifndef CRN_TESTS_GENERATORS_HPP
#define CRN_TESTS_GENERATORS_HPP

#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/polynomial.hpp"
#include "crn/rational.hpp"

namespace crn::testgen {

struct NetworkShape {
  int max_species = 5;
  int max_steps = 6;
  int max_coefficient = 2;
};

/// Random valid network: no null steps, unique rate symbols k1..kR, every
/// species participates in at least one step.
inline ReactionNetwork random_network(SplitMix64& rng, const NetworkShape& shape = {}) {
  int species = static_cast<int>(1 + rng.below(shape.max_species));
  int steps = static_cast<int>(1 + rng.below(shape.max_steps));
  std::vector<ReactionStep> list;
  for (int r = 0; r < steps; ++r) {
    ReactionStep step;
    step.rate_symbol = "k" + std::to_string(r + 1);
    do {
      step.reactant.assign(species, 0);
      step.product.assign(species, 0);
      for (int m = 0; m < species; ++m) {
        // Sparse complexes: most entries zero.
        if (rng.below(3) == 0)
          step.reactant[m] = static_cast<int>(1 + rng.below(shape.max_coefficient));
        if (rng.below(3) == 0)
          step.product[m] = static_cast<int>(1 + rng.below(shape.max_coefficient));
      }
    } while (step.reactant == step.product);
    list.push_back(std::move(step));
  }
  // Drop species no step mentions, remapping indices.
  std::vector<bool> used(species, false);
  for (const ReactionStep& s : list)
    for (int m = 0; m < species; ++m)
      if (s.reactant[m] || s.product[m]) used[m] = true;
  std::vector<std::string> names;
  std::vector<int> remap(species, -1);
  for (int m = 0; m < species; ++m)
    if (used[m]) {
      remap[m] = static_cast<int>(names.size());
      names.push_back("S" + std::to_string(names.size() + 1));
    }
  for (ReactionStep& s : list) {
    std::vector<int> reac(names.size(), 0), prod(names.size(), 0);
    for (int m = 0; m < species; ++m)
      if (remap[m] >= 0) {
        reac[remap[m]] = s.reactant[m];
        prod[remap[m]] = s.product[m];
      }
    s.reactant = std::move(reac);
    s.product = std::move(prod);
  }
  return ReactionNetwork(std::move(names), std::move(list));
}

/// Consecutive chain c_i * C_i -> d_i * C_{i+1}, optionally seasoned with a
/// fresh direct catalyst on both sides of a step. Step 1 is the unique
/// initializer and its reactants are untouched by every other step.
inline ReactionNetwork chain_network(SplitMix64& rng, int length, int max_coefficient = 2,
                                     bool allow_catalysts = true) {
  std::vector<std::string> names;
  for (int i = 0; i <= length; ++i) names.push_back("C" + std::to_string(i + 1));
  struct Cat {
    int step;
    int species;
  };
  std::vector<Cat> catalysts;
  if (allow_catalysts)
    for (int r = 0; r < length; ++r)
      if (rng.below(3) == 0) {
        catalysts.push_back({r, static_cast<int>(names.size())});
        names.push_back("E" + std::to_string(r + 1));
      }
  int total = static_cast<int>(names.size());
  std::vector<ReactionStep> steps;
  for (int r = 0; r < length; ++r) {
    ReactionStep step;
    step.rate_symbol = "k" + std::to_string(r + 1);
    step.reactant.assign(total, 0);
    step.product.assign(total, 0);
    step.reactant[r] = static_cast<int>(1 + rng.below(max_coefficient));
    step.product[r + 1] = static_cast<int>(1 + rng.below(max_coefficient));
    steps.push_back(std::move(step));
  }
  for (const Cat& c : catalysts) {
    steps[c.step].reactant[c.species] = 1;
    steps[c.step].product[c.species] = 1;
  }
  return ReactionNetwork(std::move(names), std::move(steps));
}

/// A -> B -> ... -> A over `length` species.
inline ReactionNetwork cycle_network(int length) {
  std::vector<std::string> names;
  for (int i = 0; i < length; ++i) names.push_back("A" + std::to_string(i + 1));
  std::vector<ReactionStep> steps;
  for (int r = 0; r < length; ++r) {
    ReactionStep step;
    step.rate_symbol = "k" + std::to_string(r + 1);
    step.reactant.assign(length, 0);
    step.product.assign(length, 0);
    step.reactant[r] = 1;
    step.product[(r + 1) % length] = 1;
    steps.push_back(std::move(step));
  }
  return ReactionNetwork(std::move(names), std::move(steps));
}

/// Network made of reversible pairs with random complexes,
/// steps 2p (forward) and 2p+1 (backward).
inline ReactionNetwork reversible_pairs_network(SplitMix64& rng, int max_pairs = 3,
                                                int max_species = 4,
                                                int max_coefficient = 2) {
  int species = static_cast<int>(2 + rng.below(max_species - 1));
  int pairs = static_cast<int>(1 + rng.below(max_pairs));
  std::vector<ReactionStep> steps;
  for (int p = 0; p < pairs; ++p) {
    std::vector<int> a(species, 0), b(species, 0);
    do {
      for (int m = 0; m < species; ++m) {
        if (rng.below(2) == 0) a[m] = static_cast<int>(1 + rng.below(max_coefficient));
        if (rng.below(2) == 0) b[m] = static_cast<int>(1 + rng.below(max_coefficient));
      }
    } while (a == b);
    ReactionStep fwd{a, b, "k" + std::to_string(2 * p + 1)};
    ReactionStep bwd{b, a, "k" + std::to_string(2 * p + 2)};
    steps.push_back(std::move(fwd));
    steps.push_back(std::move(bwd));
  }
  std::vector<std::string> names;
  for (int m = 0; m < species; ++m) names.push_back("S" + std::to_string(m + 1));
  // Species unused by every pair are legal here but pointless; keep them,
  // they do not disturb the pair structure.
  return ReactionNetwork(std::move(names), std::move(steps));
}

/// Random network plus one planted step consuming fresh species that no
/// other step touches. The planted step (last index) is an initializer whose
/// criticality is guaranteed by isolation.
inline ReactionNetwork with_isolated_initializer(SplitMix64& rng,
                                                 const NetworkShape& shape = {}) {
  ReactionNetwork base = random_network(rng, shape);
  std::vector<std::string> names = base.species();
  int base_species = base.species_count();
  int fresh = static_cast<int>(1 + rng.below(2));
  for (int i = 0; i < fresh; ++i) names.push_back("P" + std::to_string(i + 1));
  int total = static_cast<int>(names.size());

  std::vector<ReactionStep> steps;
  for (const ReactionStep& s : base.steps()) {
    ReactionStep widened = s;
    widened.reactant.resize(total, 0);
    widened.product.resize(total, 0);
    steps.push_back(std::move(widened));
  }
  ReactionStep planted;
  planted.rate_symbol = "kinit";
  planted.reactant.assign(total, 0);
  planted.product.assign(total, 0);
  for (int i = 0; i < fresh; ++i) planted.reactant[base_species + i] = 1;
  // Products may feed the base network freely.
  planted.product[rng.below(base_species)] = 1;
  steps.push_back(std::move(planted));
  return ReactionNetwork(std::move(names), std::move(steps));
}

/// Reversible-pairs network together with an exactly verified positive
/// equilibrium: x* random positive, forward rates random, backward rates
/// k_b = k_f * x*^alpha / x*^beta (detailed balance, so each pair's net
/// flux vanishes identically).
struct EquilibratedSystem {
  ReactionNetwork network;
  std::vector<Rational> x_star;
  std::vector<Rational> k_values;
};

inline EquilibratedSystem detailed_balance_system(SplitMix64& rng) {
  ReactionNetwork net = reversible_pairs_network(rng);
  auto positive = [&rng] {
    Rational q(static_cast<long>(1 + rng.below(9)), static_cast<long>(1 + rng.below(9)));
    q.canonicalize();
    return q;
  };
  std::vector<Rational> x_star;
  for (int m = 0; m < net.species_count(); ++m) x_star.push_back(positive());
  auto monomial_value = [&](const std::vector<int>& exps) {
    Rational v(1);
    for (int m = 0; m < net.species_count(); ++m)
      if (exps[m] > 0) v *= pow(x_star[m], static_cast<unsigned>(exps[m]));
    return v;
  };
  std::vector<Rational> k_values(net.step_count());
  for (int r = 0; r + 1 < net.step_count(); r += 2) {
    Rational kf = positive();
    k_values[r] = kf;
    k_values[r + 1] = kf * monomial_value(net.step(r).reactant) /
                      monomial_value(net.step(r + 1).reactant);
  }
  return {std::move(net), std::move(x_star), std::move(k_values)};
}

inline Rational random_coefficient(SplitMix64& rng) {
  long num = rng.range(-6, 6);
  if (num == 0) num = 1;
  Rational q(num, rng.range(1, 3));
  q.canonicalize();
  return q;
}

/// Random sparse polynomial over x_1..x_M (and k_1..k_R when rate_vars).
inline Polynomial random_polynomial(SplitMix64& rng, int species, int rates,
                                    int max_terms = 3, int max_degree = 2,
                                    bool rate_vars = true) {
  Polynomial p;
  int terms = static_cast<int>(1 + rng.below(max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int degree = static_cast<int>(rng.below(max_degree + 1));
    for (int d = 0; d < degree; ++d)
      m.multiply_by(Var::x(static_cast<int>(rng.below(species))), 1);
    if (rate_vars && rates > 0 && rng.below(2) == 0)
      m.multiply_by(Var::k(static_cast<int>(rng.below(rates))), 1);
    p += Polynomial::term(m, random_coefficient(rng));
  }
  return p;
}

inline PolyVectorField random_field(SplitMix64& rng, int species, int rates,
                                    int max_terms = 2, int max_degree = 2) {
  PolyVectorField vf = zero_field(species);
  for (int m = 0; m < species; ++m)
    vf.component[m] = random_polynomial(rng, species, rates, max_terms, max_degree);
  return vf;
}

inline RationalPoint random_point(SplitMix64& rng, int species, int rates, long lo = 1,
                                  long hi = 9) {
  RationalPoint p;
  auto draw = [&] {
    Rational q(rng.range(lo, hi), rng.range(1, 4));
    q.canonicalize();
    return q;
  };
  for (int m = 0; m < species; ++m) p.x.push_back(draw());
  for (int r = 0; r < rates; ++r) p.k.push_back(draw());
  return p;
}

}  // namespace crn::testgen

#endif
