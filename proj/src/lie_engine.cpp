#include "crn/lie_engine.hpp"

#include <deque>
#include <stdexcept>

#include "crn/matrix.hpp"

namespace crn {

PolyVectorField step_field(const ReactionNetwork& net, int r) {
  net.step(r);  // bounds check
  Monomial mono = Monomial::from_exponents(net.step(r).reactant);
  PolyVectorField g = zero_field(net.species_count());
  for (int m = 0; m < net.species_count(); ++m) {
    int gamma = net.gamma(m, r);
    if (gamma != 0) g.component[m] = Polynomial::term(mono, Rational(gamma));
  }
  return g;
}

PolyVectorField drift_field(const ReactionNetwork& net, const std::vector<int>& steps) {
  PolyVectorField f = zero_field(net.species_count());
  for (int n : steps) {
    Monomial mono = Monomial::from_exponents(net.step(n).reactant);
    mono.multiply_by(Var::k(n), 1);
    for (int m = 0; m < net.species_count(); ++m) {
      int gamma = net.gamma(m, n);
      if (gamma != 0) f.component[m] += Polynomial::term(mono, Rational(gamma));
    }
  }
  return f;
}

MassActionSystem build_system(const ReactionNetwork& net, const InputSet& inputs) {
  for (int r : inputs.indices) net.step(r);  // validate
  MassActionSystem sys{net, inputs, drift_field(net, inputs.complement(net)), {}};
  sys.controls.reserve(inputs.indices.size());
  for (int i : inputs.indices) sys.controls.push_back(step_field(net, i));
  return sys;
}

namespace {

// kappa_{i,j} is identically zero iff alpha(.,i) (*) gamma(.,j) == 0: the
// nonzero d_m^i are linearly independent, so the sum vanishes only termwise.
bool hadamard_nonzero(const ReactionNetwork& net, int i, int j) {
  for (int m = 0; m < net.species_count(); ++m)
    if (net.alpha(m, i) != 0 && net.gamma(m, j) != 0) return true;
  return false;
}

// Degenerate alignment where the two terms of the closed-form bracket cancel:
// gamma(.,j) = c * gamma(.,i) and alpha(.,i) = alpha(.,j) on the support of
// gamma(.,i). Expanding kappa_{j,i} x^alpha(.,i) gamma(.,j) against
// kappa_{i,j} x^alpha(.,j) gamma(.,i) term by term shows the cancellation is
// exactly this condition (g_j proportional to g_i up to a catalyst factor).
bool proportional_step_fields(const ReactionNetwork& net, int i, int j) {
  int pivot = 0;
  while (net.gamma(pivot, i) == 0) ++pivot;  // columns are never zero
  if (net.gamma(pivot, j) == 0) return false;
  for (int m = 0; m < net.species_count(); ++m) {
    if (net.gamma(m, i) * net.gamma(pivot, j) != net.gamma(m, j) * net.gamma(pivot, i))
      return false;
    if (net.gamma(m, i) != 0 && net.alpha(m, i) != net.alpha(m, j)) return false;
  }
  return true;
}

}  // namespace

BracketClass structural_bracket_class(const ReactionNetwork& net, int i, int j) {
  net.step(i);
  net.step(j);
  if (i == j) throw std::invalid_argument("structural_bracket_class: i == j");
  bool kappa_ij = hadamard_nonzero(net, i, j);
  bool kappa_ji = hadamard_nonzero(net, j, i);
  if (!kappa_ij && !kappa_ji) return BracketClass::Zero;
  if (kappa_ij && !kappa_ji) return BracketClass::MinusI;
  if (!kappa_ij && kappa_ji) return BracketClass::PlusJ;
  if (proportional_step_fields(net, i, j)) return BracketClass::Zero;
  return BracketClass::Mixed;
}

struct Provenance::Node {
  enum Kind { Drift, Control, Bracket } kind;
  int step = -1;
  std::shared_ptr<const Node> left, right;

  std::string str() const {
    switch (kind) {
      case Drift:
        return "f";
      case Control:
        return "g" + std::to_string(step + 1);
      case Bracket:
        return "[" + left->str() + "," + right->str() + "]";
    }
    return "?";
  }
};

Provenance Provenance::drift() {
  Provenance p;
  p.node_ = std::make_shared<Node>(Node{Node::Drift, -1, nullptr, nullptr});
  return p;
}

Provenance Provenance::control(int step_index) {
  Provenance p;
  p.node_ = std::make_shared<Node>(Node{Node::Control, step_index, nullptr, nullptr});
  return p;
}

Provenance Provenance::bracket(const Provenance& left, const Provenance& right) {
  Provenance p;
  p.node_ = std::make_shared<Node>(Node{Node::Bracket, -1, left.node_, right.node_});
  return p;
}

std::string Provenance::str() const { return node_ ? node_->str() : "?"; }

namespace {

RationalPoint random_point_impl(int species, int steps, SplitMix64& rng) {
  auto draw = [&rng] {
    Rational q(BigInt(static_cast<long>(1 + rng.below(1'000'000))),
               BigInt(static_cast<long>(1 + rng.below(1'000'000))));
    q.canonicalize();
    return q;
  };
  RationalPoint p;
  p.x.reserve(species);
  p.k.reserve(steps);
  for (int m = 0; m < species; ++m) p.x.push_back(draw());
  for (int r = 0; r < steps; ++r) p.k.push_back(draw());
  return p;
}

/// Closure worklist state: one RowSpace per sample point; a candidate is
/// admitted when its evaluation escapes the current span at any point.
class Closure {
 public:
  Closure(const MassActionSystem& sys, const ClosureOptions& options)
      : sys_(sys), cap_(options.depth_cap) {
    SplitMix64 rng = derive_stream(options.seed, 0);
    for (int t = 0; t < options.sample_points; ++t)
      points_.push_back(random_point_impl(sys.network.species_count(),
                                          sys.network.step_count(), rng));
    for (const RationalPoint& p : options.extra_points) points_.push_back(p);
    for (std::size_t i = 0; i < points_.size(); ++i)
      spaces_.emplace_back(static_cast<std::size_t>(sys.network.species_count()));
  }

  DistributionBasis run() {
    seed_generators();
    while (!queue_.empty()) {
      Candidate c = queue_.front();
      queue_.pop_front();
      process(c);
    }
    basis_.saturated = !capped_;
    basis_.sample_points = points_;
    return std::move(basis_);
  }

 private:
  struct Candidate {
    int left;   // -1 for the drift f
    int right;  // basis index
  };

  void seed_generators() {
    // Start set {g_i} u {[f,g_i]}: generators are admitted unconditionally,
    // dropping only symbolically zero ones.
    for (std::size_t i = 0; i < sys_.controls.size(); ++i)
      admit(sys_.controls[i], Provenance::control(sys_.inputs.indices[i]), 0);
    if (!sys_.drift.is_zero()) {
      for (std::size_t i = 0; i < sys_.controls.size(); ++i) {
        int gi = sys_.inputs.indices[i];
        // Fast path: [f, g_i] = sum_n k_n [g_n, g_i]; all-Zero classes make
        // the bracket structurally zero.
        bool structurally_zero = true;
        for (int n : sys_.inputs.complement(sys_.network)) {
          if (structural_bracket_class(sys_.network, n, gi) != BracketClass::Zero) {
            structurally_zero = false;
            break;
          }
        }
        if (structurally_zero) {
          ++basis_.pruned_count;
          continue;
        }
        PolyVectorField b = lie_bracket(sys_.drift, sys_.controls[i]);
        if (b.is_zero()) {
          ++basis_.pruned_count;
          continue;
        }
        admit(std::move(b),
              Provenance::bracket(Provenance::drift(), Provenance::control(gi)), 1);
      }
    }
  }

  void process(const Candidate& c) {
    int depth = 1 + (c.left < 0 ? basis_.fields[c.right].depth
                                : std::max(basis_.fields[c.left].depth,
                                           basis_.fields[c.right].depth));
    if (depth > cap_) {
      capped_ = true;
      return;
    }
    const PolyVectorField& left =
        (c.left < 0) ? sys_.drift : basis_.fields[c.left].field;
    PolyVectorField b = lie_bracket(left, basis_.fields[c.right].field);
    if (b.is_zero()) {
      ++basis_.pruned_count;
      return;
    }
    bool grows = false;
    for (std::size_t t = 0; t < points_.size(); ++t)
      if (!spaces_[t].contains(evaluate(b, points_[t]))) {
        grows = true;
        break;
      }
    if (!grows) {
      ++basis_.pruned_count;
      return;
    }
    Provenance left_prov =
        (c.left < 0) ? Provenance::drift() : basis_.fields[c.left].provenance;
    admit(std::move(b),
          Provenance::bracket(left_prov, basis_.fields[c.right].provenance), depth);
  }

  void admit(PolyVectorField field, Provenance prov, int depth) {
    if (field.is_zero()) {
      ++basis_.pruned_count;
      return;
    }
    for (std::size_t t = 0; t < points_.size(); ++t)
      spaces_[t].insert(evaluate(field, points_[t]));
    int id = static_cast<int>(basis_.fields.size());
    basis_.fields.push_back({std::move(field), std::move(prov), depth});
    if (depth > basis_.depth_reached) basis_.depth_reached = depth;
    // Drift bracket first, then pairwise with every earlier field; [x,y] and
    // [y,x] only differ by sign, so one orientation suffices. [f,g_i] for the
    // depth-0 generators is seeded separately.
    if (!sys_.drift.is_zero() && depth > 0) queue_.push_back({-1, id});
    for (int other = 0; other < id; ++other) queue_.push_back({other, id});
  }

  const MassActionSystem& sys_;
  int cap_;
  std::vector<RationalPoint> points_;
  std::vector<RowSpace> spaces_;
  std::deque<Candidate> queue_;
  DistributionBasis basis_;
  bool capped_ = false;
};

}  // namespace

int default_depth_cap(const ReactionNetwork& net) { return 2 * net.species_count(); }

DistributionBasis generate_distribution(const MassActionSystem& sys,
                                        const ClosureOptions& options) {
  if (options.depth_cap < 1) throw std::invalid_argument("depth_cap must be >= 1");
  return Closure(sys, options).run();
}

RankVerdict generic_rank(const DistributionBasis& basis, const ReactionNetwork& net,
                         int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  RankVerdict verdict;
  verdict.target = stoichiometric_rank(net);
  verdict.seed = seed;
  verdict.depth_reached = basis.depth_reached;
  verdict.saturated = basis.saturated;
  SplitMix64 rng = derive_stream(seed, 1);
  for (int t = 0; t < trials; ++t) {
    RationalPoint point = random_positive_point(net, rng);
    RowSpace space(static_cast<std::size_t>(net.species_count()));
    for (const BasisField& f : basis.fields) space.insert(evaluate(f.field, point));
    int rank = space.rank();
    if (rank > verdict.generic_rank) verdict.generic_rank = rank;
    verdict.trials.push_back({std::move(point), rank});
  }
  verdict.controllable_ae = (verdict.generic_rank == verdict.target);
  return verdict;
}

PointRank rank_at_point(const DistributionBasis& basis, const RationalPoint& point) {
  PointRank out;
  if (basis.fields.empty()) return out;
  RowSpace space(basis.fields.front().field.component.size());
  for (const BasisField& f : basis.fields)
    if (space.insert(evaluate(f.field, point)))
      out.certificate.push_back(f.provenance.str());
  out.rank = space.rank();
  return out;
}

RationalPoint random_positive_point(const ReactionNetwork& net, SplitMix64& rng) {
  return random_point_impl(net.species_count(), net.step_count(), rng);
}

ControllabilityResult analyze_controllability(const ReactionNetwork& net,
                                              const InputSet& inputs,
                                              const AnalysisOptions& options) {
  MassActionSystem sys = build_system(net, inputs);
  ClosureOptions closure;
  closure.depth_cap = options.depth_cap > 0 ? options.depth_cap : default_depth_cap(net);
  closure.seed = options.seed;
  closure.sample_points = options.sample_points;
  closure.extra_points = options.extra_points;
  DistributionBasis basis = generate_distribution(sys, closure);
  RankVerdict verdict = generic_rank(basis, net, options.trials, options.seed);
  return {std::move(basis), std::move(verdict)};
}

bool reversibility_preserves(const ReactionNetwork& net, int r, const InputSet& inputs,
                             const AnalysisOptions& options) {
  ReactionNetwork augmented = make_reversible(net, r);
  std::vector<int> idx = inputs.indices;
  idx.push_back(augmented.step_count() - 1);
  InputSet augmented_inputs = InputSet::of(std::move(idx), augmented);
  return analyze_controllability(augmented, augmented_inputs, options)
      .verdict.controllable_ae;
}

}  // namespace crn
