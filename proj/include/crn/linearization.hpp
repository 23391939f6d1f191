#ifndef CRN_LINEARIZATION_HPP
#define CRN_LINEARIZATION_HPP

#include <vector>

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// xdot = Ax + Bu around an operating point: A is the exact Jacobian of the
/// full mass-action right-hand side sum_r k_r g_r at x*, B's column r is
/// g_r(x*). The residual sum_r k_r g_r(x*) lets callers verify equilibrium
/// exactly; non-equilibrium points are allowed and flagged.
struct LinearizedSystem {
  RationalMatrix a;             // M x M
  RationalMatrix b;             // M x R
  std::vector<Rational> x_star;
  std::vector<Rational> k_values;
  std::vector<Rational> residual;
  bool at_equilibrium = false;
  bool warned_nonpositive = false;  // some x* coordinate (or k) is <= 0
};

LinearizedSystem linearize_at(const ReactionNetwork& net,
                              const std::vector<Rational>& x_star,
                              const std::vector<Rational>& k_values);

struct KalmanResult {
  RationalMatrix controllability_matrix;  // [B, AB, ..., A^{M-1}B], M x (M*R)
  int rank = 0;
  int rank_b = 0;
  /// Whether A maps every gamma column back into the column space of gamma
  /// (exact membership test); with it, rank <= rank gamma.
  bool a_preserves_stoichiometric_space = false;
};

KalmanResult kalman_rank(const LinearizedSystem& lin, const ReactionNetwork& net);

}  // namespace crn

#endif
