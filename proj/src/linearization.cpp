#include "crn/linearization.hpp"

#include <stdexcept>

#include "crn/lie_engine.hpp"
#include "crn/matrix.hpp"
#include "crn/polynomial.hpp"

namespace crn {

LinearizedSystem linearize_at(const ReactionNetwork& net,
                              const std::vector<Rational>& x_star,
                              const std::vector<Rational>& k_values) {
  const int species = net.species_count();
  const int steps = net.step_count();
  if (static_cast<int>(x_star.size()) != species)
    throw std::invalid_argument("linearize_at: point must assign every species");
  if (static_cast<int>(k_values.size()) != steps)
    throw std::invalid_argument("linearize_at: one rate value per step required");

  LinearizedSystem lin;
  lin.x_star = x_star;
  lin.k_values = k_values;
  for (const Rational& v : x_star)
    if (v <= 0) lin.warned_nonpositive = true;
  for (const Rational& v : k_values)
    if (v <= 0) lin.warned_nonpositive = true;

  RationalPoint point{x_star, k_values};
  std::vector<int> all_steps(steps);
  for (int r = 0; r < steps; ++r) all_steps[r] = r;
  PolyVectorField rhs = drift_field(net, all_steps);  // sum_r k_r g_r, k symbolic

  auto jac = jacobian(rhs);
  lin.a.assign(species, std::vector<Rational>(species));
  for (int m = 0; m < species; ++m)
    for (int n = 0; n < species; ++n) lin.a[m][n] = jac[m][n].evaluate(point);

  lin.b.assign(species, std::vector<Rational>(steps));
  for (int r = 0; r < steps; ++r) {
    Rational monomial(1);
    for (int m = 0; m < species; ++m) {
      int e = net.alpha(m, r);
      if (e > 0) monomial *= pow(x_star[m], static_cast<unsigned>(e));
    }
    for (int m = 0; m < species; ++m) lin.b[m][r] = Rational(net.gamma(m, r)) * monomial;
  }

  lin.residual = evaluate(rhs, point);
  lin.at_equilibrium = true;
  for (const Rational& v : lin.residual)
    if (v != 0) lin.at_equilibrium = false;
  return lin;
}

KalmanResult kalman_rank(const LinearizedSystem& lin, const ReactionNetwork& net) {
  const int species = net.species_count();
  const int steps = net.step_count();
  KalmanResult out;

  auto apply_a = [&](const RatVec& v) {
    RatVec result(species, Rational(0));
    for (int m = 0; m < species; ++m)
      for (int n = 0; n < species; ++n) result[m] += lin.a[m][n] * v[n];
    return result;
  };

  // Columns of [B, AB, ..., A^{M-1}B].
  std::vector<RatVec> block(steps);
  for (int r = 0; r < steps; ++r) {
    block[r].resize(species);
    for (int m = 0; m < species; ++m) block[r][m] = lin.b[m][r];
  }
  out.rank_b = rank_of(block, species);

  std::vector<RatVec> columns;
  for (int power = 0; power < species; ++power) {
    for (int r = 0; r < steps; ++r) columns.push_back(block[r]);
    if (power + 1 < species)
      for (int r = 0; r < steps; ++r) block[r] = apply_a(block[r]);
  }
  out.rank = rank_of(columns, species);

  out.controllability_matrix.assign(species, std::vector<Rational>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int m = 0; m < species; ++m) out.controllability_matrix[m][c] = columns[c][m];

  RowSpace gamma_span(species);
  for (int r = 0; r < steps; ++r) {
    RatVec col(species);
    for (int m = 0; m < species; ++m) col[m] = Rational(net.gamma(m, r));
    gamma_span.insert(col);
  }
  out.a_preserves_stoichiometric_space = true;
  for (int r = 0; r < steps; ++r) {
    RatVec col(species);
    for (int m = 0; m < species; ++m) col[m] = Rational(net.gamma(m, r));
    if (!gamma_span.contains(apply_a(col))) {
      out.a_preserves_stoichiometric_space = false;
      break;
    }
  }
  return out;
}

}  // namespace crn
