#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/linearization.hpp"
#include "crn/parser.hpp"
#include "generators.hpp"

using namespace crn;

TEST_CASE("reversible pair at its symmetric equilibrium") {
  ReactionNetwork net = parse_network("A <=>[k1,k2] B\n").network;
  LinearizedSystem lin =
      linearize_at(net, {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
  CHECK(lin.at_equilibrium);
  CHECK(lin.residual == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK_FALSE(lin.warned_nonpositive);

  CHECK(lin.b[0][0] == Rational(-1));
  CHECK(lin.b[1][0] == Rational(1));
  CHECK(lin.b[0][1] == Rational(1));
  CHECK(lin.b[1][1] == Rational(-1));

  KalmanResult kalman = kalman_rank(lin, net);
  CHECK(kalman.rank_b == 1);
  CHECK(kalman.rank_b == stoichiometric_rank(net));
  CHECK(kalman.rank == 1);
  CHECK(kalman.a_preserves_stoichiometric_space);
}

TEST_CASE("non-equilibrium points are flagged with an exact residual") {
  ReactionNetwork net = parse_network("X1 ->[k1] X2\n2 X2 ->[k2] X3\n").network;
  LinearizedSystem lin = linearize_at(net, {Rational(1), Rational(1), Rational(1)},
                                      {Rational(1), Rational(1)});
  CHECK_FALSE(lin.at_equilibrium);
  CHECK(lin.residual ==
        std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});
}

TEST_CASE("degenerate points: zero concentrations zero out B") {
  ReactionNetwork net = parse_network("X1 ->[k1] X2\n2 X2 ->[k2] X3\n").network;
  LinearizedSystem lin = linearize_at(net, {Rational(0), Rational(0), Rational(0)},
                                      {Rational(1), Rational(1)});
  CHECK(lin.warned_nonpositive);
  KalmanResult kalman = kalman_rank(lin, net);
  CHECK(kalman.rank_b == 0);
  CHECK(kalman.rank == 0);
}

TEST_CASE("argument validation") {
  ReactionNetwork net = parse_network("A <=>[k1,k2] B\n").network;
  CHECK_THROWS_AS(linearize_at(net, {Rational(1)}, {Rational(1), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(linearize_at(net, {Rational(1), Rational(1)}, {Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("detailed-balance equilibria satisfy rank B = rank gamma") {
  SplitMix64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    testgen::EquilibratedSystem sys = testgen::detailed_balance_system(rng);
    LinearizedSystem lin = linearize_at(sys.network, sys.x_star, sys.k_values);
    REQUIRE(lin.at_equilibrium);  // construction is exact
    KalmanResult kalman = kalman_rank(lin, sys.network);
    CHECK(kalman.rank_b == stoichiometric_rank(sys.network));
    CHECK(kalman.rank >= kalman.rank_b);
    CHECK(kalman.a_preserves_stoichiometric_space);
    CHECK(kalman.rank <= stoichiometric_rank(sys.network));
  }
}

TEST_CASE("Kalman rank bounds on random networks at positive points") {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 15; ++trial) {
    ReactionNetwork net = testgen::random_network(rng);
    RationalPoint p = testgen::random_point(rng, net.species_count(), net.step_count());
    LinearizedSystem lin = linearize_at(net, p.x, p.k);
    KalmanResult kalman = kalman_rank(lin, net);
    CHECK(kalman.rank >= kalman.rank_b);
    // A's image lies in Im(gamma), so the Kalman rank cannot exceed rank gamma.
    CHECK(kalman.a_preserves_stoichiometric_space);
    CHECK(kalman.rank <= stoichiometric_rank(net));
    CHECK(kalman.rank_b == stoichiometric_rank(net));  // positive point scaling
  }
}
