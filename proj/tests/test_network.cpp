#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/matrix.hpp"
#include "crn/network.hpp"
#include "crn/parser.hpp"
#include "generators.hpp"

using namespace crn;

namespace {

ReactionNetwork ex1() {
  return parse_network("X1 ->[k1] X2\n2 X2 ->[k2] X3\n").network;
}

ReactionNetwork ex2() {
  return parse_network("X1 + X2 ->[k1] X2 + X3\nX3 ->[k2] X4\nX4 ->[k3] X2\n").network;
}

}  // namespace

TEST_CASE("gamma is beta minus alpha entrywise") {
  ReactionNetwork net = ex1();
  for (int m = 0; m < net.species_count(); ++m)
    for (int r = 0; r < net.step_count(); ++r)
      CHECK(net.gamma(m, r) == net.beta(m, r) - net.alpha(m, r));
  CHECK(net.gamma_column(0) == std::vector<int>{-1, 1, 0});
  CHECK(net.gamma_column(1) == std::vector<int>{0, -2, 1});

  SplitMix64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    ReactionNetwork random = testgen::random_network(rng);
    for (int m = 0; m < random.species_count(); ++m)
      for (int r = 0; r < random.step_count(); ++r)
        CHECK(random.gamma(m, r) == random.beta(m, r) - random.alpha(m, r));
  }
}

TEST_CASE("construction rejects invalid networks") {
  std::vector<std::string> species{"A", "B"};
  ReactionStep ok{{1, 0}, {0, 1}, "k1"};

  CHECK_THROWS_AS(ReactionNetwork({}, {ok}), std::invalid_argument);
  CHECK_THROWS_AS(ReactionNetwork(species, {}), std::invalid_argument);

  ReactionStep null_step{{1, 0}, {1, 0}, "k1"};
  CHECK_THROWS_AS(ReactionNetwork(species, {null_step}), std::invalid_argument);

  ReactionStep negative{{-1, 0}, {0, 1}, "k1"};
  CHECK_THROWS_AS(ReactionNetwork(species, {negative}), std::invalid_argument);

  ReactionStep dup_a{{1, 0}, {0, 1}, "k1"};
  ReactionStep dup_b{{0, 1}, {1, 0}, "k1"};
  CHECK_THROWS_AS(ReactionNetwork(species, {dup_a, dup_b}), std::invalid_argument);

  CHECK_THROWS_AS(ReactionNetwork({"A", "A"}, {ok}), std::invalid_argument);

  ReactionStep short_vec{{1}, {0}, "k1"};
  CHECK_THROWS_AS(ReactionNetwork(species, {short_vec}), std::invalid_argument);

  // Names must be identifiers so the canonical printer stays parseable.
  CHECK_THROWS_AS(ReactionNetwork({"A", "2 B"}, {ok}), std::invalid_argument);
  ReactionStep bad_symbol{{1, 0}, {0, 1}, "k 1"};
  CHECK_THROWS_AS(ReactionNetwork(species, {bad_symbol}), std::invalid_argument);
}

TEST_CASE("stoichiometric rank") {
  CHECK(stoichiometric_rank(ex1()) == 2);
  CHECK(stoichiometric_rank(ex2()) == 3);
  ReactionNetwork single = parse_network("X ->[k1] Y\n").network;
  CHECK(stoichiometric_rank(single) == 1);
}

TEST_CASE("direct catalyst of a step") {
  ReactionNetwork net = ex2();
  CHECK(is_direct_catalyst_of_step(net, net.species_index("X2"), 0));
  CHECK_FALSE(is_direct_catalyst_of_step(net, net.species_index("X1"), 0));

  // X + 2Y -> 2X + Y: neither species is a direct catalyst.
  ReactionNetwork xy = parse_network("X + 2 Y ->[k1] 2 X + Y\n").network;
  CHECK_FALSE(is_direct_catalyst_of_step(xy, xy.species_index("X"), 0));
  CHECK_FALSE(is_direct_catalyst_of_step(xy, xy.species_index("Y"), 0));

  ReactionNetwork chain = ex1();
  CHECK_FALSE(is_direct_catalyst_of_step(chain, 0, 0));

  CHECK_THROWS_AS(is_direct_catalyst_of_step(net, 99, 0), std::out_of_range);
  CHECK_THROWS_AS(is_direct_catalyst_of_step(net, 0, 99), std::out_of_range);
}

TEST_CASE("direct catalyst of the network") {
  ReactionNetwork cat = parse_network("C + X ->[k1] C + Y\n").network;
  CHECK(is_direct_catalyst_of_network(cat, cat.species_index("C")));
  CHECK_FALSE(is_direct_catalyst_of_network(cat, cat.species_index("X")));

  ReactionNetwork net = ex2();
  CHECK_FALSE(is_direct_catalyst_of_network(net, net.species_index("X2")));
  CHECK_FALSE(is_direct_catalyst_of_network(ex1(), 0));
}

TEST_CASE("network catalyst implies step catalyst wherever it participates") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    ReactionNetwork net = testgen::random_network(rng);
    for (int m = 0; m < net.species_count(); ++m) {
      if (!is_direct_catalyst_of_network(net, m)) continue;
      for (int r = 0; r < net.step_count(); ++r)
        if (net.alpha(m, r) != 0) CHECK(is_direct_catalyst_of_step(net, m, r));
    }
  }
}

TEST_CASE("make_reversible appends the swapped step") {
  ReactionNetwork net = ex1();
  ReactionNetwork rev = make_reversible(net, 0);
  REQUIRE(rev.step_count() == 3);
  CHECK(rev.gamma_column(2) == std::vector<int>{1, -1, 0});
  CHECK(rev.step(2).reactant == net.step(0).product);
  CHECK(rev.step(2).product == net.step(0).reactant);

  // Reversing step 2 yields X3 -> 2 X2.
  ReactionNetwork rev2 = make_reversible(net, 1);
  CHECK(rev2.step(2).reactant == std::vector<int>{0, 0, 1});
  CHECK(rev2.step(2).product == std::vector<int>{0, 2, 0});

  // Fresh symbols stay unique when reversing repeatedly.
  ReactionNetwork twice = make_reversible(make_reversible(net, 0), 0);
  CHECK(twice.step_count() == 4);
  CHECK(twice.step(2).rate_symbol != twice.step(3).rate_symbol);
}

TEST_CASE("make_reversible never changes the stoichiometric rank") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    ReactionNetwork net = testgen::random_network(rng);
    int r = static_cast<int>(rng.below(net.step_count()));
    CHECK(stoichiometric_rank(make_reversible(net, r)) == stoichiometric_rank(net));
  }
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng.below(6);
    std::size_t cols = 1 + rng.below(6);
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    std::vector<RatVec> rational_rows(rows, RatVec(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long v = rng.range(-3, 3);
        m[i][j] = v;
        rational_rows[i][j] = Rational(v);
      }
    CHECK(integer_rank(m) == rank_of(rational_rows, cols));
  }
}

TEST_CASE("input sets") {
  ReactionNetwork net = ex2();
  InputSet inputs = InputSet::of({2, 0, 2}, net);
  CHECK(inputs.indices == std::vector<int>{0, 2});
  CHECK(inputs.contains(0));
  CHECK_FALSE(inputs.contains(1));
  CHECK(inputs.complement(net) == std::vector<int>{1});
  CHECK(InputSet::all(net).indices == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(InputSet::of({5}, net), std::out_of_range);
}
