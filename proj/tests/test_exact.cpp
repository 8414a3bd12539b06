#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "trains/errors.hpp"
#include "trains/exact.hpp"
#include "trains/schedulers.hpp"

using namespace trains;
using testutil::brute_force_schedule;
using testutil::network1;
using testutil::NetworkParams;
using testutil::random_network;

namespace {

// Edge count by direct enumeration over the collision predicate, bypassing
// the graph's own bookkeeping.
std::size_t enumerate_edges(const TrainNetwork& net, std::int64_t budget) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const auto cross = crossing_of(net.line(i), net.line(j));
      for (std::int64_t t0 = 0; t0 <= budget; ++t0) {
        for (std::int64_t t1 = 0; t1 <= budget; ++t1) {
          if (!cross || !collides(net.line(i), net.line(j), *cross, Rat(t0), Rat(t1)))
            ++edges;
        }
      }
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("build_graph on the four-line example") {
  const TrainNetwork net = network1();

  const CompatibilityGraph g3 = build_graph(net, 3);
  CHECK(g3.vertex_count() == 16);
  CHECK(g3.edge_count() == 58);
  CHECK(enumerate_edges(net, 3) == 58);

  const CompatibilityGraph g2 = build_graph(net, 2);
  CHECK(g2.vertex_count() == 12);
  CHECK(g2.edge_count() == enumerate_edges(net, 2));

  // vertices of one line form an independent set
  for (std::int64_t t0 = 0; t0 <= 3; ++t0)
    for (std::int64_t t1 = 0; t1 <= 3; ++t1)
      CHECK_FALSE(g3.adjacent(g3.vertex_of(0, t0), g3.vertex_of(0, t1)));

  // the non-crossing pair (A, B) is completely joined
  for (std::int64_t t0 = 0; t0 <= 3; ++t0)
    for (std::int64_t t1 = 0; t1 <= 3; ++t1)
      CHECK(g3.adjacent(g3.vertex_of(0, t0), g3.vertex_of(1, t1)));
}

TEST_CASE("build_graph edge cases") {
  const TrainNetwork single(
      2, std::vector<TrainLine>{
             TrainLine{.departure = {0, 0, 0}, .axis = 0, .sign = +1, .train_length = 1}});
  const CompatibilityGraph g = build_graph(single, 4);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);

  CHECK_THROWS_AS(build_graph(single, -1), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(single, std::int64_t{1} << 40), std::invalid_argument);

  TrainLine slow{.departure = {0, 0, 0}, .axis = 0, .sign = +1, .train_length = 1};
  slow.speed = Rat(1, 2);
  CHECK_THROWS_AS(build_graph(TrainNetwork(2, std::vector<TrainLine>{slow}), 1),
                  UnsupportedError);
}

TEST_CASE("compatibility graph vertex numbering and edge rules") {
  CompatibilityGraph g(3, 2);
  CHECK(g.vertex_of(0, 0) == 0);
  CHECK(g.vertex_of(1, 0) == 3);
  CHECK(g.vertex_of(2, 2) == 8);
  CHECK(g.line_of(7) == 2);
  CHECK(g.delay_of(7) == 1);
  CHECK_THROWS_AS(g.vertex_of(3, 0), std::out_of_range);
  CHECK_THROWS_AS(g.vertex_of(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);  // same line
  g.add_edge(0, 3);
  g.add_edge(3, 0);  // duplicate insert keeps the count stable
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 0));
}

TEST_CASE("max_clique on the four-line example") {
  const TrainNetwork net = network1();

  const CliqueResult at2 = max_clique(build_graph(net, 2));
  CHECK(at2.size == 3);
  CHECK_FALSE(at2.delays.has_value());

  const CompatibilityGraph g3 = build_graph(net, 3);
  const CliqueResult at3 = max_clique(g3);
  CHECK(at3.size == 4);
  REQUIRE(at3.delays.has_value());
  CHECK(validate_schedule(net, testutil::to_schedule(net, *at3.delays)).empty());
  for (std::int64_t delay : *at3.delays) CHECK(delay <= 3);
  for (std::size_t a = 0; a < at3.members.size(); ++a)
    for (std::size_t b = a + 1; b < at3.members.size(); ++b)
      CHECK(g3.adjacent(at3.members[a], at3.members[b]));
}

TEST_CASE("max_clique on an empty graph") {
  const CliqueResult empty = max_clique(CompatibilityGraph(0, 3));
  CHECK(empty.size == 0);
  CHECK(empty.members.empty());
  REQUIRE(empty.delays.has_value());  // zero lines are vacuously covered
  CHECK(empty.delays->empty());
}

TEST_CASE("max_clique is deterministic") {
  std::mt19937_64 rng(9000);
  for (int trial = 0; trial < 20; ++trial) {
    const TrainNetwork net = random_network(
        rng, NetworkParams{.dimension = 2, .train_length = 2, .max_lines = 6});
    const CompatibilityGraph g = build_graph(net, 3);
    const CliqueResult first = max_clique(g);
    const CliqueResult second = max_clique(g);
    CHECK(first.members == second.members);
    CHECK(first.size <= net.size());  // per-line independent sets cap the clique
  }
}

TEST_CASE("has_schedule_within matches the worked example") {
  const TrainNetwork net = network1();
  CHECK_FALSE(has_schedule_within(net, 2).has_value());

  const auto at3 = has_schedule_within(net, 3);
  REQUIRE(at3.has_value());
  CHECK(validate_schedule(net, *at3).empty());
  CHECK(at3->max_delay() <= Rat(3));
  CHECK(at3->is_integer());

  const TrainNetwork crossing_free(
      2, std::vector<TrainLine>{
             TrainLine{.departure = {0, 0, 0}, .axis = 0, .sign = +1, .train_length = 1},
             TrainLine{.departure = {0, 1, 0}, .axis = 0, .sign = +1, .train_length = 1}});
  const auto zero = has_schedule_within(crossing_free, 0);
  REQUIRE(zero.has_value());
  CHECK(zero->max_delay() == Rat(0));
}

TEST_CASE("min_delay on the worked example and a tiny crossing") {
  const MinDelayResult net1 = min_delay(network1());
  CHECK(net1.min_delay == 3);
  CHECK(validate_schedule(network1(), net1.schedule).empty());

  // two unit-length lines with equal distances to the crossing
  const TrainNetwork pair(
      2, std::vector<TrainLine>{
             TrainLine{.departure = {0, 1, 0}, .axis = 0, .sign = +1, .train_length = 1},
             TrainLine{.departure = {1, 0, 0}, .axis = 1, .sign = +1, .train_length = 1}});
  const MinDelayResult tiny = min_delay(pair);
  CHECK(tiny.min_delay == 1);
}

TEST_CASE("min_delay handles networks outside the constructive classes") {
  // 3d, length 2, mixed signs: only the separation bound applies
  const TrainNetwork net(
      3, std::vector<TrainLine>{
             TrainLine{.departure = {0, 0, 0}, .axis = 0, .sign = +1, .train_length = 2},
             TrainLine{.departure = {1, -1, 0}, .axis = 1, .sign = -1, .train_length = 2},
             TrainLine{.departure = {2, 0, -1}, .axis = 2, .sign = +1, .train_length = 2}});
  const MinDelayResult result = min_delay(net);
  CHECK(validate_schedule(net, result.schedule).empty());
  if (result.min_delay > 0)
    CHECK_FALSE(has_schedule_within(net, result.min_delay - 1).has_value());
}

TEST_CASE("generate_grid") {
  const TrainNetwork two = generate_grid(2);
  const TrainNetwork reference = network1();
  REQUIRE(two.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(two.label(i) == reference.label(i));
    CHECK(two.line(i) == reference.line(i));
  }

  const TrainNetwork one = generate_grid(1);
  REQUIRE(one.size() == 2);
  const auto cross = crossing_of(one.line(0), one.line(1));
  REQUIRE(cross.has_value());
  CHECK(*cross == Crossing{1, 1});

  const TrainNetwork three = generate_grid(3);
  CHECK(three.size() == 6);
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < three.size(); ++i)
    for (std::size_t j = i + 1; j < three.size(); ++j)
      if (crossing_of(three.line(i), three.line(j))) ++crossings;
  CHECK(crossings == 9);

  CHECK_THROWS_AS(generate_grid(0), std::invalid_argument);
}

TEST_CASE("grid minimum delays follow the 2*len - 1 pattern") {
  for (std::int64_t len = 1; len <= 3; ++len) {
    const MinDelayResult result = min_delay(generate_grid(len));
    CHECK(result.min_delay == 2 * len - 1);
  }
}

TEST_CASE("solver agrees with brute force on small networks") {
  std::mt19937_64 rng(9200);
  for (int trial = 0; trial < 120; ++trial) {
    const NetworkParams params{
        .dimension = trial % 2 == 0 ? 2 : 3,
        .train_length = 1 + trial % 3,
        .max_lines = 5,
        .coord_range = 3,
    };
    const TrainNetwork net = random_network(rng, params);
    for (std::int64_t budget = 0; budget <= 4; ++budget) {
      const auto solver = has_schedule_within(net, budget);
      const auto brute = brute_force_schedule(net, budget);
      CHECK(solver.has_value() == brute.has_value());
      if (solver) {
        CHECK(validate_schedule(net, *solver).empty());
        CHECK(solver->max_delay() <= Rat(budget));
      }
    }
  }
}

TEST_CASE("feasibility is monotone and min_delay brackets the optimum") {
  std::mt19937_64 rng(9400);
  for (int trial = 0; trial < 40; ++trial) {
    const TrainNetwork net = random_network(
        rng, NetworkParams{.dimension = 2, .train_length = 2, .max_lines = 6});
    const MinDelayResult result = min_delay(net);
    CHECK(has_schedule_within(net, result.min_delay).has_value());
    if (result.min_delay > 0)
      CHECK_FALSE(has_schedule_within(net, result.min_delay - 1).has_value());
    CHECK(has_schedule_within(net, result.min_delay + 1).has_value());
    CHECK(validate_schedule(net, result.schedule).empty());
  }
}

TEST_CASE("min_delay requires a regular network") {
  TrainLine slow{.departure = {0, 0, 0}, .axis = 0, .sign = +1, .train_length = 1};
  slow.speed = Rat(1, 2);
  CHECK_THROWS_AS(min_delay(TrainNetwork(2, std::vector<TrainLine>{slow})),
                  UnsupportedError);
}
