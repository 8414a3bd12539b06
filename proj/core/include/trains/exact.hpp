#ifndef TRAINS_EXACT_HPP
#define TRAINS_EXACT_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trains/model.hpp"

namespace trains {

// Compatibility graph for the delay-feasibility question: one vertex per
// (line, delay) pair with delays in {0,...,D}; an edge joins two vertices of
// distinct lines iff assigning those delays causes no collision between the
// two lines. Vertices of the same line are never adjacent, so a clique with
// one vertex per line is exactly a collision-free integer assignment.
class CompatibilityGraph {
 public:
  CompatibilityGraph(std::size_t n_lines, std::int64_t delay_budget);

  std::size_t n_lines() const noexcept { return n_lines_; }
  std::int64_t delay_budget() const noexcept { return delay_budget_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t vertex_of(std::size_t line, std::int64_t delay) const;
  std::size_t line_of(std::size_t v) const { return v / stride(); }
  std::int64_t delay_of(std::size_t v) const { return static_cast<std::int64_t>(v % stride()); }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
  const boost::dynamic_bitset<>& neighbors(std::size_t v) const { return adjacency_[v]; }

 private:
  std::size_t stride() const noexcept { return static_cast<std::size_t>(delay_budget_) + 1; }

  std::size_t n_lines_;
  std::int64_t delay_budget_;
  std::size_t edge_count_ = 0;
  std::vector<boost::dynamic_bitset<>> adjacency_;
};

// Builds the compatibility graph for delays up to max_delay.
// Requires a regular network and max_delay >= 0.
CompatibilityGraph build_graph(const TrainNetwork& net, std::int64_t max_delay);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> members;  // vertex ids, ascending
  // Per-line delays decoded from the clique; present iff size == n_lines.
  std::optional<std::vector<std::int64_t>> delays;
};

// Exact maximum clique via branch and bound with a greedy coloring bound.
// Deterministic: a fixed branching order makes the witness reproducible.
CliqueResult max_clique(const CompatibilityGraph& g);

// A collision-free integer schedule with every delay <= max_delay, if one
// exists. Requires a regular network.
std::optional<Schedule> has_schedule_within(const TrainNetwork& net, std::int64_t max_delay);

struct MinDelayResult {
  std::int64_t min_delay = 0;
  Schedule schedule;
};

// The smallest D admitting an integer schedule with all delays <= D, plus a
// witness. Ascends D = 0, 1, 2, ...; termination is guaranteed by the
// constructive schedulers' bounds (or a separation bound when none applies).
MinDelayResult min_delay(const TrainNetwork& net);

// The square grid family: `train_length` eastbound lines departing from
// (0, j, 0) and `train_length` northbound lines from (i, 0, 0), all with the
// given train length. Its minimum delay is 2*train_length - 1.
TrainNetwork generate_grid(std::int64_t train_length);

}  // namespace trains

#endif
