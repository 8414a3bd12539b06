#include "trains/exact.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "trains/errors.hpp"
#include "trains/schedulers.hpp"

namespace trains {

CompatibilityGraph::CompatibilityGraph(std::size_t n_lines, std::int64_t delay_budget)
    : n_lines_(n_lines), delay_budget_(delay_budget) {
  if (delay_budget < 0) throw std::invalid_argument("delay budget must be non-negative");
  constexpr std::size_t kMaxVertices = std::size_t{1} << 20;
  if (n_lines != 0 && static_cast<std::size_t>(delay_budget) >= kMaxVertices / n_lines)
    throw std::invalid_argument("delay budget too large for an in-memory graph");
  const std::size_t vertex_count = n_lines * stride();
  adjacency_.assign(vertex_count, boost::dynamic_bitset<>(vertex_count));
}

std::size_t CompatibilityGraph::vertex_of(std::size_t line, std::int64_t delay) const {
  if (line >= n_lines_) throw std::out_of_range("line index out of range");
  if (delay < 0 || delay > delay_budget_) throw std::out_of_range("delay out of range");
  return line * stride() + static_cast<std::size_t>(delay);
}

void CompatibilityGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("vertex out of range");
  if (line_of(u) == line_of(v))
    throw std::invalid_argument("vertices of the same line cannot be adjacent");
  if (!adjacency_[u][v]) {
    adjacency_[u][v] = true;
    adjacency_[v][u] = true;
    ++edge_count_;
  }
}

CompatibilityGraph build_graph(const TrainNetwork& net, std::int64_t max_delay) {
  if (!is_regular(net))
    throw UnsupportedError("build_graph requires a regular network");
  CompatibilityGraph g(net.size(), max_delay);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const auto cross = crossing_of(net.line(i), net.line(j));
      for (std::int64_t t0 = 0; t0 <= max_delay; ++t0) {
        for (std::int64_t t1 = 0; t1 <= max_delay; ++t1) {
          if (!cross || !collides(net.line(i), net.line(j), *cross, Rat(t0), Rat(t1)))
            g.add_edge(g.vertex_of(i, t0), g.vertex_of(j, t1));
        }
      }
    }
  }
  return g;
}

namespace {

// Tomita-style branch and bound. A greedy coloring of the candidate set
// bounds the clique size; vertices of one line are pairwise non-adjacent, so
// color classes track the per-line partition and the bound stays near
// n_lines. Sequential and deterministic.
class CliqueSearcher {
 public:
  explicit CliqueSearcher(const CompatibilityGraph& g)
      : g_(g), cap_(g.n_lines()) {}

  std::vector<std::size_t> run() {
    boost::dynamic_bitset<> all(g_.vertex_count());
    all.set();
    expand(all);
    return best_;
  }

 private:
  void expand(const boost::dynamic_bitset<>& candidates) {
    if (candidates.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    color_sort(candidates, order, bound);
    boost::dynamic_bitset<> remaining = candidates;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + bound[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current_.push_back(v);
      expand(remaining & g_.neighbors(v));
      current_.pop_back();
      if (best_.size() >= cap_) return;  // a clique can never exceed n_lines
      remaining.reset(v);
    }
  }

  // Greedy coloring in ascending vertex order; emits vertices grouped by
  // color class, with bound[i] = color number (an upper bound on any clique
  // inside the first i+1 emitted vertices).
  void color_sort(const boost::dynamic_bitset<>& candidates,
                  std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
    boost::dynamic_bitset<> uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      boost::dynamic_bitset<> admissible = uncolored;
      while (admissible.any()) {
        const std::size_t v = admissible.find_first();
        order.push_back(v);
        bound.push_back(color);
        uncolored.reset(v);
        admissible.reset(v);
        admissible -= g_.neighbors(v);
      }
    }
  }

  const CompatibilityGraph& g_;
  std::size_t cap_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique(const CompatibilityGraph& g) {
  CliqueResult result;
  result.members = CliqueSearcher(g).run();
  std::sort(result.members.begin(), result.members.end());
  result.size = result.members.size();
  if (result.size == g.n_lines()) {
    std::vector<std::int64_t> delays(g.n_lines(), 0);
    for (std::size_t v : result.members) delays[g.line_of(v)] = g.delay_of(v);
    result.delays = std::move(delays);
  }
  return result;
}

std::optional<Schedule> has_schedule_within(const TrainNetwork& net, std::int64_t max_delay) {
  const CliqueResult clique = max_clique(build_graph(net, max_delay));
  if (!clique.delays) return std::nullopt;
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) s.set(net.label(i), Rat((*clique.delays)[i]));
  assert(validate_schedule(net, s).empty());
  return s;
}

namespace {

// Delay budget that always admits a schedule: separating all lines in time
// by delta_max + len makes every pair of crossing intervals disjoint.
std::int64_t separation_bound(const TrainNetwork& net, std::int64_t len) {
  if (net.size() <= 1) return 0;
  Coord delta_max = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (const auto cross = crossing_of(net.line(i), net.line(j))) {
        delta_max = std::max({delta_max, cross->dist_a, cross->dist_b});
      }
    }
  }
  if (delta_max == 0) return 0;  // no crossings at all
  return static_cast<std::int64_t>(net.size() - 1) * (delta_max + len);
}

}  // namespace

MinDelayResult min_delay(const TrainNetwork& net) {
  if (!is_regular(net))
    throw UnsupportedError("min_delay requires a regular network");
  const std::int64_t len = *common_train_length(net);
  const std::int64_t cap =
      constructive_delay_bound(net).value_or(separation_bound(net, len));
  for (std::int64_t budget = 0; budget <= cap; ++budget) {
    if (auto schedule = has_schedule_within(net, budget))
      return {budget, std::move(*schedule)};
  }
  throw std::logic_error("min_delay: no schedule within the guaranteed bound");
}

namespace {

// Bijective base-26 labels: A..Z, AA, AB, ...
std::string letter_label(std::size_t index) {
  std::string label;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    label.insert(label.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return label;
}

}  // namespace

TrainNetwork generate_grid(std::int64_t train_length) {
  if (train_length < 1) throw std::invalid_argument("train length must be positive");
  std::vector<std::pair<std::string, TrainLine>> lines;
  std::size_t next = 0;
  for (Coord j = 1; j <= train_length; ++j) {
    lines.emplace_back(letter_label(next++),
                       TrainLine{.departure = {0, j, 0}, .axis = 0, .sign = +1,
                                 .train_length = train_length});
  }
  for (Coord i = 1; i <= train_length; ++i) {
    lines.emplace_back(letter_label(next++),
                       TrainLine{.departure = {i, 0, 0}, .axis = 1, .sign = +1,
                                 .train_length = train_length});
  }
  return TrainNetwork(2, std::move(lines));
}

}  // namespace trains
