#ifndef TRAINS_TEST_GENERATORS_HPP
#define TRAINS_TEST_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "trains/model.hpp"

namespace trains::testutil {

struct NetworkParams {
  int dimension = 2;
  std::int64_t train_length = 1;
  std::size_t max_lines = 12;
  Coord coord_range = 5;       // departure coordinates drawn from [-range, range]
  bool mixed_signs = true;
};

// Random regular ray network; overlap-free by whole-network rejection.
inline TrainNetwork random_network(std::mt19937_64& rng, const NetworkParams& p) {
  std::uniform_int_distribution<Coord> coord(-p.coord_range, p.coord_range);
  std::uniform_int_distribution<int> axis(0, p.dimension - 1);
  std::uniform_int_distribution<std::size_t> count(1, p.max_lines);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    const std::size_t n = count(rng);
    std::vector<TrainLine> lines;
    lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      TrainLine line;
      line.axis = axis(rng);
      line.sign = p.mixed_signs && coin(rng) == 1 ? -1 : +1;
      line.train_length = p.train_length;
      line.departure = {coord(rng), coord(rng), p.dimension == 2 ? 0 : coord(rng)};
      lines.push_back(line);
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (tracks_overlap(lines[i], lines[j])) ok = false;
    if (ok) return TrainNetwork(p.dimension, lines);
  }
}

// The worked four-line example: two eastbound and two northbound lines of
// train length 2 whose minimum delay is 3.
inline TrainNetwork network1() {
  return TrainNetwork(
      2, {{"A", TrainLine{.departure = {0, 1, 0}, .axis = 0, .sign = +1, .train_length = 2}},
          {"B", TrainLine{.departure = {0, 2, 0}, .axis = 0, .sign = +1, .train_length = 2}},
          {"C", TrainLine{.departure = {1, 0, 0}, .axis = 1, .sign = +1, .train_length = 2}},
          {"D", TrainLine{.departure = {2, 0, 0}, .axis = 1, .sign = +1, .train_length = 2}}});
}

inline bool assignment_valid(const TrainNetwork& net, const std::vector<std::int64_t>& delays) {
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const auto cross = crossing_of(net.line(i), net.line(j));
      if (cross && collides(net.line(i), net.line(j), *cross, Rat(delays[i]), Rat(delays[j])))
        return false;
    }
  }
  return true;
}

// Independent oracle: enumerate all (budget+1)^n integer assignments and test
// each one with the collision predicate. Intentionally avoids the exact
// solver so the two can be compared.
inline std::optional<std::vector<std::int64_t>> brute_force_schedule(
    const TrainNetwork& net, std::int64_t budget) {
  std::vector<std::int64_t> delays(net.size(), 0);
  for (;;) {
    if (assignment_valid(net, delays)) return delays;
    std::size_t pos = 0;
    while (pos < delays.size()) {
      if (++delays[pos] <= budget) break;
      delays[pos++] = 0;
    }
    if (pos == delays.size()) return std::nullopt;
  }
}

inline Schedule to_schedule(const TrainNetwork& net, const std::vector<std::int64_t>& delays) {
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) s.set(net.label(i), Rat(delays[i]));
  return s;
}

}  // namespace trains::testutil

#endif
