#include "trains/model.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <stdexcept>

#include "trains/errors.hpp"

namespace trains {

void check_line(const TrainLine& line, int dimension) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("dimension must be 2 or 3");
  if (line.axis < 0 || line.axis >= dimension)
    throw std::invalid_argument("axis " + std::to_string(line.axis) +
                                " out of range for dimension " + std::to_string(dimension));
  if (line.sign != 1 && line.sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  if (line.train_length < 1)
    throw std::invalid_argument("train length must be positive");
  if (line.speed <= Rat(0))
    throw std::invalid_argument("speed must be positive");
  if (dimension == 2 && line.departure[2] != 0)
    throw std::invalid_argument("third coordinate must be 0 in a 2-dimensional network");
  if (line.arrival) {
    const Coord dep = line.departure[static_cast<std::size_t>(line.axis)];
    if (*line.arrival == dep)
      throw std::invalid_argument("arrival coincides with departure");
    if ((*line.arrival > dep) != (line.sign > 0))
      throw std::invalid_argument("arrival lies behind the direction of movement");
  }
}

namespace {

bool label_ok(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(),
                      [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

TrainNetwork::TrainNetwork(int dimension,
                           std::vector<std::pair<std::string, TrainLine>> lines)
    : dimension_(dimension) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("dimension must be 2 or 3");
  labels_.reserve(lines.size());
  lines_.reserve(lines.size());
  std::set<std::string> seen;
  for (auto& [label, line] : lines) {
    check_line(line, dimension);
    if (!label_ok(label))
      throw StructureError("invalid label '" + label + "': labels must be non-empty and whitespace-free");
    if (!seen.insert(label).second)
      throw StructureError("duplicate label '" + label + "'");
    labels_.push_back(std::move(label));
    lines_.push_back(line);
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (std::size_t j = i + 1; j < lines_.size(); ++j) {
      if (tracks_overlap(lines_[i], lines_[j]))
        throw StructureError("overlapping tracks: '" + labels_[i] + "' and '" + labels_[j] + "'");
    }
  }
}

TrainNetwork::TrainNetwork(int dimension, const std::vector<TrainLine>& lines)
    : TrainNetwork(dimension, [&] {
        std::vector<std::pair<std::string, TrainLine>> labeled;
        labeled.reserve(lines.size());
        for (std::size_t i = 0; i < lines.size(); ++i)
          labeled.emplace_back("L" + std::to_string(i), lines[i]);
        return labeled;
      }()) {}

std::optional<std::size_t> TrainNetwork::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Schedule::Schedule(std::map<std::string, Rat> delays) : delays_(std::move(delays)) {
  for (const auto& [label, delay] : delays_) {
    if (delay < Rat(0))
      throw std::invalid_argument("negative delay for '" + label + "'");
  }
}

void Schedule::set(const std::string& label, const Rat& delay) {
  if (delay < Rat(0))
    throw std::invalid_argument("negative delay for '" + label + "'");
  delays_[label] = delay;
}

const Rat* Schedule::find(const std::string& label) const {
  auto it = delays_.find(label);
  return it == delays_.end() ? nullptr : &it->second;
}

const Rat& Schedule::at(const std::string& label) const {
  if (const Rat* d = find(label)) return *d;
  throw StructureError("no delay assigned to line '" + label + "'");
}

bool Schedule::covers(const TrainNetwork& net) const {
  for (const auto& label : net.labels())
    if (!delays_.contains(label)) return false;
  return true;
}

bool Schedule::is_integer() const {
  for (const auto& [label, delay] : delays_)
    if (!trains::is_integer(delay)) return false;
  return true;
}

Rat Schedule::max_delay() const {
  Rat best(0);
  for (const auto& [label, delay] : delays_) best = std::max(best, delay);
  return best;
}

bool is_regular(const TrainNetwork& net) {
  for (const TrainLine& line : net.lines())
    if (line.speed != Rat(1)) return false;
  return common_train_length(net).has_value();
}

std::optional<std::int64_t> common_train_length(const TrainNetwork& net) {
  if (net.size() == 0) return 1;
  const std::int64_t len = net.line(0).train_length;
  for (const TrainLine& line : net.lines())
    if (line.train_length != len) return std::nullopt;
  return len;
}

namespace {

// Closed track span along the line's axis; an absent bound is infinite.
struct Span {
  std::optional<Coord> lo;
  std::optional<Coord> hi;
};

Span track_span(const TrainLine& line) {
  const Coord dep = line.departure[static_cast<std::size_t>(line.axis)];
  if (line.arrival) return {std::min(dep, *line.arrival), std::max(dep, *line.arrival)};
  if (line.sign > 0) return {dep, std::nullopt};
  return {std::nullopt, dep};
}

}  // namespace

bool tracks_overlap(const TrainLine& a, const TrainLine& b) {
  if (a.axis != b.axis) return false;
  for (int i = 0; i < 3; ++i) {
    if (i == a.axis) continue;
    if (a.departure[static_cast<std::size_t>(i)] != b.departure[static_cast<std::size_t>(i)])
      return false;
  }
  const Span sa = track_span(a);
  const Span sb = track_span(b);
  std::optional<Coord> lo, hi;
  if (sa.lo && sb.lo) lo = std::max(*sa.lo, *sb.lo);
  else lo = sa.lo ? sa.lo : sb.lo;
  if (sa.hi && sb.hi) hi = std::min(*sa.hi, *sb.hi);
  else hi = sa.hi ? sa.hi : sb.hi;
  if (!lo || !hi) return true;  // intersection is a half-line
  return *lo < *hi;             // sharing a single point is not an overlap
}

std::optional<Crossing> crossing_of(const TrainLine& a, const TrainLine& b) {
  if (a.axis == b.axis) return std::nullopt;  // parallel tracks never cross
  for (int i = 0; i < 3; ++i) {
    if (i == a.axis || i == b.axis) continue;
    if (a.departure[static_cast<std::size_t>(i)] != b.departure[static_cast<std::size_t>(i)])
      return std::nullopt;
  }
  const auto ax_a = static_cast<std::size_t>(a.axis);
  const auto ax_b = static_cast<std::size_t>(b.axis);
  const Coord dist_a = (b.departure[ax_a] - a.departure[ax_a]) * a.sign;
  const Coord dist_b = (a.departure[ax_b] - b.departure[ax_b]) * b.sign;
  if (dist_a <= 0 || dist_b <= 0) return std::nullopt;  // strictly past both departures
  if (a.arrival && dist_a > (*a.arrival - a.departure[ax_a]) * a.sign) return std::nullopt;
  if (b.arrival && dist_b > (*b.arrival - b.departure[ax_b]) * b.sign) return std::nullopt;
  return Crossing{dist_a, dist_b};
}

bool collides(const TrainLine& a, const TrainLine& b, const Crossing& cross,
              const Rat& delay_a, const Rat& delay_b) {
  // Open interval during which each train occupies the crossing point.
  const Rat a_enter = delay_a + Rat(cross.dist_a) / a.speed;
  const Rat a_leave = delay_a + Rat(cross.dist_a + a.train_length) / a.speed;
  const Rat b_enter = delay_b + Rat(cross.dist_b) / b.speed;
  const Rat b_leave = delay_b + Rat(cross.dist_b + b.train_length) / b.speed;
  return a_enter < b_leave && b_enter < a_leave;
}

std::vector<Violation> validate_schedule(const TrainNetwork& net, const Schedule& s) {
  std::vector<Violation> violations;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Rat& delay_i = s.at(net.label(i));
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const auto cross = crossing_of(net.line(i), net.line(j));
      if (!cross) continue;
      const Rat& delay_j = s.at(net.label(j));
      if (collides(net.line(i), net.line(j), *cross, delay_i, delay_j)) {
        violations.push_back(Violation{i, j, net.label(i), net.label(j), *cross,
                                       delay_i, delay_j});
      }
    }
  }
  return violations;
}

}  // namespace trains
