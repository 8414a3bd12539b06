#ifndef TRAINS_MODEL_HPP
#define TRAINS_MODEL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trains/rational.hpp"

namespace trains {

using Coord = std::int64_t;

// Lattice point. The third coordinate is always 0 in 2-dimensional networks,
// so all geometry can be computed uniformly in three coordinates.
using Point = std::array<Coord, 3>;

// One scheduled vehicle: an axis-parallel track, a direction of movement,
// a train length and a speed. The track is either a semi-infinite ray
// starting at the departure point (arrival == nullopt) or a finite segment
// ending at the arrival coordinate along the axis.
struct TrainLine {
  Point departure{0, 0, 0};
  int axis = 0;   // 0 = x, 1 = y, 2 = z
  int sign = +1;  // +1 moves towards +infinity, -1 towards -infinity
  std::int64_t train_length = 1;
  Rat speed{1};
  std::optional<Coord> arrival{};  // arrival coordinate along `axis`

  bool operator==(const TrainLine&) const = default;
};

// Throws std::invalid_argument if the line violates its invariants
// (train_length >= 1, speed > 0, sign in {-1,+1}, axis in [0, dimension),
// finite extent consistent with the sign, z == 0 when dimension == 2).
void check_line(const TrainLine& line, int dimension);

// For a pair of crossing lines: the distances from each line's departure
// point to the crossing point. Both are strictly positive; a would-be
// crossing exactly at a departure point does not count as a crossing.
struct Crossing {
  Coord dist_a = 0;
  Coord dist_b = 0;

  bool operator==(const Crossing&) const = default;
};

// A set of labeled train lines with pairwise non-overlapping (but possibly
// crossing) tracks. Immutable after construction; construction validates
// every invariant and throws on violations.
class TrainNetwork {
 public:
  // Throws std::invalid_argument for bad lines or dimension,
  // StructureError for label problems or overlapping tracks.
  TrainNetwork(int dimension, std::vector<std::pair<std::string, TrainLine>> lines);

  // Convenience: auto-labels lines L0, L1, ...
  TrainNetwork(int dimension, const std::vector<TrainLine>& lines);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const TrainLine& line(std::size_t i) const { return lines_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const std::vector<TrainLine>& lines() const noexcept { return lines_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  int dimension_;
  std::vector<std::string> labels_;
  std::vector<TrainLine> lines_;
};

// A per-line delay assignment, keyed by line label. Delays are exact
// non-negative rationals. Whether the assignment is collision-free is a
// separate question answered by validate_schedule.
class Schedule {
 public:
  Schedule() = default;

  // Throws std::invalid_argument if any delay is negative.
  explicit Schedule(std::map<std::string, Rat> delays);

  void set(const std::string& label, const Rat& delay);
  const Rat* find(const std::string& label) const;

  // Throws StructureError when the label has no delay.
  const Rat& at(const std::string& label) const;

  bool covers(const TrainNetwork& net) const;
  bool is_integer() const;

  // Maximum assigned delay; 0 for an empty schedule.
  Rat max_delay() const;

  std::size_t size() const noexcept { return delays_.size(); }
  const std::map<std::string, Rat>& delays() const noexcept { return delays_; }

  bool operator==(const Schedule&) const = default;

 private:
  std::map<std::string, Rat> delays_;
};

// A colliding crossing pair under a given delay assignment.
struct Violation {
  std::size_t line_a = 0;
  std::size_t line_b = 0;
  std::string label_a;
  std::string label_b;
  Crossing crossing;
  Rat delay_a;
  Rat delay_b;
};

// True iff all speeds are 1 and all train lengths are equal. (Axis-parallel
// tracks and lattice endpoints are structural in this representation, so
// those conditions cannot fail.)
bool is_regular(const TrainNetwork& net);

// The shared train length of a regular network; nullopt when lengths differ.
// Defined as 1 for an empty network.
std::optional<std::int64_t> common_train_length(const TrainNetwork& net);

// Whether two axis-parallel tracks share more than a single point.
bool tracks_overlap(const TrainLine& a, const TrainLine& b);

// The crossing of two non-overlapping tracks, if any: axes must differ, all
// remaining coordinates must agree, and the crossing point must be strictly
// past each departure (and within each finite track). Distances are measured
// along each line's direction of travel.
std::optional<Crossing> crossing_of(const TrainLine& a, const TrainLine& b);

// Whether trains delayed by delay_a / delay_b collide at the given crossing,
// i.e. whether the open time intervals during which each train occupies the
// crossing point intersect.
bool collides(const TrainLine& a, const TrainLine& b, const Crossing& cross,
              const Rat& delay_a, const Rat& delay_b);

// All colliding crossing pairs under schedule s; empty iff s is collision-free.
// Throws StructureError when s lacks a delay for some line.
std::vector<Violation> validate_schedule(const TrainNetwork& net, const Schedule& s);

}  // namespace trains

#endif
