#ifndef TRAINS_SCHEDULERS_HPP
#define TRAINS_SCHEDULERS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "trains/model.hpp"

namespace trains {

enum class SchedulerStrategy {
  PositiveLines,  // all-positive regular networks, delay <= d*len - 1
  TwoD,           // regular 2d networks of any sign, delay <= M - 1
  ThreeDUnit,     // regular 3d networks with train length 1, delay <= 5
  ExactSearch,    // exact minimum-delay search; no constant bound
  Auto,           // pick the strongest applicable strategy
};

std::string strategy_name(SchedulerStrategy s);

// The period of the 2d scheduler: 2 for length 1, 8 for length 2,
// 6*len for length >= 3. Always an even multiple of the train length.
struct Modulus {
  std::int64_t value;

  static Modulus for_train_length(std::int64_t train_length);
};

// Delay (len*axis + sum of departure coordinates) mod (d*len).
// Requires a regular network with only positive lines; the result is
// always collision-free with every delay in [0, d*len - 1].
Schedule schedule_positive(const TrainNetwork& net);

// Sign-aware modular scheduler for regular 2d networks; every delay is in
// [0, M - 1] with M = Modulus::for_train_length. Always collision-free.
Schedule schedule_2d(const TrainNetwork& net);

// Scheduler for regular 3d networks with train length 1. Each line gets the
// unique delay in {0,...,5} determined by a pair of congruences (mod 3 and
// mod 2) on its departure sum, axis and sign. Always collision-free.
Schedule schedule_3d_unit(const TrainNetwork& net);

// Rounds every delay of a valid schedule down to an integer. The result is
// still collision-free on regular networks and never has a larger maximum
// delay. Throws std::invalid_argument when the input schedule has collisions.
Schedule floor_schedule(const TrainNetwork& net, const Schedule& s);

struct AutoScheduleResult {
  Schedule schedule;
  SchedulerStrategy strategy;               // concrete strategy that ran
  std::optional<std::int64_t> delay_bound;  // nullopt: no constant guarantee
};

// Dispatch: all-positive -> PositiveLines; else 2d -> TwoD; else 3d with
// train length 1 -> ThreeDUnit; otherwise falls back to the exact search,
// which carries no constant delay bound.
AutoScheduleResult auto_schedule(const TrainNetwork& net);

// The guaranteed delay bound of the strategy Auto would pick, or nullopt
// when only the exact fallback applies. Requires a regular network.
std::optional<std::int64_t> constructive_delay_bound(const TrainNetwork& net);

}  // namespace trains

#endif
