#include "trains/schedulers.hpp"

#include <cassert>
#include <stdexcept>

#include "trains/errors.hpp"
#include "trains/exact.hpp"

namespace trains {

std::string strategy_name(SchedulerStrategy s) {
  switch (s) {
    case SchedulerStrategy::PositiveLines: return "positive";
    case SchedulerStrategy::TwoD: return "2d";
    case SchedulerStrategy::ThreeDUnit: return "3d-unit";
    case SchedulerStrategy::ExactSearch: return "exact";
    case SchedulerStrategy::Auto: return "auto";
  }
  return "?";
}

Modulus Modulus::for_train_length(std::int64_t train_length) {
  if (train_length < 1) throw std::invalid_argument("train length must be positive");
  if (train_length == 1) return Modulus{2};
  if (train_length == 2) return Modulus{8};
  return Modulus{6 * train_length};
}

namespace {

std::int64_t require_regular(const TrainNetwork& net, const char* who) {
  if (!is_regular(net))
    throw UnsupportedError(std::string(who) + " requires a regular network");
  return *common_train_length(net);
}

bool all_positive(const TrainNetwork& net) {
  for (const TrainLine& line : net.lines())
    if (line.sign < 0) return false;
  return true;
}

std::int64_t coordinate_sum(const TrainLine& line) {
  return line.departure[0] + line.departure[1] + line.departure[2];
}

}  // namespace

Schedule schedule_positive(const TrainNetwork& net) {
  const std::int64_t len = require_regular(net, "schedule_positive");
  if (!all_positive(net))
    throw UnsupportedError("schedule_positive requires all lines to be positive");
  const std::int64_t period = net.dimension() * len;
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const TrainLine& line = net.line(i);
    const std::int64_t delay = mod_floor(len * line.axis + coordinate_sum(line), period);
    assert(delay <= period - 1);
    s.set(net.label(i), Rat(delay));
  }
  return s;
}

Schedule schedule_2d(const TrainNetwork& net) {
  const std::int64_t len = require_regular(net, "schedule_2d");
  if (net.dimension() != 2)
    throw UnsupportedError("schedule_2d requires a 2-dimensional network");
  const std::int64_t period = Modulus::for_train_length(len).value;
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const TrainLine& line = net.line(i);
    const std::int64_t x = line.departure[0];
    const std::int64_t y = line.departure[1];
    const std::int64_t a = line.axis;  // 0 = horizontal, 1 = vertical
    const std::int64_t raw = line.sign * (x + y
        + (1 - a) * (-2 * mod_floor(y, len) - len + 1)
        + a * (-2 * mod_floor(x, len) + 2 * len - 1));
    const std::int64_t delay = mod_floor(raw, period);
    assert(delay <= period - 1);
    s.set(net.label(i), Rat(delay));
  }
  return s;
}

Schedule schedule_3d_unit(const TrainNetwork& net) {
  const std::int64_t len = require_regular(net, "schedule_3d_unit");
  if (net.dimension() != 3)
    throw UnsupportedError("schedule_3d_unit requires a 3-dimensional network");
  if (len != 1)
    throw UnsupportedError("schedule_3d_unit requires train length 1");
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const TrainLine& line = net.line(i);
    const std::int64_t sum = coordinate_sum(line);
    const std::int64_t rem3 = mod_floor(line.sign * (sum + line.axis), 3);
    const std::int64_t rem2 = mod_floor(sum + (line.sign > 0 ? 1 : 0), 2);
    std::int64_t delay = -1;
    for (std::int64_t r = 0; r < 6; ++r) {
      if (r % 3 == rem3 && r % 2 == rem2) {
        delay = r;
        break;
      }
    }
    assert(delay >= 0);  // guaranteed unique by the Chinese remainder theorem
    s.set(net.label(i), Rat(delay));
  }
  return s;
}

Schedule floor_schedule(const TrainNetwork& net, const Schedule& s) {
  require_regular(net, "floor_schedule");
  if (!validate_schedule(net, s).empty())
    throw std::invalid_argument("floor_schedule requires a collision-free input schedule");
  Schedule floored;
  for (const auto& [label, delay] : s.delays())
    floored.set(label, Rat(floor_rat(delay)));
  return floored;
}

std::optional<std::int64_t> constructive_delay_bound(const TrainNetwork& net) {
  const std::int64_t len = require_regular(net, "constructive_delay_bound");
  if (all_positive(net)) return net.dimension() * len - 1;
  if (net.dimension() == 2) return Modulus::for_train_length(len).value - 1;
  if (len == 1) return 5;
  return std::nullopt;
}

AutoScheduleResult auto_schedule(const TrainNetwork& net) {
  const std::int64_t len = require_regular(net, "auto_schedule");
  if (all_positive(net)) {
    return {schedule_positive(net), SchedulerStrategy::PositiveLines,
            net.dimension() * len - 1};
  }
  if (net.dimension() == 2) {
    return {schedule_2d(net), SchedulerStrategy::TwoD,
            Modulus::for_train_length(len).value - 1};
  }
  if (len == 1) {
    return {schedule_3d_unit(net), SchedulerStrategy::ThreeDUnit, 5};
  }
  // 3d with train length >= 2: no constant bound is known.
  return {min_delay(net).schedule, SchedulerStrategy::ExactSearch, std::nullopt};
}

}  // namespace trains
