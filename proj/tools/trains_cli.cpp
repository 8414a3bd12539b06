#include "trains_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "trains/errors.hpp"
#include "trains/exact.hpp"
#include "trains/io.hpp"
#include "trains/model.hpp"
#include "trains/schedulers.hpp"

namespace trains::cli {

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitNoInput = 66;

TrainNetwork read_network(const std::string& file, std::istream& in) {
  if (file.empty()) return parse_network(in);
  std::ifstream stream(file);
  if (!stream) throw std::ios_base::failure("cannot open '" + file + "'");
  return parse_network(stream);
}

// Delays file: one "<label> <delay>" per line; blank lines and '#' comments
// are ignored. Delays accept integer, fraction and decimal notation.
Schedule read_delays(const std::string& file) {
  std::ifstream stream(file);
  if (!stream) throw std::ios_base::failure("cannot open '" + file + "'");
  Schedule s;
  std::string text_line;
  int line_no = 0;
  while (std::getline(stream, text_line)) {
    ++line_no;
    std::istringstream fields(text_line);
    std::string label, delay_text, extra;
    if (!(fields >> label) || label[0] == '#') continue;
    if (!(fields >> delay_text) || (fields >> extra))
      throw ParseError(line_no, "expected '<label> <delay>'");
    try {
      Rat delay = parse_rational(delay_text);
      if (delay < Rat(0)) throw std::invalid_argument("negative delay");
      s.set(label, delay);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return s;
}

void print_schedule(std::ostream& out, const TrainNetwork& net, const Schedule& s) {
  for (std::size_t i = 0; i < net.size(); ++i)
    out << net.label(i) << ' ' << to_string(s.at(net.label(i))) << '\n';
}

int run_schedule(const TrainNetwork& net, const std::string& strategy, bool quiet,
                 std::ostream& out) {
  AutoScheduleResult result;
  if (strategy == "auto") {
    result = auto_schedule(net);
  } else if (strategy == "positive") {
    Schedule s = schedule_positive(net);  // rejects non-regular networks first
    result = {std::move(s), SchedulerStrategy::PositiveLines,
              net.dimension() * *common_train_length(net) - 1};
  } else if (strategy == "2d") {
    Schedule s = schedule_2d(net);
    result = {std::move(s), SchedulerStrategy::TwoD,
              Modulus::for_train_length(*common_train_length(net)).value - 1};
  } else {  // 3d-unit
    result = {schedule_3d_unit(net), SchedulerStrategy::ThreeDUnit, 5};
  }
  print_schedule(out, net, result.schedule);
  if (!quiet) {
    out << "strategy " << strategy_name(result.strategy) << '\n';
    if (result.delay_bound) out << "bound " << *result.delay_bound << '\n';
    else out << "bound none\n";
  }
  return 0;
}

int run_check(const TrainNetwork& net, const std::string& delays_file, bool quiet,
              std::ostream& out) {
  const Schedule s = read_delays(delays_file);
  for (const auto& [label, delay] : s.delays()) {
    if (!net.index_of(label))
      throw ParseError(0, "delays file names unknown line '" + label + "'");
  }
  const auto violations = validate_schedule(net, s);
  for (const Violation& v : violations) {
    out << "collision " << v.label_a << ' ' << v.label_b << " delays "
        << to_string(v.delay_a) << ' ' << to_string(v.delay_b) << " dist "
        << v.crossing.dist_a << ' ' << v.crossing.dist_b << '\n';
  }
  if (violations.empty()) {
    if (!quiet) out << "no collisions\n";
    return 0;
  }
  return 1;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Collision-free schedules for lattice train networks", "trains"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string file;
  bool quiet = false;
  app.add_option("--file", file, "read the network from this file instead of standard input");
  app.add_flag("--quiet", quiet, "suppress informational output");

  auto* cmd_validate = app.add_subcommand("validate", "check that the input is a valid network");

  auto* cmd_schedule = app.add_subcommand("schedule", "construct a schedule with a guaranteed bound");
  std::string strategy = "auto";
  cmd_schedule->add_option("--strategy", strategy, "scheduling strategy")
      ->check(CLI::IsMember({"positive", "2d", "3d-unit", "auto"}));

  auto* cmd_check = app.add_subcommand("check", "test a delay assignment for collisions");
  std::string delays_file;
  cmd_check->add_option("delays", delays_file, "file of '<label> <delay>' lines")->required();

  auto* cmd_min_delay = app.add_subcommand("min-delay", "exact minimum integer delay plus a witness");

  auto* cmd_feasible = app.add_subcommand("feasible", "find an integer schedule within a delay budget");
  std::int64_t feasible_budget = 0;
  cmd_feasible->add_option("D", feasible_budget, "delay budget")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* cmd_export = app.add_subcommand("export", "write the compatibility graph in Cliquer format");
  std::int64_t export_budget = 0;
  cmd_export->add_option("D", export_budget, "delay budget")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* cmd_grid = app.add_subcommand("grid", "emit a square grid network in the text format");
  std::int64_t grid_length = 1;
  cmd_grid->add_option("L", grid_length, "train length and grid size")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*cmd_grid) {
      out << format_network(generate_grid(grid_length));
      return 0;
    }

    if (*cmd_validate) {
      std::optional<TrainNetwork> net;
      try {
        net.emplace(read_network(file, in));
      } catch (const StructureError& e) {
        err << "invalid network: " << e.what() << '\n';
        return 1;
      }
      if (!quiet)
        out << "OK " << net->size() << " lines, dimension " << net->dimension() << '\n';
      return 0;
    }

    const TrainNetwork net = read_network(file, in);
    if (*cmd_schedule) return run_schedule(net, strategy, quiet, out);
    if (*cmd_check) return run_check(net, delays_file, quiet, out);
    if (*cmd_min_delay) {
      const MinDelayResult result = min_delay(net);
      out << result.min_delay << '\n';
      if (!quiet) print_schedule(out, net, result.schedule);
      return 0;
    }
    if (*cmd_feasible) {
      if (auto s = has_schedule_within(net, feasible_budget)) {
        print_schedule(out, net, *s);
        return 0;
      }
      out << "INFEASIBLE\n";
      return 1;
    }
    if (*cmd_export) {
      export_cliquer(out, net, export_budget);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;  // unreachable: require_subcommand(1)
}

}  // namespace trains::cli
