#include "trains/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "trains/errors.hpp"

namespace trains {

namespace {

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> fields;
  std::istringstream stream(text);
  std::string field;
  while (stream >> field) fields.push_back(std::move(field));
  return fields;
}

std::int64_t parse_int_field(const std::string& token, int line_no, const char* what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token[0] == '+') ++first;  // from_chars rejects a leading '+'
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_no, std::string("malformed ") + what + " '" + token + "'");
  return value;
}

struct RawLine {
  std::string label;  // empty = auto-label later
  TrainLine line;
  int line_no = 0;
};

RawLine parse_raw_line(const std::vector<std::string>& fields, int line_no) {
  RawLine raw;
  raw.line_no = line_no;
  std::size_t field = 0;
  if (fields.size() == 6) {
    raw.label = fields[field++];
  } else if (fields.size() != 5) {
    throw ParseError(line_no, "expected 5 or 6 fields, got " + std::to_string(fields.size()));
  }

  raw.line.train_length = parse_int_field(fields[field], line_no, "train length");
  if (raw.line.train_length < 1)
    throw ParseError(line_no, "train length must be a positive integer, got '" + fields[field] + "'");
  ++field;

  const std::string& axis_dir = fields[field];
  if (axis_dir.size() != 2)
    throw ParseError(line_no, "malformed axis/direction token '" + axis_dir + "'");
  switch (axis_dir[0]) {
    case 'x': raw.line.axis = 0; break;
    case 'y': raw.line.axis = 1; break;
    case 'z': raw.line.axis = 2; break;
    default:
      throw ParseError(line_no, std::string("unknown axis '") + axis_dir[0] + "'");
  }
  switch (axis_dir[1]) {
    case '+': raw.line.sign = +1; break;
    case '-': raw.line.sign = -1; break;
    default:
      throw ParseError(line_no, std::string("unknown direction '") + axis_dir[1] + "'");
  }
  ++field;

  for (std::size_t i = 0; i < 3; ++i, ++field)
    raw.line.departure[i] = parse_int_field(fields[field], line_no, "coordinate");
  return raw;
}

}  // namespace

TrainNetwork parse_network(std::istream& in) {
  std::vector<RawLine> raws;
  std::string text_line;
  int line_no = 0;
  while (std::getline(in, text_line)) {
    ++line_no;
    const auto fields = split_fields(text_line);
    if (fields.empty() || fields[0][0] == '#') continue;
    raws.push_back(parse_raw_line(fields, line_no));
  }

  std::vector<std::pair<std::string, TrainLine>> labeled;
  labeled.reserve(raws.size());
  for (std::size_t i = 0; i < raws.size(); ++i) {
    std::string label = raws[i].label.empty() ? "L" + std::to_string(i) : raws[i].label;
    for (std::size_t j = 0; j < i; ++j) {
      if (labeled[j].first == label)
        throw StructureError("line " + std::to_string(raws[i].line_no) +
                             ": duplicate label '" + label + "'");
    }
    labeled.emplace_back(std::move(label), raws[i].line);
  }

  for (std::size_t i = 0; i < labeled.size(); ++i) {
    for (std::size_t j = i + 1; j < labeled.size(); ++j) {
      if (tracks_overlap(labeled[i].second, labeled[j].second))
        throw StructureError("line " + std::to_string(raws[j].line_no) +
                             ": overlapping tracks '" + labeled[i].first + "' and '" +
                             labeled[j].first + "'");
    }
  }

  int dimension = 2;
  for (const auto& [label, line] : labeled) {
    if (line.axis == 2 || line.departure[2] != 0) {
      dimension = 3;
      break;
    }
  }
  return TrainNetwork(dimension, std::move(labeled));
}

TrainNetwork parse_network(const std::string& text) {
  std::istringstream stream(text);
  return parse_network(stream);
}

std::string format_network(const TrainNetwork& net) {
  static constexpr char kAxisNames[] = {'x', 'y', 'z'};
  std::ostringstream out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const TrainLine& line = net.line(i);
    if (line.arrival || line.speed != Rat(1))
      throw std::invalid_argument("only unit-speed ray networks fit the text format");
    out << net.label(i) << ' ' << line.train_length << ' '
        << kAxisNames[line.axis] << (line.sign > 0 ? '+' : '-') << ' '
        << line.departure[0] << ' ' << line.departure[1] << ' ' << line.departure[2]
        << '\n';
  }
  return out.str();
}

void export_cliquer(std::ostream& out, const TrainNetwork& net, std::int64_t max_delay) {
  if (!is_regular(net))
    throw UnsupportedError("export_cliquer requires a regular network");
  if (max_delay < 0) throw std::invalid_argument("delay budget must be non-negative");
  const std::int64_t stride = max_delay + 1;
  out << "p graph " << static_cast<std::int64_t>(net.size()) * stride << " 0\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      const auto cross = crossing_of(net.line(i), net.line(j));
      for (std::int64_t t0 = 0; t0 < stride; ++t0) {
        for (std::int64_t t1 = 0; t1 < stride; ++t1) {
          if (cross && collides(net.line(i), net.line(j), *cross, Rat(t0), Rat(t1)))
            continue;
          out << "e " << stride * static_cast<std::int64_t>(i) + t0 + 1 << ' '
              << stride * static_cast<std::int64_t>(j) + t1 + 1 << '\n';
        }
      }
    }
  }
}

std::string export_cliquer(const TrainNetwork& net, std::int64_t max_delay) {
  std::ostringstream out;
  export_cliquer(out, net, max_delay);
  return out.str();
}

std::vector<std::int64_t> decode_clique_delays(const std::string& text,
                                               std::size_t n_lines,
                                               std::int64_t max_delay) {
  if (max_delay < 0) throw std::invalid_argument("delay budget must be non-negative");
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';

  const std::int64_t stride = max_delay + 1;
  const std::int64_t vertex_count = static_cast<std::int64_t>(n_lines) * stride;
  std::vector<std::int64_t> delays(n_lines, -1);
  std::vector<std::int64_t> vertex_for_line(n_lines, 0);
  for (const std::string& token : split_fields(normalized)) {
    const std::int64_t v = parse_int_field(token, 0, "vertex number");
    if (v < 1 || v > vertex_count)
      throw ParseError(0, "vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(vertex_count));
    const auto line = static_cast<std::size_t>((v - 1) / stride);
    const std::int64_t delay = (v - 1) % stride;
    if (delays[line] >= 0)
      throw StructureError("vertices " + std::to_string(vertex_for_line[line]) + " and " +
                           std::to_string(v) + " both decode to line " + std::to_string(line));
    delays[line] = delay;
    vertex_for_line[line] = v;
  }
  for (std::size_t line = 0; line < n_lines; ++line) {
    if (delays[line] < 0)
      throw StructureError("incomplete clique: no vertex for line " + std::to_string(line));
  }
  return delays;
}

Schedule decode_clique_output(const std::string& text, const TrainNetwork& net,
                              std::int64_t max_delay) {
  const auto delays = decode_clique_delays(text, net.size(), max_delay);
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) s.set(net.label(i), Rat(delays[i]));
  return s;
}

}  // namespace trains
