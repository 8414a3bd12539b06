#ifndef TRAINS_IO_HPP
#define TRAINS_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trains/model.hpp"

namespace trains {

// Parses the network text format, one line per train line:
//
//   <label> <train_len> <axis><direction> <x> <y> <z>
//   <train_len> <axis><direction> <x> <y> <z>
//
// The unlabeled variant is auto-labeled L0, L1, ... by position. Blank lines
// and lines starting with '#' are ignored. Tracks are semi-infinite rays.
// The dimension is 2 when every z coordinate is 0 and no line runs along the
// z axis, and 3 otherwise. Throws ParseError for malformed text and
// StructureError (with a line number in the message) for duplicate labels or
// overlapping tracks.
TrainNetwork parse_network(std::istream& in);
TrainNetwork parse_network(const std::string& text);

// Renders a network in the labeled text format (always three coordinates).
std::string format_network(const TrainNetwork& net);

// Writes the compatibility graph for delays {0,...,max_delay} in the
// Cliquer-compatible text format:
//
//   p graph <V> 0
//   e <v1> <v2>
//
// with V = n*(max_delay+1) vertices numbered 1-based; vertex
// (max_delay+1)*line + delay + 1 stands for assigning `delay` to `line`.
// Edge lines are emitted for each line pair in input order and each delay
// pair in row-major order, LF-terminated. Requires a regular network.
std::string export_cliquer(const TrainNetwork& net, std::int64_t max_delay);
void export_cliquer(std::ostream& out, const TrainNetwork& net, std::int64_t max_delay);

// Decodes a clique listed as whitespace- or comma-separated 1-based vertex
// numbers back into per-line delays: line (v-1) div (max_delay+1), delay
// (v-1) mod (max_delay+1). Throws ParseError for malformed tokens or
// out-of-range vertices, StructureError for duplicate or missing lines.
std::vector<std::int64_t> decode_clique_delays(const std::string& text,
                                               std::size_t n_lines,
                                               std::int64_t max_delay);

// Same, but attaches the network's labels to produce a Schedule.
Schedule decode_clique_output(const std::string& text, const TrainNetwork& net,
                              std::int64_t max_delay);

}  // namespace trains

#endif
