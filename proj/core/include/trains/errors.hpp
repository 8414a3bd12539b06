#ifndef TRAINS_ERRORS_HPP
#define TRAINS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trains {

// Malformed textual input (bad token, unknown axis letter, ...).
// line() is the 1-based input line, or 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Well-formed input that does not describe a valid network or schedule:
// duplicate labels, overlapping tracks, missing delays.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested scheduling strategy cannot handle this network.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trains

#endif
