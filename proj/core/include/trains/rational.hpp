#ifndef TRAINS_RATIONAL_HPP
#define TRAINS_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace trains {

// Exact rational arithmetic for delays, speeds and interval endpoints.
// No floating point is used anywhere in the collision logic.
using Rat = boost::rational<std::int64_t>;

// Largest integer <= r.
std::int64_t floor_rat(const Rat& r);

bool is_integer(const Rat& r);

// Integers render bare ("3", "-2"), other values as "num/den" ("7/2").
std::string to_string(const Rat& r);

// Accepts "5", "-3", "7/2" and decimal notation "2.75".
// Throws std::invalid_argument on anything else.
Rat parse_rational(const std::string& text);

// Floor modulus: result is always in [0, k). Requires k > 0.
std::int64_t mod_floor(std::int64_t x, std::int64_t k);

}  // namespace trains

#endif
