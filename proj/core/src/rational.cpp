#include "trains/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trains {

std::int64_t floor_rat(const Rat& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always > 0 after normalization
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

bool is_integer(const Rat& r) { return r.denominator() == 1; }

std::string to_string(const Rat& r) {
  if (is_integer(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t value = std::stoll(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters in number: '" + text + "'");
  return value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      const std::int64_t num = parse_int(text.substr(0, slash));
      const std::int64_t den = parse_int(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
      return Rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.empty()) return Rat(parse_int(whole));
      for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad decimal '" + text + "'");
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::int64_t whole_part = whole.empty() || whole == "-" || whole == "+"
                                          ? 0
                                          : parse_int(whole);
      const bool negative = !whole.empty() && whole[0] == '-';
      const std::int64_t frac_part = parse_int(frac);
      Rat magnitude = Rat(whole_part < 0 ? -whole_part : whole_part) + Rat(frac_part, scale);
      return negative ? -magnitude : magnitude;
    }
    return Rat(parse_int(text));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range: '" + text + "'");
  }
}

std::int64_t mod_floor(std::int64_t x, std::int64_t k) {
  std::int64_t r = x % k;
  if (r < 0) r += k;
  return r;
}

}  // namespace trains
