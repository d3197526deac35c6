#include "ahp/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace ahp {

std::int64_t floor(const Rational& q) {
  std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();  // always positive
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) {
    --f;
  }
  return f;
}

std::int64_t ceil(const Rational& q) { return -floor(-q); }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) {
    return std::to_string(q.numerator());
  }
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  if (s.empty()) {
    throw std::invalid_argument("empty integer");
  }
  const auto* first = s.data();
  if (*first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: " + std::string(s));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      const auto den = parse_int(text.substr(slash + 1));
      if (den == 0) {
        throw std::invalid_argument("zero denominator");
      }
      return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto whole = text.substr(0, dot);
      auto frac = text.substr(dot + 1);
      const bool negative = !whole.empty() && whole.front() == '-';
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) {
        scale *= 10;
      }
      const std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
      const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
      Rational q(w);
      q += Rational(negative ? -f : f, scale);
      return q;
    }
    return Rational(parse_int(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
}

}  // namespace ahp
