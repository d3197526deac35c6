#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ahp {

/// Exact rational used for every derived ratio (stable norms, δ, constants).
using Rational = boost::rational<std::int64_t>;

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "7", "-3/4" and finite decimals such as "0.125".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace ahp
