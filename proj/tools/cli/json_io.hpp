#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ahp/constants.hpp"
#include "ahp/harness.hpp"
#include "ahp/rational.hpp"

namespace ahp::cli {

using json = nlohmann::ordered_json;

/// Integers, decimals and "p/q" strings.
Rational rational_from_json(const json& j);
/// Integral rationals as numbers, others as "p/q".
json rational_to_json(const Rational& q);

/// {"delta", "tau", "mu": number | {"value", "provenance"}, "acyl": [{"eps", "R", "N"}]}
/// A bare number for mu means user_supplied; a missing mu means the default
/// heuristic 2δ + 1.
ConstantsProfile profile_from_json(const json& j);
ConstantsProfile load_profile(const std::filesystem::path& path);
json profile_to_json(const ConstantsProfile& p);

json report_to_json(const HarnessReport& r);

json read_json_file(const std::filesystem::path& path);

}  // namespace ahp::cli
