#include "json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ahp::cli {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return to_string(q);
}

ConstantsProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
  for (const char* key : {"delta", "tau"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("profile is missing \"") + key + "\"");
  Rational delta = rational_from_json(j.at("delta"));
  Rational tau = rational_from_json(j.at("tau"));
  Rational mu = ConstantsProfile::default_mu(delta);
  MuProvenance prov = MuProvenance::default_heuristic;
  if (j.contains("mu")) {
    const json& m = j.at("mu");
    if (m.is_object()) {
      mu = rational_from_json(m.at("value"));
      prov = m.contains("provenance") ? parse_mu_provenance(m.at("provenance").get<std::string>())
                                      : MuProvenance::user_supplied;
    } else {
      mu = rational_from_json(m);
      prov = MuProvenance::user_supplied;
    }
  }
  std::map<Rational, AcylEntry> acyl;
  if (j.contains("acyl")) {
    for (const json& e : j.at("acyl")) {
      AcylEntry entry{rational_from_json(e.at("R")), e.at("N").get<std::int64_t>()};
      acyl[rational_from_json(e.at("eps"))] = entry;
    }
  }
  return ConstantsProfile(delta, tau, mu, prov, std::move(acyl));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

ConstantsProfile load_profile(const std::filesystem::path& path) {
  return profile_from_json(read_json_file(path));
}

json profile_to_json(const ConstantsProfile& p) {
  json acyl = json::array();
  for (const auto& [eps, e] : p.acyl()) acyl.push_back({{"eps", rational_to_json(eps)}, {"R", rational_to_json(e.R)}, {"N", e.N}});
  return {
      {"delta", rational_to_json(p.delta())},
      {"tau", rational_to_json(p.tau())},
      {"mu", {{"value", rational_to_json(p.mu())},
              {"input", rational_to_json(p.mu_input())},
              {"provenance", std::string(to_string(p.mu_provenance()))}}},
      {"acyl", acyl},
  };
}

json report_to_json(const HarnessReport& r) {
  json j;
  j["check"] = r.check;
  j["hypothesis_status"] = std::string(to_string(r.hypothesis_status));
  j["failed_hypothesis"] = r.failed_hypothesis.empty() ? json(nullptr) : json(r.failed_hypothesis);
  j["witness_found"] = r.witness_found;
  json w = json::object();
  if (r.s) w["s"] = *r.s;
  if (r.t) w["t"] = *r.t;
  if (r.n) w["n"] = *r.n;
  j["witness"] = r.witness_found ? w : json(nullptr);
  j["certificate"] = r.certificate;
  json c = json::object();
  for (const auto& [k, v] : r.constants_used) c[k] = v;
  j["constants_used"] = c;
  json d = json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  j["details"] = d;
  j["notes"] = r.notes;
  return j;
}

}  // namespace ahp::cli
