#include "ahp/constants.hpp"

#include <algorithm>

namespace ahp {

std::string_view to_string(MuProvenance p) {
  switch (p) {
    case MuProvenance::user_supplied:
      return "user_supplied";
    case MuProvenance::estimated:
      return "estimated";
    case MuProvenance::default_heuristic:
      return "default_heuristic";
  }
  return "unknown";
}

MuProvenance parse_mu_provenance(std::string_view s) {
  if (s == "user_supplied" || s == "user-supplied") {
    return MuProvenance::user_supplied;
  }
  if (s == "estimated") {
    return MuProvenance::estimated;
  }
  if (s == "default_heuristic" || s == "default-heuristic") {
    return MuProvenance::default_heuristic;
  }
  throw std::invalid_argument("unknown mu provenance '" + std::string(s) + "'");
}

ConstantsProfile::ConstantsProfile(Rational delta, Rational tau, Rational mu, MuProvenance provenance,
                                   std::map<Rational, AcylEntry> acyl)
    : delta_(delta), tau_(tau), mu_input_(mu), provenance_(provenance), acyl_(std::move(acyl)) {
  if (delta_ < 0) {
    throw ConstantsError("profile: delta must be >= 0");
  }
  if (tau_ <= 0) {
    throw ConstantsError("profile: tau must be > 0");
  }
  if (mu_input_ < 0) {
    throw ConstantsError("profile: mu must be >= 0");
  }
  for (const auto& [eps, entry] : acyl_) {
    if (eps < 0 || entry.R < 0 || entry.N < 1) {
      throw ConstantsError("profile: acylindricity entries need eps >= 0, R >= 0, N >= 1");
    }
  }
  mu_ = (Rational(ceil(2 * delta_ + 2 * mu_input_)) - 2 * delta_) / 2;
  const Rational sigma = (8 * delta_ + 1) / tau_;
  kappa0_ = ceil(std::max(Rational(3), sigma));
  eps0_ = ceil(4 * (8 * delta_ + 1));
}

Rational ConstantsProfile::eps_of_r(std::int64_t r) const {
  if (r < 0) {
    throw std::invalid_argument("constants: r must be >= 0");
  }
  return 6 * Rational(r) + 24 * mu_ + 8 * delta_;
}

KStep ConstantsProfile::K_step(std::int64_t r) const {
  KStep out;
  out.eps = eps_of_r(r);
  const auto it = acyl_.find(out.eps);
  if (it == acyl_.end()) {
    throw ConstantsError("acylindricity constants unavailable at eps = " + to_string(out.eps));
  }
  out.acyl = it->second;
  out.S = ceil(kappa0_ * (out.acyl.R + eps0_));
  out.K = out.S + out.acyl.N + 1;
  return out;
}

std::int64_t ConstantsProfile::F_of_r(std::int64_t r) const {
  return kappa0_ * (K_of_r(2 * r) + eps0_ + 2 * r + 2) + 1;
}

Rational ConstantsProfile::C() const {
  return Rational(F_of_r(two_delta_two_mu())) + (6 * mu_ + 4 * delta_) / tau_ + 2;
}

Rational ConstantsProfile::f(const Rational& r) const { return 2 * r / tau_ + C(); }

std::int64_t ConstantsProfile::k_trim(std::int64_t r) const {
  if (r < 0) {
    throw std::invalid_argument("constants: r must be >= 0");
  }
  const std::int64_t via_f = floor((f(Rational(r)) - F_of_r(two_delta_two_mu())) / 2);
  const std::int64_t closed = floor((Rational(r) + 3 * mu_ + 2 * delta_) / tau_ + 1);
  if (via_f != closed) {
    throw ConstantsError("inconsistent profile: trimming index " + std::to_string(via_f) + " vs " +
                         std::to_string(closed));
  }
  return closed;
}

}  // namespace ahp
