#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ahp/geometry.hpp"
#include "ahp/rational.hpp"

namespace ahp {

class ConstantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MuProvenance { user_supplied, estimated, default_heuristic };

std::string_view to_string(MuProvenance p);
MuProvenance parse_mu_provenance(std::string_view s);

struct AcylEntry {
  Rational R{0};
  std::int64_t N = 1;
};

/// One row of K(r): the intermediate quantities for a given r.
struct KStep {
  Rational eps;
  AcylEntry acyl;
  std::int64_t S = 0;
  std::int64_t K = 0;
};

/// δ, τ, μ and a finite acylindricity table, with every derived constant of
/// the periodicity theorem computed in exact arithmetic.
///
/// At construction κ₀ and ε₀ are rounded up to integers and μ is increased
/// so that 2δ + 2μ is an integer.  The table is looked up by exact ε only.
class ConstantsProfile {
 public:
  ConstantsProfile(Rational delta, Rational tau, Rational mu, MuProvenance provenance,
                   std::map<Rational, AcylEntry> acyl);

  /// μ = 2δ + 1.  A placeholder, not derived from any bound.
  static Rational default_mu(const Rational& delta) { return 2 * delta + 1; }

  const Rational& delta() const { return delta_; }
  const Rational& tau() const { return tau_; }
  /// μ after rounding.
  const Rational& mu() const { return mu_; }
  const Rational& mu_input() const { return mu_input_; }
  MuProvenance mu_provenance() const { return provenance_; }
  const std::map<Rational, AcylEntry>& acyl() const { return acyl_; }

  std::int64_t kappa0() const { return kappa0_; }
  std::int64_t eps0() const { return eps0_; }
  QuasiParams kappa_eps_zero() const { return {Rational(kappa0_), Rational(eps0_)}; }

  /// 2δ + 2μ (an integer after rounding).
  std::int64_t two_delta_two_mu() const { return ceil(2 * delta_ + 2 * mu_); }

  /// ε = 6r + 24μ + 8δ
  Rational eps_of_r(std::int64_t r) const;
  KStep K_step(std::int64_t r) const;
  std::int64_t K_of_r(std::int64_t r) const { return K_step(r).K; }
  /// F(r) = κ₀(K(2r) + ε₀ + 2r + 2) + 1
  std::int64_t F_of_r(std::int64_t r) const;
  /// C = F(2δ + 2μ) + (6μ + 4δ)/τ + 2
  Rational C() const;
  /// f(r) = 2r/τ + C
  Rational f(const Rational& r) const;
  /// ⌊(f(r) - F(2δ+2μ))/2⌋, checked against ⌊(r + 3μ + 2δ)/τ + 1⌋.
  std::int64_t k_trim(std::int64_t r) const;

 private:
  Rational delta_;
  Rational tau_;
  Rational mu_input_;
  Rational mu_;
  MuProvenance provenance_;
  std::map<Rational, AcylEntry> acyl_;
  std::int64_t kappa0_ = 0;
  std::int64_t eps0_ = 0;
};

}  // namespace ahp
