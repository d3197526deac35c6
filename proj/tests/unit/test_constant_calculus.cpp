#include <fstream>

#include "doctest.h"

#include "ahp/constants.hpp"

using namespace ahp;

namespace {

ConstantsProfile fixture() {
  return ConstantsProfile(Rational(0), Rational(2), Rational(1), MuProvenance::user_supplied,
                          {{Rational(24), {Rational(10), 5}}, {Rational(48), {Rational(10), 5}}});
}

}  // namespace

TEST_SUITE("constant_calculus") {

TEST_CASE("fixture regression") {
  const auto p = fixture();
  CHECK(p.kappa0() == 3);
  CHECK(p.eps0() == 4);
  CHECK(p.eps_of_r(0) == Rational(24));
  CHECK(p.eps_of_r(4) == Rational(48));
  const auto k0 = p.K_step(0);
  CHECK(k0.S == 42);
  CHECK(k0.K == 48);
  CHECK(p.F_of_r(0) == 163);
  CHECK(p.F_of_r(2) == 175);
  CHECK(p.C() == Rational(180));
  for (int r = 0; r <= 6; ++r) CHECK(p.f(Rational(r)) == Rational(r + 180));
  CHECK(p.k_trim(0) == 2);
  CHECK(p.two_delta_two_mu() == 2);
}

TEST_CASE("hand-computed Z/2 * Z/3 profile") {
  // δ = 1/2, τ = 2, μ = 0, acyl(16) = (16, 17):
  // κ₀ = 3, ε₀ = 20, K(2) = 3(16 + 20) + 17 + 1 = 126,
  // F(1) = 3(126 + 20 + 2 + 2) + 1 = 451, C = 451 + 1 + 2.
  const ConstantsProfile p(Rational(1, 2), Rational(2), Rational(0), MuProvenance::user_supplied,
                           {{Rational(16), {Rational(16), 17}}});
  CHECK(p.kappa0() == 3);
  CHECK(p.eps0() == 20);
  CHECK(p.eps_of_r(2) == Rational(16));
  CHECK(p.K_of_r(2) == 126);
  CHECK(p.F_of_r(1) == 451);
  CHECK(p.C() == Rational(454));
  CHECK(p.f(Rational(3)) == Rational(457));
  CHECK(p.k_trim(0) == 1);
  CHECK(p.two_delta_two_mu() == 1);
}

TEST_CASE("mu is rounded so that 2δ + 2μ is an integer") {
  const ConstantsProfile p(Rational(1, 4), Rational(1), Rational(0), MuProvenance::estimated, {});
  CHECK(p.mu_input() == Rational(0));
  CHECK(p.mu() == Rational(1, 4));
  CHECK(p.two_delta_two_mu() == 1);
  CHECK(p.mu_provenance() == MuProvenance::estimated);
  CHECK(ConstantsProfile::default_mu(Rational(1, 2)) == Rational(2));
}

TEST_CASE("missing acylindricity entries are reported") {
  const auto p = fixture();
  CHECK_THROWS_AS(p.K_of_r(1), ConstantsError);
  CHECK_THROWS_AS(p.F_of_r(1), ConstantsError);
  try {
    p.K_of_r(1);
  } catch (const ConstantsError& e) {
    CHECK(std::string(e.what()).find("eps = 30") != std::string::npos);
  }
}

TEST_CASE("invalid profiles") {
  CHECK_THROWS(ConstantsProfile(Rational(-1), Rational(1), Rational(0), MuProvenance::user_supplied, {}));
  CHECK_THROWS(ConstantsProfile(Rational(0), Rational(0), Rational(0), MuProvenance::user_supplied, {}));
  CHECK_THROWS(parse_mu_provenance("guessed"));
  CHECK(parse_mu_provenance("default_heuristic") == MuProvenance::default_heuristic);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_string(Rational(10, 8)) == "5/4");
  CHECK(ahp::floor(Rational(-1, 2)) == -1);
  CHECK(ahp::ceil(Rational(-1, 2)) == 0);
}

}
