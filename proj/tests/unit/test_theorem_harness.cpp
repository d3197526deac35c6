#include "doctest.h"
#include "oracles.hpp"

#include "ahp/free_backend.hpp"
#include "ahp/free_product.hpp"
#include "ahp/harness.hpp"

using namespace ahp;

namespace {

ConstantsProfile zmzn_profile() {
  return ConstantsProfile(Rational(1, 2), Rational(2), Rational(0), MuProvenance::user_supplied,
                          {{Rational(16), {Rational(16), 17}}});
}

ConstantsProfile free_profile() {
  return ConstantsProfile(Rational(0), Rational(1), Rational(1), MuProvenance::user_supplied,
                          {{Rational(24), {Rational(10), 5}}, {Rational(30), {Rational(10), 5}}, {Rational(36), {Rational(10), 5}}});
}

TheoremInstance instance(const Group& g, const char* a, const char* b, const char* x, const char* y, std::int64_t r) {
  TheoremInstance inst;
  inst.a = g.parse(a);
  inst.b = g.parse(b);
  inst.x = g.parse(x);
  inst.y = g.parse(y);
  inst.r = r;
  return inst;
}

/// (x⁻¹y) b^s (y⁻¹x) == a^t, by free reduction of the raw words.
bool free_witness_holds(const char* a, const char* b, const char* x, const char* y, std::int64_t s, std::int64_t t) {
  using namespace oracle;
  auto word = [](const char* w) { return std::string(w) == "1" ? std::string() : std::string(w); };
  const std::string h = free_mul(free_inverse(word(x)), word(y));
  return free_reduce(h + free_power(b, s) + free_inverse(h)) == free_power(a, t);
}

}  // namespace

TEST_SUITE("theorem_harness") {

TEST_CASE("sharp free check finds a witness") {
  FreeGroup g(2);
  MainOptions mo;
  mo.sharp_free = true;
  const auto rep = main_theorem_check(g, instance(g, "abb", "bba", "1", "a", 0), nullptr, mo);
  CHECK(rep.hypothesis_status == HypothesisStatus::satisfied);
  REQUIRE(rep.witness_found);
  CHECK(free_witness_holds("abb", "bba", "1", "a", *rep.s, *rep.t));
}

TEST_CASE("sharp free check reports failed containment") {
  FreeGroup g(2);
  MainOptions mo;
  mo.sharp_free = true;
  const auto rep = main_theorem_check(g, instance(g, "ab", "abb", "1", "1", 0), nullptr, mo);
  CHECK(rep.hypothesis_failed());
  CHECK_FALSE(rep.witness_found);
  CHECK_FALSE(rep.failed_hypothesis.empty());
}

TEST_CASE("sharp mode is for free groups at r = 0") {
  FreeProductGroup z(2, 3);
  MainOptions mo;
  mo.sharp_free = true;
  CHECK_THROWS_AS(main_theorem_check(z, instance(z, "xy", "xy", "1", "1", 0), nullptr, mo), std::invalid_argument);
}

TEST_CASE("main check on Z/2 * Z/3 with a profile") {
  FreeProductGroup z(2, 3);
  const auto profile = zmzn_profile();
  const auto rep = main_theorem_check(z, instance(z, "xyxy", "yx", "1", "x", 1), &profile);
  CHECK(rep.hypothesis_status == HypothesisStatus::satisfied);
  REQUIRE(rep.witness_found);
  const auto h = z.multiply(z.inverse(z.parse("1")), z.parse("x"));
  CHECK(z.equal(z.conjugate(z.power(z.parse("yx"), *rep.s), z.inverse(h)), z.power(z.parse("xyxy"), *rep.t)));
  bool saw_C = false;
  for (const auto& [k, v] : rep.constants_used)
    if (k == "C") saw_C = v == "454";
  CHECK(saw_C);
}

TEST_CASE("weak check without a profile needs a period count") {
  FreeGroup g(2);
  CHECK_THROWS_AS(weak_theorem_check(g, instance(g, "ab", "ab", "1", "1", 0), nullptr), std::invalid_argument);
  WeakOptions wo;
  wo.periods = 3;
  const auto rep = weak_theorem_check(g, instance(g, "ab", "ab", "1", "1", 0), nullptr, wo);
  CHECK(rep.hypothesis_status == HypothesisStatus::conditional);
  CHECK(rep.witness_found);
}

TEST_CASE("missing acylindricity entries fail the hypothesis") {
  FreeProductGroup z(2, 3);
  const ConstantsProfile thin(Rational(1, 2), Rational(2), Rational(0), MuProvenance::user_supplied, {});
  const auto rep = main_theorem_check(z, instance(z, "xy", "xy", "1", "1", 0), &thin);
  CHECK(rep.hypothesis_failed());
  CHECK(rep.failed_hypothesis.find("acylindricity") != std::string::npos);
}

TEST_CASE("lemma41 on parallel lines") {
  FreeGroup g(2);
  const auto profile = free_profile();
  const std::int64_t K = profile.K_of_r(2);
  // x_Q = x_P · root(b): the lines coincide.
  auto rep = lemma41_check(g, g.parse("abab"), g.parse("b"), g.parse("bab"), K, 2, &profile);
  CHECK(rep.hypothesis_status == HypothesisStatus::satisfied);
  REQUIRE(rep.witness_found);
  REQUIRE(rep.n);
  CHECK(*rep.n <= 4);
  // A⁻¹B commutes with b^n.
  const std::string c = oracle::free_mul(oracle::free_inverse("bab"), "b");
  CHECK(oracle::free_mul(c, oracle::free_power("abab", *rep.n)) == oracle::free_mul(oracle::free_power("abab", *rep.n), c));
  // Far apart lines fail the hypothesis.
  rep = lemma41_check(g, g.parse("ab"), g.identity(), g.parse("bbb"), K, 2, &profile);
  CHECK(rep.hypothesis_failed());
  // A short window fails against K(r).
  rep = lemma41_check(g, g.parse("ab"), g.identity(), g.parse("ab"), 3, 2, &profile);
  CHECK(rep.hypothesis_failed());
  // Without a profile the verdict is conditional.
  rep = lemma41_check(g, g.parse("ab"), g.identity(), g.parse("ab"), 3, 2, nullptr);
  CHECK(rep.hypothesis_status == HypothesisStatus::conditional);
  CHECK(rep.witness_found);
}

TEST_CASE("commensurability search") {
  FreeGroup g(2);
  const auto yes = commensurability_search(g, g.parse("abab"), g.parse("BA"), 8, 3);
  REQUIRE(yes.witness);
  CHECK(yes.certificate == Certificate::exact);
  CHECK(oracle::free_reduce(oracle::free_inverse(g.format(yes.witness->g)) + oracle::free_power("BA", yes.witness->t) +
                            g.format(yes.witness->g)) == oracle::free_power("abab", yes.witness->s));
  const auto no = commensurability_search(g, g.parse("ab"), g.parse("abb"), 8, 3);
  CHECK_FALSE(no.witness);
  CHECK(no.label == "exact: non-commensurable");
  FreeProductGroup z(2, 3);
  const auto zs = commensurability_search(z, z.parse("xyxy"), z.parse("YxYx"), 8, 3);
  REQUIRE(zs.witness);
  CHECK(zs.certificate == Certificate::bounded);
  CHECK(z.equal(z.conjugate(z.power(z.parse("YxYx"), zs.witness->t), zs.witness->g), z.power(z.parse("xyxy"), zs.witness->s)));
  CHECK_THROWS_AS(commensurability_search(g, g.identity(), g.parse("a"), 8, 3), std::invalid_argument);
}

TEST_CASE("empirical period threshold") {
  FreeGroup g(2);
  const auto hit = empirical_period_threshold(g, instance(g, "ab", "ab", "1", "1", 0), 8);
  CHECK(hit.periods == std::optional<std::int64_t>(1));
  const auto miss = empirical_period_threshold(g, instance(g, "ab", "abb", "1", "1", 0), 8);
  CHECK_FALSE(miss.periods);
  CHECK(miss.max_periods == 8);
}

}
