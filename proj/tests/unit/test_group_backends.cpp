#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "ahp/backend_factory.hpp"
#include "ahp/dehn.hpp"
#include "ahp/free_backend.hpp"
#include "ahp/free_product.hpp"
#include "ahp/random.hpp"

using namespace ahp;

namespace {

oracle::Syllable syllable_of(std::string_view name, const int orders[2]) {
  const int f = (name[0] == 'x' || name[0] == 'X') ? 0 : 1;
  if (name.size() > 2 && name[1] == '^') return {f, std::stoi(std::string(name.substr(2)))};
  return {f, (name[0] == 'x' || name[0] == 'y') ? 1 : orders[f] - 1};
}

oracle::Syllables syllables_of(const Group& g, const Word& w, const int orders[2]) {
  oracle::Syllables out;
  for (Letter l : w) out.push_back(syllable_of(g.alphabet().name(l), orders));
  return out;
}

std::string genus2() { return std::string(AHP_PRESENTATION_DIR) + "/genus2.txt"; }

void check_group_axioms(const Group& g, std::uint64_t seed, std::size_t max_len) {
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const auto u = g.normal_form(random_word(g.alphabet(), rng, rng.below(max_len + 1)));
    const auto v = g.normal_form(random_word(g.alphabet(), rng, rng.below(max_len + 1)));
    const auto w = g.normal_form(random_word(g.alphabet(), rng, rng.below(max_len + 1)));
    REQUIRE(g.equal(g.multiply(g.multiply(u, v), w), g.multiply(u, g.multiply(v, w))));
    REQUIRE(g.is_identity(g.multiply(u, g.inverse(u))));
    REQUIRE(g.equal(g.parse(g.format(u)), u));
  }
}

}  // namespace

TEST_SUITE("group_backends") {

TEST_CASE("free group lengths are reduced-word lengths") {
  FreeGroup g(3);
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(g.alphabet(), rng, rng.below(14));
    const std::string s = g.to_string(w);
    const auto e = g.normal_form(w);
    CHECK(g.to_string(e.word) == oracle::free_reduce(s));
    const auto len = g.length(e);
    CHECK(len.exact());
    CHECK(len.value == static_cast<std::int64_t>(oracle::free_reduce(s).size()));
  }
}

TEST_CASE("free group balls") {
  FreeGroup g(2);
  for (int r = 0; r <= 5; ++r) {
    const auto ball = g.ball(r);
    std::int64_t expect = 1;
    for (int k = 0; k < r; ++k) expect *= 3;
    CHECK(ball.size() == static_cast<std::size_t>(2 * expect - 1));
    for (std::size_t i = 1; i < ball.size(); ++i) {
      const auto& a = ball[i - 1];
      const auto& b = ball[i];
      CHECK((a.distance < b.distance || (a.distance == b.distance && shortlex_less(a.element.word, b.element.word))));
    }
  }
}

TEST_CASE("free product normal forms match syllable reduction") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 2}, {5, 3}}) {
    const int orders[2] = {m, n};
    FreeProductGroup g(m, n);
    oracle::FreeProduct fp{{m, n}};
    Rng rng(static_cast<std::uint64_t>(m * 10 + n));
    for (int i = 0; i < 2000; ++i) {
      const Word w = random_word(g.alphabet(), rng, rng.below(16));
      const auto e = g.normal_form(w);
      const auto expect = fp.reduce(syllables_of(g, w, orders));
      CHECK(syllables_of(g, e.word, orders) == expect);
      CHECK(g.length(e).value == static_cast<std::int64_t>(expect.size()));
    }
  }
}

TEST_CASE("free product balls agree with breadth-first enumeration") {
  const int orders[2] = {2, 3};
  FreeProductGroup g(2, 3);
  oracle::FreeProduct fp{{2, 3}};
  const auto ball = g.ball(6);
  CHECK(ball.size() == fp.ball(6).size());
  for (const auto& e : ball) CHECK(e.distance == static_cast<int>(fp.reduce(syllables_of(g, e.element.word, orders)).size()));
  for (int r : {1, 2, 4, 6}) CHECK(g.ball(r).size() == fp.ball(r).size());
  CHECK(g.ball(1).size() == 4);
  CHECK(g.ball(2).size() == 8);
}

TEST_CASE("aliases for involutions") {
  FreeProductGroup g(2, 3);
  CHECK(g.equal(g.parse("X"), g.parse("x")));
  CHECK(g.is_identity(g.parse("xx")));
  CHECK(g.is_identity(g.parse("yyy")));
  CHECK(g.format(g.parse("yy")) == "Y");
}

TEST_CASE("group axioms on random triples") {
  SUBCASE("free") { check_group_axioms(FreeGroup(2), 11, 10); }
  SUBCASE("free product") { check_group_axioms(FreeProductGroup(2, 3), 12, 10); }
  SUBCASE("dehn") {
    DehnGroup g(Presentation::load(genus2()), DehnOptions{}, "genus2");
    check_group_axioms(g, 13, 8);
  }
}

TEST_CASE("dehn presentation parsing and small cancellation") {
  const auto p = Presentation::parse("# surface\ngens: a,b,c,d\n\nrel: abABcdCD\n");
  CHECK(p.generators.size() == 4);
  CHECK(p.relators.size() == 1);
  CHECK(verify_small_cancellation(p, 6));
  const auto z2 = Presentation::parse("gens: a,b\nrel: abAB\n");
  CHECK_FALSE(verify_small_cancellation(z2, 6));
  CHECK_THROWS_AS(DehnGroup{z2}, std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse("gens: a\nrel: aA\n"), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse("gens: a\nrel: ab\n"), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse("relators: a\n"), std::invalid_argument);
  const auto proper_power = Presentation::parse("gens: a,b\nrel: abbabbabbabbabbabbabb\n");
  CHECK_FALSE(verify_small_cancellation(proper_power, 6));
}

TEST_CASE("dehn word problem agrees with a naive Dehn reduction") {
  const auto pres = Presentation::load(genus2());
  DehnGroup g(pres, DehnOptions{}, "genus2");
  const std::string rel = pres.relators.front();
  Rng rng(5);
  int trivial = 0;
  for (int i = 0; i < 1500; ++i) {
    std::string w = oracle::free_reduce(g.format(random_word(g.alphabet(), rng, rng.below(12))));
    if (i % 3 == 0) {
      // Insert a cyclic permutation of the relator or its inverse.
      const std::string base = rng.below(2) ? rel : oracle::free_inverse(rel);
      const std::size_t k = rng.below(base.size());
      const std::size_t at = rng.below(w.size() + 1);
      w = w.substr(0, at) + base.substr(k) + base.substr(0, k) + w.substr(at);
    }
    const bool expect = oracle::dehn_trivial(pres.relators, w);
    trivial += expect;
    CHECK(g.is_identity(g.parse(w)) == expect);
  }
  CHECK(trivial > 0);
}

TEST_CASE("dehn spheres agree with breadth-first search") {
  const auto pres = Presentation::load(genus2());
  DehnGroup g(pres, DehnOptions{}, "genus2");
  const auto sizes = oracle::bfs_sphere_sizes("aAbBcCdD", 3, [&](const std::string& u, const std::string& v) {
    return oracle::dehn_trivial(pres.relators, u + oracle::free_inverse(v));
  });
  CHECK(sizes == std::vector<std::size_t>{1, 8, 56, 392});
  std::vector<std::size_t> lib(5, 0);
  for (const auto& e : g.ball(4)) ++lib.at(static_cast<std::size_t>(e.distance));
  CHECK(std::vector<std::size_t>(lib.begin(), lib.begin() + 4) == sizes);
  CHECK(lib[4] == 2736);
  CHECK(g.explored_radius() == 4);
  for (const auto& e : g.ball(3)) {
    CHECK(g.length(e.element).exact());
    CHECK(g.length(e.element).value == e.distance);
    CHECK(g.geodesic(e.element));
  }
}

TEST_CASE("dehn certificates beyond the explored ball") {
  DehnOptions opt;
  opt.ball_radius = 2;
  DehnGroup g(Presentation::load(genus2()), opt, "genus2");
  const auto far = g.parse("abcdabcd");
  const auto len = g.length(far);
  CHECK(len.certificate == Certificate::lower_bound);
  CHECK(len.value == 3);
  CHECK_FALSE(g.geodesic(far));
  CHECK_THROWS_AS(g.ball(3), BudgetExceeded);
  try {
    g.ball(3);
  } catch (const BudgetExceeded& e) {
    CHECK(e.largest_completed_radius() == 2);
  }
  // Half of a relator is a geodesic of length 4 but Dehn-reduced; a longer
  // piece rewrites to the shorter complement.
  CHECK(g.equal(g.parse("abABc"), g.parse("dcD")));
}

TEST_CASE("dehn reduction of periodic words") {
  DehnGroup g(Presentation::load(genus2()), DehnOptions{}, "genus2");
  CHECK(g.periodic_word_is_dehn_reduced(g.parse("ab").word));
  CHECK_FALSE(g.periodic_word_is_dehn_reduced(g.alphabet().parse("abABc")));
}

TEST_CASE("backend factory") {
  CHECK(make_backend("free:2")->descriptor() == "free:2");
  CHECK(make_backend("zmzn:2,3")->kind() == BackendKind::free_product);
  CHECK(make_backend("dehn:" + genus2())->kind() == BackendKind::dehn);
  CHECK_THROWS_AS(make_backend("free:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_backend("zmzn:1,3"), std::invalid_argument);
  CHECK_THROWS_AS(make_backend("zmzn:2"), std::invalid_argument);
  CHECK_THROWS_AS(make_backend("torus"), std::invalid_argument);
  CHECK_THROWS_AS(make_backend("dehn:/nonexistent"), std::invalid_argument);
}

TEST_CASE("unknown letters are rejected") {
  FreeGroup g(2);
  CHECK_THROWS_AS(g.parse("abc"), AlphabetError);
  CHECK(g.is_identity(g.parse("1")));
  CHECK(g.is_identity(g.parse("")));
}

}
