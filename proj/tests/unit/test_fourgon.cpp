#include "doctest.h"

#include "ahp/dehn.hpp"
#include "ahp/fourgon.hpp"
#include "ahp/free_backend.hpp"
#include "ahp/free_product.hpp"

using namespace ahp;

namespace {

void check_composition(const Group& g, std::uint64_t seed, int count, std::size_t max_side) {
  Rng rng(seed);
  int composed = 0;
  for (int i = 0; i < count; ++i) {
    ComposablePair pq;
    try {
      pq = random_composable_pair(g, rng, max_side, 3);
    } catch (const GeometryError&) {
      continue;
    }
    const FourGon S = compose(g, pq.P, pq.Q);
    CHECK_NOTHROW(validate(g, S));
    const auto p = side_elements(g, pq.P);
    const auto q = side_elements(g, pq.Q);
    const auto s = side_elements(g, S);
    CHECK(g.equal(s.left, g.multiply(p.left, g.inverse(q.left))));
    CHECK(g.equal(s.right, g.multiply(p.right, g.inverse(q.right))));
    CHECK(g.equal(s.bottom, p.bottom));
    CHECK(g.equal(s.top, q.bottom));
    // Closure: L T R⁻¹ ... read around the loop is trivial.
    const auto loop = g.multiply(g.multiply(s.left, s.top), g.multiply(g.inverse(s.right), g.inverse(s.bottom)));
    CHECK(g.is_identity(loop));
    const auto h = translation_element(g, pq.P, pq.Q);
    CHECK(g.equal(g.multiply(h, pq.Q.sides[1].start()), pq.P.sides[1].start()));
    CHECK(S.sides[0].length() == pq.P.sides[0].length() + pq.Q.sides[0].length());
    ++composed;
  }
  CHECK(composed > count / 4);
}

}  // namespace

TEST_SUITE("fourgon") {

TEST_CASE("construction") {
  FreeGroup g(2);
  const auto P = make_fourgon(g, g.identity(), {g.parse("a").word, g.parse("b").word, g.parse("BA").word, Word{}});
  CHECK_NOTHROW(validate(g, P));
  const auto e = side_elements(g, P);
  CHECK(g.equal(e.left, g.parse("a")));
  CHECK(g.equal(e.top, g.parse("b")));
  CHECK(g.equal(e.right, g.parse("ab")));
  CHECK(g.is_identity(e.bottom));
  const auto D = make_fourgon(g, g.identity(), {Word{}, Word{}, Word{}, Word{}});
  const auto d = side_elements(g, D);
  CHECK((g.is_identity(d.left) && g.is_identity(d.top) && g.is_identity(d.right) && g.is_identity(d.bottom)));
  const auto E = side_elements(g, make_fourgon(g, g.identity(), {g.parse("ab").word, Word{}, g.parse("BA").word, Word{}}));
  CHECK(g.equal(E.left, g.parse("ab")));
  CHECK(g.equal(E.right, g.parse("ab")));
  CHECK_THROWS_AS(make_fourgon(g, g.identity(), {g.parse("a").word, g.parse("b").word, g.parse("a").word, g.parse("B").word}),
                  FourGonError);
}

TEST_CASE("translation needs label-equal tops") {
  FreeGroup g(2);
  const auto P = make_fourgon(g, g.identity(), {g.parse("a").word, g.parse("b").word, g.parse("BA").word, Word{}});
  const auto Q = make_fourgon(g, g.parse("b"), {g.parse("").word, g.parse("a").word, g.parse("").word, g.parse("A").word});
  CHECK_THROWS_AS(translation_element(g, P, Q), FourGonError);
  CHECK_THROWS_AS(compose(g, P, Q), FourGonError);
}

TEST_CASE("composition identities") {
  SUBCASE("free") { check_composition(FreeGroup(2), 1, 300, 4); }
  SUBCASE("free product") { check_composition(FreeProductGroup(2, 3), 2, 300, 4); }
  SUBCASE("dehn") {
    DehnGroup g(Presentation::load(std::string(AHP_PRESENTATION_DIR) + "/genus2.txt"));
    check_composition(g, 3, 200, 1);
  }
}

}
