#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

#include "ahp/word_periodicity.hpp"

using namespace ahp::words;

TEST_SUITE("word_periodicity") {

TEST_CASE("border array and periods agree with brute force on all short words") {
  for (std::size_t n = 0; n <= 9; ++n) {
    for (const auto& z : oracle::all_words("abc", n)) {
      REQUIRE(border_array(z) == oracle::border_array(z));
      if (n > 0) REQUIRE(period_lengths(z) == oracle::periods(z));
      for (std::size_t p = 0; p <= n + 1; ++p) REQUIRE(has_period(z, p) == oracle::has_period(z, p));
    }
  }
}

TEST_CASE("small examples") {
  CHECK(period_lengths("abaab") == std::vector<std::size_t>{3, 5});
  CHECK(period_lengths("aaaa") == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(border_array("abab") == std::vector<std::size_t>{0, 0, 1, 2});
  CHECK(border_array("").empty());
  CHECK_THROWS_AS(period_lengths(""), PeriodicityError);
}

TEST_CASE("fine-wilf root") {
  CHECK(fine_wilf_root("abababab", 2, 4) == "ab");
  CHECK(fine_wilf_root("aaaaa", 2, 3) == "a");
  SUBCASE("too short") { CHECK_THROWS_AS(fine_wilf_root("aba", 2, 3), PeriodicityError); }
  SUBCASE("not a period") { CHECK_THROWS_AS(fine_wilf_root("abaabaab", 3, 5), PeriodicityError); }
}

TEST_CASE("fine-wilf root on random words with two periods") {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (const auto& z : oracle::all_words("ab", n)) {
      const auto ps = oracle::periods(z);
      for (auto p : ps)
        for (auto q : ps) {
          if (p + q > n) continue;
          const std::size_t g = std::gcd(p, q);
          REQUIRE(fine_wilf_root(z, p, q) == z.substr(0, g));
          REQUIRE(oracle::has_period(z, g));
        }
    }
  }
}

TEST_CASE("primitive root") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& z : oracle::all_words("ab", n)) {
      const auto pr = primitive_root(z);
      const auto expect = oracle::primitive_root(z);
      REQUIRE(pr.root == expect.first);
      REQUIRE(pr.exponent == expect.second);
      REQUIRE(power(pr.root, pr.exponent) == z);
    }
  }
  CHECK(primitive_root("abab").root == "ab");
  CHECK(primitive_root("abab").exponent == 2);
  CHECK(primitive_root("aba").exponent == 1);
}

}
