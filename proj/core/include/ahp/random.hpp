#pragma once

#include <cstdint>
#include <random>

#include "ahp/alphabet.hpp"

namespace ahp {

/// Seeded mt19937_64 with a bounded draw that does not depend on the
/// standard library's distribution implementations, so that runs are
/// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Uniform random word of exactly `length` letters (not necessarily reduced).
Word random_word(const Alphabet& alpha, Rng& rng, std::size_t length);

}  // namespace ahp
