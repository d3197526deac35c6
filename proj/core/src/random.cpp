#include "ahp/random.hpp"

#include <limits>
#include <stdexcept>

namespace ahp {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("Rng::below: empty range");
  }
  // Rejection sampling on the largest multiple of n.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = next();
  while (v >= limit) {
    v = next();
  }
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("Rng::between: empty range");
  }
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Word random_word(const Alphabet& alpha, Rng& rng, std::size_t length) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(letter(rng.below(alpha.size())));
  }
  return w;
}

}  // namespace ahp
