#include "ahp/word_periodicity.hpp"

#include <algorithm>
#include <numeric>

namespace ahp::words {

std::vector<std::size_t> border_array(std::string_view z) {
  std::vector<std::size_t> border(z.size(), 0);
  for (std::size_t i = 1; i < z.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && z[i] != z[k]) {
      k = border[k - 1];
    }
    if (z[i] == z[k]) {
      ++k;
    }
    border[i] = k;
  }
  return border;
}

std::vector<std::size_t> period_lengths(std::string_view z) {
  if (z.empty()) {
    throw PeriodicityError("empty word has no periods");
  }
  // Periods are |z| - b over the chain of borders of z.
  const auto border = border_array(z);
  std::vector<std::size_t> periods;
  periods.push_back(z.size());
  for (std::size_t b = border.back(); b > 0; b = border[b - 1]) {
    periods.push_back(z.size() - b);
  }
  // The border chain is decreasing, so periods come out ascending after
  // moving |z| to the back.
  std::rotate(periods.begin(), periods.begin() + 1, periods.end());
  return periods;
}

bool has_period(std::string_view z, std::size_t p) {
  if (p == 0 || p > z.size()) {
    return false;
  }
  for (std::size_t i = 0; i + p < z.size(); ++i) {
    if (z[i] != z[i + p]) {
      return false;
    }
  }
  return true;
}

MonoidWord fine_wilf_root(std::string_view z, std::size_t p, std::size_t q) {
  if (!has_period(z, p) || !has_period(z, q)) {
    throw PeriodicityError("not a period");
  }
  if (z.size() < p + q) {
    throw PeriodicityError("overlap too short");
  }
  const std::size_t g = std::gcd(p, q);
  if (!has_period(z, g)) {
    // Unreachable for a correct lemma; kept as a hard check.
    throw std::logic_error("fine_wilf_root: gcd is not a period");
  }
  return MonoidWord(z.substr(0, g));
}

PrimitiveRoot primitive_root(std::string_view w) {
  if (w.empty()) {
    throw PeriodicityError("empty word has no primitive root");
  }
  // The smallest period dividing |w| gives the primitive root.
  const auto border = border_array(w);
  const std::size_t p = w.size() - border.back();
  if (w.size() % p == 0) {
    return {MonoidWord(w.substr(0, p)), w.size() / p};
  }
  return {MonoidWord(w), 1};
}

MonoidWord power(std::string_view w, std::size_t n) {
  MonoidWord out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.append(w);
  }
  return out;
}

}  // namespace ahp::words
