#pragma once

// Free-group word machinery over the letters a..z (generators) and A..Z
// (their inverses), plus the free-group form of the periodicity lemma.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ahp::free {

using FreeWord = std::string;

inline constexpr int kMaxRank = 26;

class FreeGroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws FreeGroupError if some letter is not one of the first `rank`
/// generators or their inverses.
void validate(std::string_view w, int rank = kMaxRank);

char inverse_letter(char c);
FreeWord inverse(std::string_view w);

bool is_reduced(std::string_view w);
bool is_cyclically_reduced(std::string_view w);

/// Unique reduced representative of w.
FreeWord free_reduce(std::string_view w, int rank = kMaxRank);

struct CyclicDecomposition {
  FreeWord conjugator;  // u
  FreeWord core;        // cyclically reduced
};

/// free_reduce(w) == u · core · u⁻¹ with core cyclically reduced.
CyclicDecomposition cyclic_reduce(std::string_view w, int rank = kMaxRank);

/// rotate(w, k) = w[k..] + w[..k].
FreeWord rotate(std::string_view w, std::size_t k);

/// The window a^(n_max - n_min) of the bi-infinite word L(a) = ...aaa...
FreeWord line_window(std::string_view a, std::int64_t n_min, std::int64_t n_max);

struct OverlapRoot {
  FreeWord c;            // primitive
  std::size_t shift_a = 0;
  std::size_t shift_b = 0;
  /// rotate(a, shift_a) == c^(|a|/|c|) and rotate(b, shift_b) == c^(sign·|b|/|c|)
  /// where sign is -1 iff b_inverted.
  bool b_inverted = false;
};

/// Searches L(a) and L(b) (and L(b⁻¹)) for a common subword of length
/// |a| + |b|.
std::optional<OverlapRoot> overlap_root(std::string_view a, std::string_view b);

struct CommensurabilityWitness {
  FreeWord g;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

/// Exact commensurability: returns (g, s, t) with s, t != 0 and
/// free_reduce(g⁻¹ b^t g) == free_reduce(a^s), or nothing when a and b are
/// not commensurable.
std::optional<CommensurabilityWitness> free_commensurate(std::string_view a, std::string_view b);

/// free_reduce(w^n), n may be negative.
FreeWord power(std::string_view w, std::int64_t n);

}  // namespace ahp::free
