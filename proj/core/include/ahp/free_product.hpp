#pragma once

#include <array>

#include "ahp/group.hpp"

namespace ahp {

/// Z/m * Z/n with generating set all nontrivial elements of both factors.
///
/// Factor 0 is spelled with x, factor 1 with y.  The generator x^e is named
/// "x" for e = 1, "X" for e = m - 1 and "x^e" otherwise.  The normal form is
/// the alternating syllable word; every syllable is a single generator, so
/// the word length is the syllable count.
class FreeProductGroup final : public Group {
 public:
  struct Syllable {
    int factor = 0;
    int exponent = 0;  // 1 .. order - 1

    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  FreeProductGroup(int order_x, int order_y);

  BackendKind kind() const override { return BackendKind::free_product; }
  std::string descriptor() const override;
  const Alphabet& alphabet() const override { return alphabet_; }

  GroupElement normal_form(const Word& w) const override;
  LengthResult length(const GroupElement& g) const override;

  int order(int factor) const { return orders_.at(static_cast<std::size_t>(factor)); }
  Syllable syllable(Letter l) const { return syllables_.at(id(l)); }
  int factor_of(Letter l) const { return syllable(l).factor; }
  Letter letter_for(Syllable s) const;

 private:
  std::array<int, 2> orders_;
  Alphabet alphabet_;
  std::vector<Syllable> syllables_;
  std::array<std::vector<Letter>, 2> letter_of_;
};

}  // namespace ahp
