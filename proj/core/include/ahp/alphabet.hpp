#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ahp {

/// A generator of a backend's symmetric generating set.  Letter ids fix the
/// ShortLex order (a < A < b < B < ...).
enum class Letter : std::uint16_t {};

constexpr Letter letter(std::size_t id) { return static_cast<Letter>(id); }
constexpr std::size_t id(Letter l) { return static_cast<std::size_t>(l); }

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Length first, then lexicographic by letter id.
bool shortlex_less(const Word& lhs, const Word& rhs);

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names and inverses of a symmetric generating set.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> names, std::vector<Letter> inverses);

  std::size_t size() const { return names_.size(); }
  bool contains(Letter l) const { return id(l) < names_.size(); }
  std::string_view name(Letter l) const { return names_.at(id(l)); }
  Letter inverse(Letter l) const { return inverses_.at(id(l)); }
  Word inverse(const Word& w) const;

  /// Extra spellings accepted by parse(), e.g. "X" for the involution x.
  void add_alias(std::string name, Word expansion);

  std::string format(const Word& w) const;

  /// Greedy longest-match tokenization over names and aliases.  The strings
  /// "" and "1" denote the empty word.
  Word parse(std::string_view text) const;

  void validate(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<Letter> inverses_;
  std::map<std::string, Word, std::less<>> spellings_;
  std::size_t longest_spelling_ = 0;
};

}  // namespace ahp
