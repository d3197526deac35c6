#include "ahp/free_backend.hpp"

namespace ahp {

namespace {

Alphabet free_alphabet(int rank) {
  std::vector<std::string> names;
  std::vector<Letter> inverses;
  for (int i = 0; i < rank; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
    names.emplace_back(1, static_cast<char>('A' + i));
    inverses.push_back(letter(2 * i + 1));
    inverses.push_back(letter(2 * i));
  }
  return Alphabet(std::move(names), std::move(inverses));
}

}  // namespace

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > free::kMaxRank) {
    throw std::invalid_argument("free group rank must be between 1 and 26");
  }
  alphabet_ = free_alphabet(rank);
}

std::string FreeGroup::descriptor() const { return "free:" + std::to_string(rank_); }

GroupElement FreeGroup::normal_form(const Word& w) const {
  alphabet_.validate(w);
  // Letters 2i and 2i+1 are mutually inverse.
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && id(stack.back()) == (id(l) ^ 1u)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return {std::move(stack), FormStatus::canonical};
}

LengthResult FreeGroup::length(const GroupElement& g) const {
  return {static_cast<std::int64_t>(g.word.size()), Certificate::exact};
}

free::FreeWord FreeGroup::to_string(const Word& w) const { return alphabet_.format(w); }

Word FreeGroup::from_string(std::string_view w) const { return alphabet_.parse(w); }

}  // namespace ahp
