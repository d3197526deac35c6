#include "ahp/alphabet.hpp"

#include <algorithm>

namespace ahp {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letter ids.
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= id(l) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) {
    return lhs.size() < rhs.size();
  }
  return lhs < rhs;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Letter> inverses)
    : names_(std::move(names)), inverses_(std::move(inverses)) {
  if (names_.size() != inverses_.size()) {
    throw AlphabetError("alphabet: names and inverses differ in size");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const Letter inv = inverses_[i];
    if (id(inv) >= names_.size() || id(inverses_[id(inv)]) != i) {
      throw AlphabetError("alphabet: generating set is not closed under inversion");
    }
    if (names_[i].empty() || names_[i] == "1") {
      throw AlphabetError("alphabet: invalid letter name");
    }
    add_alias(names_[i], Word{letter(i)});
  }
}

Word Alphabet::inverse(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return out;
}

void Alphabet::add_alias(std::string name, Word expansion) {
  longest_spelling_ = std::max(longest_spelling_, name.size());
  spellings_.insert_or_assign(std::move(name), std::move(expansion));
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Letter l : w) {
    out.append(name(l));
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  if (text == "1") {
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool matched = false;
    for (std::size_t len = std::min(longest_spelling_, text.size() - pos); len > 0; --len) {
      auto it = spellings_.find(text.substr(pos, len));
      if (it != spellings_.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        pos += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw AlphabetError("unknown letter '" + std::string(text.substr(pos, 1)) + "' in word \"" +
                          std::string(text) + "\"");
    }
  }
  return out;
}

void Alphabet::validate(const Word& w) const {
  for (Letter l : w) {
    if (!contains(l)) {
      throw AlphabetError("unknown letter id " + std::to_string(id(l)));
    }
  }
}

}  // namespace ahp
