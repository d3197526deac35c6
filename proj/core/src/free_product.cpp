#include "ahp/free_product.hpp"

namespace ahp {

FreeProductGroup::FreeProductGroup(int order_x, int order_y) : orders_{order_x, order_y} {
  if (order_x < 2 || order_y < 2) {
    throw std::invalid_argument("free product factors must have order >= 2");
  }
  if (order_x + order_y > 200) {
    throw std::invalid_argument("free product factor orders too large");
  }
  std::vector<std::string> names;
  for (int f = 0; f < 2; ++f) {
    const char base = f == 0 ? 'x' : 'y';
    const int m = orders_[static_cast<std::size_t>(f)];
    // ShortLex order inside a factor: x, X, x^2, x^(m-2), ...
    std::vector<int> exps;
    for (int lo = 1, hi = m - 1; lo <= hi; ++lo, --hi) {
      exps.push_back(lo);
      if (hi != lo) {
        exps.push_back(hi);
      }
    }
    for (int e : exps) {
      syllables_.push_back({f, e});
      if (e == 1) {
        names.emplace_back(1, base);
      } else if (e == m - 1) {
        names.emplace_back(1, static_cast<char>(base - 'a' + 'A'));
      } else {
        names.push_back(std::string(1, base) + "^" + std::to_string(e));
      }
    }
  }
  for (int f = 0; f < 2; ++f) {
    letter_of_[static_cast<std::size_t>(f)].assign(static_cast<std::size_t>(order(f)), letter(0));
  }
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    const auto& s = syllables_[i];
    letter_of_[static_cast<std::size_t>(s.factor)][static_cast<std::size_t>(s.exponent)] = letter(i);
  }
  std::vector<Letter> inverses(syllables_.size());
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    const auto& s = syllables_[i];
    inverses[i] = letter_for({s.factor, order(s.factor) - s.exponent});
  }
  alphabet_ = Alphabet(std::move(names), std::move(inverses));
  for (int f = 0; f < 2; ++f) {
    if (order(f) == 2) {
      alphabet_.add_alias(std::string(1, f == 0 ? 'X' : 'Y'), Word{letter_for({f, 1})});
    }
  }
}

Letter FreeProductGroup::letter_for(Syllable s) const {
  if (s.factor < 0 || s.factor > 1 || s.exponent <= 0 || s.exponent >= order(s.factor)) {
    throw std::invalid_argument("free product: no generator for syllable");
  }
  return letter_of_[static_cast<std::size_t>(s.factor)][static_cast<std::size_t>(s.exponent)];
}

std::string FreeProductGroup::descriptor() const {
  return "zmzn:" + std::to_string(orders_[0]) + "," + std::to_string(orders_[1]);
}

GroupElement FreeProductGroup::normal_form(const Word& w) const {
  alphabet_.validate(w);
  std::vector<Syllable> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    Syllable s = syllable(l);
    if (!stack.empty() && stack.back().factor == s.factor) {
      const int e = (stack.back().exponent + s.exponent) % order(s.factor);
      stack.pop_back();
      if (e != 0) {
        stack.push_back({s.factor, e});
      }
    } else {
      stack.push_back(s);
    }
  }
  Word out;
  out.reserve(stack.size());
  for (const auto& s : stack) {
    out.push_back(letter_for(s));
  }
  return {std::move(out), FormStatus::canonical};
}

LengthResult FreeProductGroup::length(const GroupElement& g) const {
  return {static_cast<std::int64_t>(g.word.size()), Certificate::exact};
}

}  // namespace ahp
