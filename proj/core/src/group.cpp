#include "ahp/group.hpp"

#include <unordered_set>

namespace ahp {

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::exact:
      return "exact";
    case Certificate::lower_bound:
      return "lower_bound";
    case Certificate::upper_bound:
      return "upper_bound";
    case Certificate::observed_on_ball:
      return "observed_on_ball";
    case Certificate::bounded:
      return "bounded";
  }
  return "unknown";
}

std::string_view to_string(FormStatus s) {
  switch (s) {
    case FormStatus::canonical:
      return "canonical";
    case FormStatus::reduced:
      return "reduced";
    case FormStatus::undecided:
      return "undecided";
  }
  return "unknown";
}

Equality Group::compare(const GroupElement& g, const GroupElement& h) const {
  if (g.status == FormStatus::undecided || h.status == FormStatus::undecided) {
    return Equality::undecided;
  }
  return g.word == h.word ? Equality::equal : Equality::distinct;
}

std::vector<BallEntry> Group::ball(int radius) const {
  if (radius < 0) {
    throw std::invalid_argument("ball: negative radius");
  }
  std::vector<BallEntry> out;
  std::unordered_set<Word, WordHash> seen;
  out.push_back({identity(), 0});
  seen.insert(Word{});
  std::size_t sphere_begin = 0;
  for (int d = 0; d < radius; ++d) {
    const std::size_t sphere_end = out.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
      for (std::size_t l = 0; l < alphabet().size(); ++l) {
        GroupElement next = multiply(out[i].element, letter(l));
        if (seen.insert(next.word).second) {
          if (out.size() >= max_ball_size_) {
            throw BudgetExceeded("ball: size budget exceeded at radius " + std::to_string(d + 1), d);
          }
          out.push_back({std::move(next), d + 1});
        }
      }
    }
    sphere_begin = sphere_end;
  }
  return out;
}

std::optional<Word> Group::geodesic(const GroupElement& g) const {
  const auto len = length(g);
  if (!len.exact() || g.status != FormStatus::canonical) {
    return std::nullopt;
  }
  return g.word;
}

GroupElement Group::parse(std::string_view text) const { return normal_form(alphabet().parse(text)); }

std::string Group::format(const GroupElement& g) const { return alphabet().format(g.word); }

GroupElement Group::multiply(const GroupElement& g, const GroupElement& h) const {
  Word w = g.word;
  w.insert(w.end(), h.word.begin(), h.word.end());
  return normal_form(w);
}

GroupElement Group::multiply(const GroupElement& g, Letter l) const {
  Word w = g.word;
  w.push_back(l);
  return normal_form(w);
}

GroupElement Group::inverse(const GroupElement& g) const { return normal_form(alphabet().inverse(g.word)); }

GroupElement Group::power(const GroupElement& g, std::int64_t n) const {
  GroupElement base = n < 0 ? inverse(g) : g;
  std::uint64_t e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  GroupElement result = identity();
  while (e > 0) {
    if (e & 1u) {
      result = multiply(result, base);
    }
    e >>= 1u;
    if (e > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

GroupElement Group::conjugate(const GroupElement& g, const GroupElement& h) const {
  Word w = alphabet().inverse(h.word);
  w.insert(w.end(), g.word.begin(), g.word.end());
  w.insert(w.end(), h.word.begin(), h.word.end());
  return normal_form(w);
}

bool Group::equal(const GroupElement& g, const GroupElement& h) const {
  switch (compare(g, h)) {
    case Equality::equal:
      return true;
    case Equality::distinct:
      return false;
    case Equality::undecided:
      break;
  }
  throw UndecidedError("equality undecided within budget for " + format(g) + " and " + format(h));
}

LengthResult Group::distance(const GroupElement& g, const GroupElement& h) const {
  Word w = alphabet().inverse(g.word);
  w.insert(w.end(), h.word.begin(), h.word.end());
  return length(normal_form(w));
}

}  // namespace ahp
