#include "ahp/free_group.hpp"

#include <cctype>
#include <numeric>

#include "ahp/word_periodicity.hpp"

namespace ahp::free {

void validate(std::string_view w, int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw FreeGroupError("rank must be between 0 and 26");
  }
  for (char c : w) {
    const bool lower = c >= 'a' && c < 'a' + rank;
    const bool upper = c >= 'A' && c < 'A' + rank;
    if (!lower && !upper) {
      throw FreeGroupError(std::string("letter '") + c + "' outside rank " + std::to_string(rank));
    }
  }
}

char inverse_letter(char c) {
  return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                     : static_cast<char>(std::tolower(c));
}

FreeWord inverse(std::string_view w) {
  FreeWord out(w.rbegin(), w.rend());
  for (char& c : out) {
    c = inverse_letter(c);
  }
  return out;
}

bool is_reduced(std::string_view w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse_letter(w[i - 1])) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_reduced(std::string_view w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != inverse_letter(w.back()));
}

FreeWord free_reduce(std::string_view w, int rank) {
  validate(w, rank);
  FreeWord stack;
  stack.reserve(w.size());
  for (char c : w) {
    if (!stack.empty() && stack.back() == inverse_letter(c)) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

CyclicDecomposition cyclic_reduce(std::string_view w, int rank) {
  const FreeWord r = free_reduce(w, rank);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return {r.substr(0, lo), r.substr(lo, hi - lo)};
}

FreeWord rotate(std::string_view w, std::size_t k) {
  if (w.empty()) {
    return {};
  }
  k %= w.size();
  FreeWord out(w.substr(k));
  out.append(w.substr(0, k));
  return out;
}

FreeWord line_window(std::string_view a, std::int64_t n_min, std::int64_t n_max) {
  validate(a);
  if (a.empty() || !is_cyclically_reduced(a)) {
    throw FreeGroupError("line_window: period must be nonempty and cyclically reduced");
  }
  if (n_min >= n_max) {
    throw FreeGroupError("line_window: empty window");
  }
  return words::power(a, static_cast<std::size_t>(n_max - n_min));
}

namespace {

void require_cyclic(std::string_view w, const char* op) {
  validate(w);
  if (w.empty() || !is_cyclically_reduced(w)) {
    throw FreeGroupError(std::string(op) + ": argument must be nonempty and cyclically reduced");
  }
}

// Letter k of the bi-infinite periodic word with period w, read from offset.
char periodic_at(std::string_view w, std::size_t offset, std::size_t k) {
  return w[(offset + k) % w.size()];
}

std::optional<std::pair<std::size_t, std::size_t>> common_window(std::string_view a,
                                                                 std::string_view b) {
  // A window of L(a) is determined by its starting offset modulo |a|, and
  // likewise for L(b).  Scanning the |a|·|b| offset pairs therefore covers
  // every pair of windows of length |a| + |b|.
  const std::size_t n = a.size() + b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (k < n && periodic_at(a, i, k) == periodic_at(b, j, k)) {
        ++k;
      }
      if (k == n) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OverlapRoot> overlap_root(std::string_view a, std::string_view b) {
  require_cyclic(a, "overlap_root");
  require_cyclic(b, "overlap_root");

  const FreeWord b_inv = inverse(b);
  for (bool inverted : {false, true}) {
    const std::string_view other = inverted ? std::string_view(b_inv) : b;
    auto hit = common_window(a, other);
    if (!hit) {
      continue;
    }
    const auto [i, j] = *hit;
    // The common subword has period lengths |a| and |b| and length
    // |a| + |b|, so its prefix of length gcd(|a|, |b|) is a period word.
    std::string z;
    for (std::size_t k = 0; k < a.size() + b.size(); ++k) {
      z.push_back(periodic_at(a, i, k));
    }
    const FreeWord w0 = words::fine_wilf_root(z, a.size(), b.size());
    OverlapRoot out;
    out.c = words::primitive_root(w0).root;
    out.shift_a = i;
    out.shift_b = inverted ? (b.size() - j) % b.size() : j;
    out.b_inverted = inverted;
    return out;
  }
  return std::nullopt;
}

FreeWord power(std::string_view w, std::int64_t n) {
  const FreeWord base = n < 0 ? inverse(w) : FreeWord(w);
  const auto count = static_cast<std::size_t>(n < 0 ? -n : n);
  return free_reduce(words::power(base, count));
}

std::optional<CommensurabilityWitness> free_commensurate(std::string_view a, std::string_view b) {
  const auto da = cyclic_reduce(a);
  const auto db = cyclic_reduce(b);
  if (da.core.empty() || db.core.empty()) {
    throw FreeGroupError("torsion-free group: trivial element excluded");
  }
  const auto ra = words::primitive_root(da.core);
  const auto rb = words::primitive_root(db.core);
  if (ra.root.size() != rb.root.size()) {
    return std::nullopt;
  }

  for (int sign : {1, -1}) {
    const FreeWord base = sign > 0 ? ra.root : inverse(ra.root);
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (rotate(base, j) != rb.root) {
        continue;
      }
      // root_b = v⁻¹ · root_a^sign · v with v the length-j prefix, hence
      // b^t = h · a^s · h⁻¹ for h = u_b · v⁻¹ · u_a⁻¹.
      const auto g = std::gcd(ra.exponent, rb.exponent);
      CommensurabilityWitness w;
      w.s = static_cast<std::int64_t>(rb.exponent / g);
      w.t = sign * static_cast<std::int64_t>(ra.exponent / g);
      const FreeWord v = base.substr(0, j);
      w.g = free_reduce(db.conjugator + inverse(v) + inverse(da.conjugator));

      const FreeWord lhs = free_reduce(inverse(w.g) + power(b, w.t) + w.g);
      if (lhs != power(a, w.s)) {
        throw std::logic_error("free_commensurate: witness failed verification");
      }
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace ahp::free
