#pragma once

// Brute-force reference implementations used by the tests.  They are
// deliberately naive and share no algorithmic code with the library; only
// the Word and Alphabet types are borrowed.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ahp/alphabet.hpp"

namespace oracle {

// ---- words in a free monoid ------------------------------------------------

inline bool has_period(const std::string& z, std::size_t p) {
  if (p == 0 || p > z.size()) return false;
  for (std::size_t i = 0; i + p < z.size(); ++i)
    if (z[i] != z[i + p]) return false;
  return true;
}

inline std::vector<std::size_t> periods(const std::string& z) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= z.size(); ++p)
    if (has_period(z, p)) out.push_back(p);
  return out;
}

inline std::vector<std::size_t> border_array(const std::string& z) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::string pre = z.substr(0, i + 1);
    std::size_t best = 0;
    for (std::size_t len = i; len > 0; --len) {
      if (pre.compare(0, len, pre, pre.size() - len, len) == 0) {
        best = len;
        break;
      }
    }
    out.push_back(best);
  }
  return out;
}

inline std::string repeat(const std::string& s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += s;
  return out;
}

inline std::pair<std::string, std::size_t> primitive_root(const std::string& z) {
  for (std::size_t d = 1; d <= z.size(); ++d)
    if (z.size() % d == 0 && repeat(z.substr(0, d), z.size() / d) == z) return {z.substr(0, d), z.size() / d};
  return {z, 1};
}

/// Every word over `letters` of exactly `length` letters.
inline std::vector<std::string> all_words(const std::string& letters, std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : letters) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

// ---- free groups on a..z, inverses A..Z -------------------------------------

inline char inv(char c) { return c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a'); }

inline std::string free_reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == inv(w[i])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::string free_inverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inv(c);
  return out;
}

inline std::string free_mul(const std::string& u, const std::string& v) { return free_reduce(u + v); }

inline std::string free_power(const std::string& w, std::int64_t k) {
  const std::string base = k < 0 ? free_inverse(w) : w;
  std::string out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out += base;
  return free_reduce(out);
}

inline std::string cyclic_core(const std::string& w) {
  std::string r = free_reduce(w);
  while (r.size() >= 2 && r.back() == inv(r.front())) r = r.substr(1, r.size() - 2);
  return r;
}

inline bool is_rotation(const std::string& u, const std::string& v) {
  return u.size() == v.size() && (u + u).find(v) != std::string::npos;
}

inline std::string generators(int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) {
    s += static_cast<char>('a' + i);
    s += static_cast<char>('A' + i);
  }
  return s;
}

inline bool is_reduced(const std::string& w) { return free_reduce(w) == w; }

inline bool is_cyclically_reduced(const std::string& w) {
  return is_reduced(w) && (w.size() < 2 || w.back() != inv(w.front()));
}

inline std::vector<std::string> cyclically_reduced_words(int rank, std::size_t length) {
  std::vector<std::string> out;
  for (auto& w : all_words(generators(rank), length))
    if (is_cyclically_reduced(w)) out.push_back(w);
  return out;
}

/// Conjugate primitive roots up to inversion, for cyclically reduced words.
inline bool commensurable_cyclic(const std::string& a, const std::string& b) {
  const std::string ra = primitive_root(cyclic_core(a)).first;
  const std::string rb = primitive_root(cyclic_core(b)).first;
  return is_rotation(ra, rb) || is_rotation(ra, free_inverse(rb));
}

// ---- Z/m * Z/n -------------------------------------------------------------

struct Syllable {
  int factor = 0;
  int exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend bool operator<(const Syllable& a, const Syllable& b) {
    return std::pair(a.factor, a.exponent) < std::pair(b.factor, b.exponent);
  }
};

using Syllables = std::vector<Syllable>;

struct FreeProduct {
  int orders[2];

  Syllables reduce(const Syllables& in) const {
    Syllables st;
    for (Syllable s : in) {
      s.exponent = ((s.exponent % orders[s.factor]) + orders[s.factor]) % orders[s.factor];
      if (s.exponent == 0) continue;
      if (!st.empty() && st.back().factor == s.factor) {
        const int e = (st.back().exponent + s.exponent) % orders[s.factor];
        st.pop_back();
        if (e != 0) st.push_back({s.factor, e});
      } else {
        st.push_back(s);
      }
    }
    return st;
  }

  Syllables inverse(const Syllables& w) const {
    Syllables out(w.rbegin(), w.rend());
    for (auto& s : out) s.exponent = orders[s.factor] - s.exponent;
    return reduce(out);
  }

  Syllables mul(const Syllables& u, const Syllables& v) const {
    Syllables w = u;
    w.insert(w.end(), v.begin(), v.end());
    return reduce(w);
  }

  int distance(const Syllables& u, const Syllables& v) const { return static_cast<int>(mul(inverse(u), v).size()); }

  std::vector<Syllable> generators() const {
    std::vector<Syllable> out;
    for (int f = 0; f < 2; ++f)
      for (int e = 1; e < orders[f]; ++e) out.push_back({f, e});
    return out;
  }

  /// Every element of length <= radius, via word enumeration.
  std::vector<Syllables> ball(int radius) const {
    std::map<Syllables, int> seen{{{}, 0}};
    std::vector<Syllables> frontier{{}};
    for (int r = 1; r <= radius; ++r) {
      std::vector<Syllables> next;
      for (const auto& w : frontier)
        for (auto g : generators()) {
          Syllables v = mul(w, {g});
          if (seen.emplace(v, r).second) next.push_back(v);
        }
      frontier = std::move(next);
    }
    std::vector<Syllables> out;
    for (const auto& [w, _] : seen) out.push_back(w);
    return out;
  }
};

// ---- hyperbolicity of a triangle at half-integer resolution ----------------

/// A vertex (a == b) or an edge midpoint.
template <class E>
struct Point {
  E a;
  E b;
  bool mid = false;
};

/// Vertices and midpoints along the vertex sequence of a path.
template <class E>
std::vector<Point<E>> points_of(const std::vector<E>& vertices) {
  std::vector<Point<E>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back({vertices[i], vertices[i], false});
    if (i + 1 < vertices.size()) out.push_back({vertices[i], vertices[i + 1], true});
  }
  return out;
}

/// Twice the graph distance between two points, given the vertex metric.
template <class E, class Dist>
int doubled_distance(const Point<E>& p, const Point<E>& q, Dist d) {
  if (!p.mid && !q.mid) return 2 * d(p.a, q.a);
  if (p.mid && q.mid) {
    if ((p.a == q.a && p.b == q.b) || (p.a == q.b && p.b == q.a)) return 0;
    return 2 + 2 * std::min({d(p.a, q.a), d(p.a, q.b), d(p.b, q.a), d(p.b, q.b)});
  }
  const Point<E>& m = p.mid ? p : q;
  const Point<E>& v = p.mid ? q : p;
  return 1 + 2 * std::min(d(m.a, v.a), d(m.b, v.a));
}

/// Max over sides of the doubled distance from a point of the side to the
/// union of the other sides.
template <class E, class Dist>
int doubled_slimness(const std::vector<std::vector<E>>& sides, Dist d) {
  int worst = 0;
  std::vector<std::vector<Point<E>>> pts;
  for (const auto& s : sides) pts.push_back(points_of(s));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& p : pts[i]) {
      int best = 1 << 30;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        for (const auto& q : pts[j]) best = std::min(best, doubled_distance(p, q, d));
      }
      worst = std::max(worst, best);
    }
  }
  return worst;
}

// ---- Dehn's algorithm, written out directly --------------------------------

/// Naive Dehn triviality test over a..z / A..Z for a C'(1/6) presentation.
inline bool dehn_trivial(const std::vector<std::string>& relators, std::string w) {
  std::vector<std::string> rstar;
  for (const auto& r : relators) {
    for (const std::string& base : {r, free_inverse(r)})
      for (std::size_t k = 0; k < base.size(); ++k) rstar.push_back(base.substr(k) + base.substr(0, k));
  }
  for (;;) {
    w = free_reduce(w);
    if (w.empty()) return true;
    bool replaced = false;
    for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
      for (const auto& r : rstar) {
        for (std::size_t len = r.size(); len * 2 > r.size() && !replaced; --len) {
          if (w.compare(i, len, r, 0, len) == 0 && i + len <= w.size()) {
            w = w.substr(0, i) + free_inverse(r.substr(len)) + w.substr(i + len);
            replaced = true;
          }
        }
        if (replaced) break;
      }
    }
    if (!replaced) return false;
  }
}

/// Sphere sizes of the Cayley graph by BFS, deduplicating with a pairwise
/// equality predicate on free words.
template <class Same>
std::vector<std::size_t> bfs_sphere_sizes(const std::string& letters, int radius, Same same) {
  std::vector<std::vector<std::string>> spheres{{""}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::string> next;
    for (const auto& w : spheres.back()) {
      for (char c : letters) {
        const std::string v = free_reduce(w + c);
        if (v.size() < static_cast<std::size_t>(r)) continue;
        bool old = false;
        for (int k = std::max(0, r - 2); k < r && !old; ++k)
          for (const auto& u : spheres[static_cast<std::size_t>(k)])
            if (same(u, v)) {
              old = true;
              break;
            }
        for (const auto& u : next)
          if (!old && same(u, v)) old = true;
        if (!old) next.push_back(v);
      }
    }
    spheres.push_back(std::move(next));
  }
  std::vector<std::size_t> sizes;
  for (const auto& s : spheres) sizes.push_back(s.size());
  return sizes;
}

}  // namespace oracle
