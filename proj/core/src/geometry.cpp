#include "ahp/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ahp/free_backend.hpp"
#include "ahp/free_group.hpp"
#include "ahp/free_product.hpp"
#include "ahp/random.hpp"

namespace ahp {

Word geodesic_word(const Group& g, const GroupElement& e) {
  auto w = g.geodesic(e);
  if (!w) {
    throw GeometryError("geodesic unavailable at budget for " + g.format(e));
  }
  return *w;
}

PathInGraph periodic_line(const Group& g, const GroupElement& x, const GroupElement& a, std::int64_t n_min,
                          std::int64_t n_max) {
  if (n_min > n_max) {
    throw std::invalid_argument("periodic line: empty window");
  }
  if (g.is_identity(a)) {
    throw std::invalid_argument("periodic line: period element is trivial");
  }
  const Word seg = geodesic_word(g, a);
  Word label;
  label.reserve(seg.size() * static_cast<std::size_t>(n_max - n_min));
  for (std::int64_t n = n_min; n < n_max; ++n) {
    label.insert(label.end(), seg.begin(), seg.end());
  }
  PathInGraph p = make_path(g, g.multiply(x, g.power(a, n_min)), label);
  std::vector<std::size_t> phases;
  for (std::int64_t n = 0; n <= n_max - n_min; ++n) {
    phases.push_back(static_cast<std::size_t>(n) * seg.size());
  }
  p.phase_indices = std::move(phases);
  p.period_element = a;
  return p;
}

QuasiCheck quasi_geodesic_check(const Group& g, const PathInGraph& p, const QuasiParams& params) {
  if (params.kappa < 1 || params.eps < 0) {
    throw std::invalid_argument("quasi-geodesic parameters need kappa >= 1 and eps >= 0");
  }
  QuasiCheck out;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = g.distance(p.vertices[i], p.vertices[j]);
      const auto len = static_cast<std::int64_t>(j - i);
      // d < len/κ - ε  <=>  κ·d < len - κ·ε
      const bool bad = params.kappa * d.value < Rational(len) - params.kappa * params.eps;
      if (!bad) {
        continue;
      }
      if (d.exact()) {
        out.violations.push_back({i, j, len, d.value});
      } else {
        out.partial = true;
      }
    }
  }
  return out;
}

std::optional<bool> is_local_geodesic(const Group& g, const PathInGraph& p, std::size_t k) {
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && j - i <= k; ++j) {
      const auto d = g.distance(p.vertices[i], p.vertices[j]);
      if (d.value == static_cast<std::int64_t>(j - i)) {
        continue;
      }
      if (!d.exact() && d.value < static_cast<std::int64_t>(j - i)) {
        return std::nullopt;
      }
      return false;
    }
  }
  return true;
}

std::vector<GraphPoint> path_points(const PathInGraph& p) {
  std::vector<GraphPoint> out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    out.push_back({p.vertices[i], p.vertices[i], false});
    if (i + 1 < p.vertices.size()) {
      out.push_back({p.vertices[i], p.vertices[i + 1], true});
    }
  }
  return out;
}

namespace {

/// Memoized vertex distances for one polygon.
class DistanceTable {
 public:
  explicit DistanceTable(const Group& g) : g_(g) {}

  std::size_t index(const GroupElement& v) {
    auto [it, inserted] = ids_.emplace(v.word, verts_.size());
    if (inserted) {
      verts_.push_back(v);
    }
    return it->second;
  }

  /// (value, exact)
  std::pair<std::int64_t, bool> at(std::size_t i, std::size_t j) {
    if (i == j) {
      return {0, true};
    }
    const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
    auto it = cache_.find(key.first * 1'000'003u + key.second);
    if (it != cache_.end()) {
      return it->second;
    }
    const auto d = g_.distance(verts_[key.first], verts_[key.second]);
    const std::pair<std::int64_t, bool> v{d.value, d.exact()};
    cache_.emplace(key.first * 1'000'003u + key.second, v);
    return v;
  }

 private:
  const Group& g_;
  std::unordered_map<Word, std::size_t, WordHash> ids_;
  std::vector<GroupElement> verts_;
  std::unordered_map<std::size_t, std::pair<std::int64_t, bool>> cache_;
};

struct IndexedPoint {
  std::size_t a;
  std::size_t b;
  bool midpoint;
};

/// Distances doubled so midpoints stay integral.
struct Twice {
  std::int64_t value;
  bool exact;
};

Twice point_distance(DistanceTable& t, const IndexedPoint& p, const IndexedPoint& q) {
  if (!p.midpoint && !q.midpoint) {
    const auto [d, ex] = t.at(p.a, q.a);
    return {2 * d, ex};
  }
  if (p.midpoint && q.midpoint && ((p.a == q.a && p.b == q.b) || (p.a == q.b && p.b == q.a))) {
    return {0, true};
  }
  const std::vector<std::size_t> ps = p.midpoint ? std::vector<std::size_t>{p.a, p.b} : std::vector<std::size_t>{p.a};
  const std::vector<std::size_t> qs = q.midpoint ? std::vector<std::size_t>{q.a, q.b} : std::vector<std::size_t>{q.a};
  std::int64_t best_exact = std::numeric_limits<std::int64_t>::max();
  std::int64_t best_bound = std::numeric_limits<std::int64_t>::max();
  for (auto i : ps) {
    for (auto j : qs) {
      const auto [d, ex] = t.at(i, j);
      (ex ? best_exact : best_bound) = std::min(ex ? best_exact : best_bound, d);
    }
  }
  const std::int64_t extra = (p.midpoint ? 1 : 0) + (q.midpoint ? 1 : 0);
  const std::int64_t best = std::min(best_exact, best_bound);
  return {2 * best + extra, best_exact <= best_bound};
}

struct SlimnessResult {
  Rational value;
  bool exact;
};

SlimnessResult slimness(const Group& g, const std::vector<PathInGraph>& sides) {
  DistanceTable table(g);
  std::vector<std::vector<IndexedPoint>> pts(sides.size());
  for (std::size_t s = 0; s < sides.size(); ++s) {
    for (const auto& gp : path_points(sides[s])) {
      pts[s].push_back({table.index(gp.a), table.index(gp.b), gp.midpoint});
    }
  }
  std::int64_t worst = 0;
  bool exact = true;
  for (std::size_t s = 0; s < sides.size(); ++s) {
    for (const auto& p : pts[s]) {
      std::int64_t best_exact = std::numeric_limits<std::int64_t>::max();
      std::int64_t best_bound = std::numeric_limits<std::int64_t>::max();
      for (std::size_t o = 0; o < sides.size() && best_exact > 0; ++o) {
        if (o == s) {
          continue;
        }
        for (const auto& q : pts[o]) {
          const auto d = point_distance(table, p, q);
          (d.exact ? best_exact : best_bound) = std::min(d.exact ? best_exact : best_bound, d.value);
          if (best_exact == 0) {
            break;
          }
        }
      }
      const std::int64_t best = std::min(best_exact, best_bound);
      if (best == std::numeric_limits<std::int64_t>::max()) {
        continue;
      }
      if (best > worst) {
        worst = best;
      }
      exact = exact && best_exact <= best_bound;
    }
  }
  return {Rational(worst, 2), exact};
}

std::vector<BallEntry> ball_within_budget(const Group& g, int& radius) {
  for (;;) {
    try {
      return g.ball(radius);
    } catch (const BudgetExceeded& e) {
      if (e.largest_completed_radius() >= radius) {
        throw;
      }
      radius = e.largest_completed_radius();
    }
  }
}

}  // namespace

Rational polygon_slimness(const Group& g, const std::vector<PathInGraph>& sides) { return slimness(g, sides).value; }

DeltaEstimate estimate_delta(const Group& g, int radius, const DeltaOptions& options) {
  DeltaEstimate out;
  const auto b = ball_within_budget(g, radius);
  out.radius = radius;
  const std::size_t n = b.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t total = n * (n - 1) / 2;
  if (total <= options.max_triangles) {
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        pairs.emplace_back(i, j);
      }
    }
  } else {
    out.sampled = true;
    Rng rng(options.seed);
    while (pairs.size() < options.max_triangles) {
      const std::size_t i = 1 + rng.below(n - 1);
      const std::size_t j = 1 + rng.below(n - 1);
      if (i != j) {
        pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
  }
  const GroupElement one = g.identity();
  for (const auto& [i, j] : pairs) {
    const GroupElement& u = b[i].element;
    const GroupElement& v = b[j].element;
    const GroupElement between = g.multiply(g.inverse(u), v);
    const auto w = g.geodesic(between);
    if (!w) {
      ++out.skipped;
      continue;
    }
    std::vector<PathInGraph> sides;
    sides.push_back(make_path(g, one, geodesic_word(g, u)));
    sides.push_back(make_path(g, u, *w));
    sides.push_back(reversed(g, make_path(g, one, geodesic_word(g, v))));
    const auto s = slimness(g, sides);
    out.delta = std::max(out.delta, s.value);
    ++out.triangles;
  }
  return out;
}

StableNorm stable_norm_estimate(const Group& g, const GroupElement& e, std::int64_t n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("stable norm: n_max must be positive");
  }
  StableNorm out;
  GroupElement p = g.identity();
  bool first = true;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    p = g.multiply(p, e);
    const auto len = g.length(p);
    const std::int64_t upper = len.exact() ? len.value : static_cast<std::int64_t>(p.word.size());
    const Rational q(upper, n);
    if (first || q < out.value) {
      out.value = q;
      out.attained_at = n;
      first = false;
    }
  }
  return out;
}

ShortestConjugate shortest_conjugate(const Group& g, const GroupElement& e, int conjugator_bound) {
  if (const auto* fg = dynamic_cast<const FreeGroup*>(&g)) {
    const auto dec = free::cyclic_reduce(fg->to_string(e.word));
    const std::string& core = dec.core;
    std::size_t best = 0;
    for (std::size_t k = 1; k < core.size(); ++k) {
      const auto cand = free::rotate(core, k);
      if (fg->from_string(cand) < fg->from_string(free::rotate(core, best))) {
        best = k;
      }
    }
    const GroupElement h = g.normal_form(fg->from_string(dec.conjugator + core.substr(0, best)));
    return {g.conjugate(e, h), h, Certificate::exact};
  }
  if (const auto* fp = dynamic_cast<const FreeProductGroup*>(&g)) {
    GroupElement cur = e;
    GroupElement h = g.identity();
    while (cur.word.size() >= 2 && fp->factor_of(cur.word.front()) == fp->factor_of(cur.word.back())) {
      const GroupElement s = g.normal_form(Word{cur.word.front()});
      cur = g.conjugate(cur, s);
      h = g.multiply(h, s);
    }
    GroupElement best = cur;
    GroupElement best_h = h;
    for (std::size_t k = 1; k < cur.word.size(); ++k) {
      const GroupElement s = g.normal_form(Word(cur.word.begin(), cur.word.begin() + static_cast<std::ptrdiff_t>(k)));
      const GroupElement rot = g.conjugate(cur, s);
      if (rot.word < best.word) {
        best = rot;
        best_h = g.multiply(h, s);
      }
    }
    return {best, best_h, Certificate::exact};
  }
  if (conjugator_bound < 0) {
    throw std::invalid_argument("shortest conjugate: negative conjugator bound");
  }
  GroupElement best = e;
  GroupElement best_h = g.identity();
  std::int64_t best_len = g.length(e).value;
  for (const auto& entry : g.ball(conjugator_bound)) {
    const GroupElement c = g.conjugate(e, entry.element);
    const std::int64_t len = g.length(c).value;
    if (len < best_len || (len == best_len && shortlex_less(c.word, best.word))) {
      best = c;
      best_h = entry.element;
      best_len = len;
    }
  }
  return {best, best_h, Certificate::bounded};
}

std::optional<Rational> stable_norm_exact(const Group& g, const GroupElement& e) {
  if (const auto* fg = dynamic_cast<const FreeGroup*>(&g)) {
    return Rational(static_cast<std::int64_t>(free::cyclic_reduce(fg->to_string(e.word)).core.size()));
  }
  if (dynamic_cast<const FreeProductGroup*>(&g) != nullptr) {
    const auto core = shortest_conjugate(g, e, 0).element.word.size();
    return Rational(core >= 2 ? static_cast<std::int64_t>(core) : 0);
  }
  return std::nullopt;
}

std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::elliptic:
      return "elliptic";
    case ElementKind::loxodromic:
      return "loxodromic";
    case ElementKind::undecided:
      return "undecided";
  }
  return "unknown";
}

Classification classify_element(const Group& g, const GroupElement& e, std::int64_t n_max) {
  const Equality trivial = g.compare(e, g.identity());
  if (trivial == Equality::equal) {
    return {ElementKind::elliptic, 1, "trivial element"};
  }
  if (trivial == Equality::undecided) {
    return {ElementKind::undecided, std::nullopt, "word problem undecided within budget"};
  }
  if (dynamic_cast<const FreeGroup*>(&g) != nullptr) {
    return {ElementKind::loxodromic, std::nullopt, "nontrivial element of a free group"};
  }
  if (const auto* fp = dynamic_cast<const FreeProductGroup*>(&g)) {
    const Word core = shortest_conjugate(g, e, 0).element.word;
    if (core.size() >= 2) {
      return {ElementKind::loxodromic, std::nullopt,
              "cyclic core has " + std::to_string(core.size()) + " syllables"};
    }
    const auto s = fp->syllable(core.front());
    const int m = fp->order(s.factor);
    return {ElementKind::elliptic, m / std::gcd(m, s.exponent), "conjugate into a finite factor"};
  }
  GroupElement p = e;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    p = g.multiply(p, e);
    const Equality eq = g.compare(p, g.identity());
    if (eq == Equality::equal) {
      return {ElementKind::elliptic, n, "power " + std::to_string(n) + " is trivial"};
    }
    if (eq == Equality::undecided) {
      return {ElementKind::undecided, std::nullopt, "word problem undecided within budget"};
    }
  }
  if (g.kind() == BackendKind::dehn) {
    // Proper-power relators fail the piece condition, so the group is
    // torsion-free and hyperbolic: every nontrivial element is loxodromic.
    return {ElementKind::loxodromic, std::nullopt, "nontrivial element of a torsion-free C'(1/6) group"};
  }
  return {ElementKind::undecided, std::nullopt, "no torsion up to n_max and no linear growth certificate"};
}

InjectivityEstimate injectivity_radius_estimate(const Group& g, int length_bound, std::int64_t n_max) {
  InjectivityEstimate out;
  out.length_bound = length_bound;
  out.n_max = n_max;
  bool found = false;
  for (const auto& entry : g.ball(length_bound)) {
    if (entry.distance == 0) {
      continue;
    }
    if (classify_element(g, entry.element, n_max).kind != ElementKind::loxodromic) {
      continue;
    }
    const auto sc = shortest_conjugate(g, entry.element, length_bound);
    if (g.length(sc.element).value < entry.distance) {
      continue;
    }
    ++out.scanned;
    const auto exact = stable_norm_exact(g, entry.element);
    const Rational v = exact ? *exact : stable_norm_estimate(g, entry.element, n_max).value;
    if (!found || v < out.value) {
      out.value = v;
      out.witness = entry.element;
      found = true;
    }
  }
  if (!found) {
    throw GeometryError("no loxodromic element within the length bound");
  }
  return out;
}

AcylindricityProfile acylindricity_profile(const Group& g, int eps, int radius) {
  if (eps < 0 || radius < eps) {
    throw std::invalid_argument("acylindricity profile needs 0 <= eps <= radius");
  }
  AcylindricityProfile out;
  out.eps = eps;
  out.radius = radius;
  const auto b = g.ball(radius);
  std::vector<const GroupElement*> small;
  for (const auto& e : b) {
    if (e.distance <= eps) {
      small.push_back(&e.element);
    }
  }
  out.counts.assign(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& e : b) {
    std::int64_t count = 0;
    for (const auto* f : small) {
      const auto len = g.length(g.conjugate(*f, e.element));
      if (len.exact() && len.value <= eps) {
        ++count;
      }
    }
    auto& slot = out.counts[static_cast<std::size_t>(e.distance)];
    slot = std::max(slot, count);
  }
  out.N = out.counts.back();
  out.R = radius;
  std::int64_t suffix = 0;
  for (int d = radius; d >= 1; --d) {
    suffix = std::max(suffix, out.counts[static_cast<std::size_t>(d)]);
    if (suffix == out.N) {
      out.R = d;
    } else {
      break;
    }
  }
  return out;
}

namespace {

bool within_pairwise(const Group& g, const GroupElement& v, const PathInGraph& q, std::int64_t r) {
  for (const auto& u : q.vertices) {
    const auto d = g.distance(v, u);
    if (d.value <= r) {
      if (d.exact()) {
        return true;
      }
      throw GeometryError("neighborhood: distance undecided within budget");
    }
  }
  return false;
}

}  // namespace

bool neighborhood_contains(const Group& g, const PathInGraph& p, const PathInGraph& q, std::int64_t r) {
  if (r < 0) {
    return false;
  }
  if (g.unique_normal_forms() && r <= 8) {
    std::unordered_set<Word, WordHash> targets;
    for (const auto& u : q.vertices) {
      targets.insert(u.word);
    }
    std::vector<BallEntry> b;
    try {
      b = g.ball(static_cast<int>(r));
    } catch (const BudgetExceeded&) {
      b.clear();
    }
    if (!b.empty() && b.size() <= 4 * q.vertices.size() + 64) {
      for (const auto& v : p.vertices) {
        bool hit = false;
        for (const auto& h : b) {
          if (targets.count(g.multiply(v, h.element).word) != 0) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          return false;
        }
      }
      return true;
    }
  }
  for (const auto& v : p.vertices) {
    if (!within_pairwise(g, v, q, r)) {
      return false;
    }
  }
  return true;
}

namespace {

std::int64_t one_sided(const Group& g, const PathInGraph& p, const PathInGraph& q) {
  std::int64_t worst = 0;
  for (const auto& v : p.vertices) {
    std::int64_t best_exact = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_bound = std::numeric_limits<std::int64_t>::max();
    for (const auto& u : q.vertices) {
      const auto d = g.distance(v, u);
      (d.exact() ? best_exact : best_bound) = std::min(d.exact() ? best_exact : best_bound, d.value);
      if (best_exact == 0) {
        break;
      }
    }
    if (best_bound < best_exact) {
      throw GeometryError("hausdorff distance: distance undecided within budget");
    }
    worst = std::max(worst, best_exact);
  }
  return worst;
}

}  // namespace

Rational hausdorff_distance(const Group& g, const PathInGraph& p, const PathInGraph& q) {
  return Rational(std::max(one_sided(g, p, q), one_sided(g, q, p)));
}

}  // namespace ahp
