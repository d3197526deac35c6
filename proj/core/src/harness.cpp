#include "ahp/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "ahp/fourgon.hpp"
#include "ahp/free_backend.hpp"
#include "ahp/free_group.hpp"
#include "ahp/word_periodicity.hpp"

namespace ahp {

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied:
      return "satisfied";
    case HypothesisStatus::failed:
      return "failed";
    case HypothesisStatus::conditional:
      return "conditional";
  }
  return "unknown";
}

namespace {

/// 1, -1, 2, -2, ..., m, -m
std::vector<std::int64_t> exponent_order(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= m; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

void fail(HarnessReport& rep, std::string what) {
  rep.hypothesis_status = HypothesisStatus::failed;
  rep.failed_hypothesis = std::move(what);
}

void downgrade(HarnessReport& rep, std::string note) {
  if (rep.hypothesis_status == HypothesisStatus::satisfied) {
    rep.hypothesis_status = HypothesisStatus::conditional;
  }
  rep.notes.push_back(std::move(note));
}

/// Loxodromic and shortest in its conjugacy class.
void check_element(const Group& g, const GroupElement& e, const char* name, const SearchBounds& bounds,
                   HarnessReport& rep) {
  if (rep.hypothesis_failed()) {
    return;
  }
  const auto cls = classify_element(g, e, bounds.max_exponent);
  if (cls.kind != ElementKind::loxodromic) {
    fail(rep, std::string(name) + " is not certified loxodromic (" + cls.reason + ")");
    return;
  }
  const auto sc = shortest_conjugate(g, e, bounds.conjugator_bound);
  const auto len = g.length(e);
  const auto best = g.length(sc.element);
  if (best.value < len.value) {
    fail(rep, std::string(name) + " is not shortest in its conjugacy class (" + g.format(sc.element) +
                  " is shorter)");
    return;
  }
  if (sc.certificate != Certificate::exact || !len.exact()) {
    downgrade(rep, std::string(name) + " conjugacy-shortest only up to conjugators of length " +
                       std::to_string(bounds.conjugator_bound));
  }
}

void check_instance(const Group& g, const TheoremInstance& inst, HarnessReport& rep) {
  if (inst.r < 0) {
    throw std::invalid_argument("r must be >= 0");
  }
  check_element(g, inst.a, "a", inst.bounds, rep);
  check_element(g, inst.b, "b", inst.bounds, rep);
  if (rep.hypothesis_failed()) {
    return;
  }
  const auto la = g.length(inst.a);
  const auto lb = g.length(inst.b);
  if (la.value < lb.value) {
    fail(rep, "|a| < |b|");
  }
}

void echo_profile(const ConstantsProfile& p, HarnessReport& rep) {
  rep.constants_used.emplace_back("delta", to_string(p.delta()));
  rep.constants_used.emplace_back("tau", to_string(p.tau()));
  rep.constants_used.emplace_back("mu", to_string(p.mu()));
  rep.constants_used.emplace_back("mu_provenance", std::string(to_string(p.mu_provenance())));
  rep.constants_used.emplace_back("kappa0", std::to_string(p.kappa0()));
  rep.constants_used.emplace_back("eps0", std::to_string(p.eps0()));
}

/// Lower bound for |bⁿ|/n used to size line windows.
Rational growth_rate(const Group& g, const GroupElement& b, HarnessReport* rep) {
  if (const auto exact = stable_norm_exact(g, b); exact && *exact > 0) {
    return *exact;
  }
  if (rep != nullptr) {
    rep->notes.push_back("b-line window sized assuming |b^n| >= n");
  }
  return Rational(1);
}

/// A window of L(y, b) centered on the phase vertex nearest to x, long
/// enough to shadow `cover` edges at distance r in both directions.
PathInGraph b_window(const Group& g, const GroupElement& x, const GroupElement& y, const GroupElement& b,
                     std::int64_t cover, std::int64_t r, const SearchBounds& bounds, HarnessReport* rep) {
  const Rational rate = growth_rate(g, b, rep);
  const std::int64_t reach = g.length(x).value + g.length(y).value + r + g.length(b).value;
  const std::int64_t span = std::min<std::int64_t>(ceil(Rational(reach) / rate) + 1, bounds.max_window / 2);
  GroupElement v = g.multiply(y, g.power(b, -span));
  std::int64_t best_n = -span;
  std::int64_t best_d = g.distance(x, v).value;
  for (std::int64_t n = -span + 1; n <= span; ++n) {
    v = g.multiply(v, b);
    const std::int64_t d = g.distance(x, v).value;
    if (d < best_d || (d == best_d && std::abs(n) < std::abs(best_n))) {
      best_d = d;
      best_n = n;
    }
  }
  const std::int64_t blen = std::max<std::int64_t>(1, g.length(b).value);
  std::int64_t half = (cover + 2 * r + 2 * blen) / blen + 2;
  if (2 * half > bounds.max_window) {
    half = bounds.max_window / 2;
    if (rep != nullptr) {
      rep->notes.push_back("b-line window clamped to max_window periods");
    }
  }
  return periodic_line(g, y, b, best_n - half, best_n + half);
}

/// Index of the vertex of q nearest to v among those within r; ties go to
/// the smallest index.
std::optional<std::size_t> nearest_vertex(const Group& g, const GroupElement& v, const PathInGraph& q,
                                          std::int64_t r) {
  std::optional<std::size_t> best;
  std::int64_t best_d = r + 1;
  for (std::size_t j = 0; j < q.vertices.size(); ++j) {
    const auto d = g.distance(v, q.vertices[j]);
    if (d.exact() && d.value < best_d) {
      best_d = d.value;
      best = j;
      if (best_d == 0) {
        break;
      }
    }
  }
  return best;
}

/// The subpath of q from vertex index `from` to vertex index `to`, in that
/// direction.
PathInGraph along(const Group& g, const PathInGraph& q, std::size_t from, std::size_t to) {
  if (from <= to) {
    return subpath(q, from, to);
  }
  return reversed(g, subpath(q, to, from));
}

PathInGraph geodesic_between(const Group& g, const GroupElement& u, const GroupElement& v) {
  return make_path(g, u, geodesic_word(g, g.multiply(g.inverse(u), v)));
}

struct PairWitness {
  std::int64_t s;
  std::int64_t t;
};

/// First (s, t) in the order 1, -1, 2, -2, ... with h⁻¹ b^s h = a^t.
std::optional<PairWitness> conjugation_witness(const Group& g, const GroupElement& h, const GroupElement& a,
                                               const GroupElement& b, std::int64_t max_exponent, bool& undecided) {
  const auto order = exponent_order(max_exponent);
  std::vector<GroupElement> lhs;
  std::vector<GroupElement> rhs;
  for (auto k : order) {
    lhs.push_back(g.conjugate(g.power(b, k), h));
    rhs.push_back(g.power(a, k));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      switch (g.compare(lhs[i], rhs[j])) {
        case Equality::equal:
          return PairWitness{order[i], order[j]};
        case Equality::undecided:
          undecided = true;
          break;
        case Equality::distinct:
          break;
      }
    }
  }
  return std::nullopt;
}

Word repeat(const Word& w, std::int64_t n, const Alphabet& alpha) {
  const Word base = n < 0 ? alpha.inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < std::abs(n); ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return out;
}

/// Re-checks (x⁻¹y) b^s (y⁻¹x) = a^t from the raw words.
void reverify_theorem_witness(const Group& g, const TheoremInstance& inst, std::int64_t s, std::int64_t t) {
  const Alphabet& alpha = g.alphabet();
  Word w = alpha.inverse(inst.x.word);
  w.insert(w.end(), inst.y.word.begin(), inst.y.word.end());
  const Word bs = repeat(inst.b.word, s, alpha);
  w.insert(w.end(), bs.begin(), bs.end());
  const Word yinv = alpha.inverse(inst.y.word);
  w.insert(w.end(), yinv.begin(), yinv.end());
  w.insert(w.end(), inst.x.word.begin(), inst.x.word.end());
  const Word at = repeat(inst.a.word, -t, alpha);
  w.insert(w.end(), at.begin(), at.end());
  if (g.compare(g.normal_form(w), g.identity()) != Equality::equal) {
    throw std::logic_error("internal error: witness (s, t) = (" + std::to_string(s) + ", " + std::to_string(t) +
                           ") failed re-verification");
  }
}

void search_theorem_witness(const Group& g, const TheoremInstance& inst, HarnessReport& rep) {
  bool undecided = false;
  const GroupElement h = g.multiply(g.inverse(inst.y), inst.x);
  const auto w = conjugation_witness(g, h, inst.a, inst.b, inst.bounds.max_exponent, undecided);
  if (w) {
    reverify_theorem_witness(g, inst, w->s, w->t);
    rep.witness_found = true;
    rep.s = w->s;
    rep.t = w->t;
    rep.certificate = "verified by backend equality";
  } else {
    rep.certificate = "not found within bound |s|,|t| <= " + std::to_string(inst.bounds.max_exponent);
  }
  if (undecided) {
    rep.notes.push_back("some equalities were undecided within the reduction budget");
  }
}

/// The two 4-gons Q_0, Q_1 spanning m - 1 periods and their composition.
void fourgon_claims(const Group& g, const TheoremInstance& inst, const PathInGraph& p, const PathInGraph& q,
                    std::int64_t m, const ConstantsProfile* profile, bool compare_K, HarnessReport& rep) {
  if (m < 1) {
    return;
  }
  const auto& ph = *p.phase_indices;
  std::array<FourGon, 2> Q;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t first = ph[i];
    const std::size_t last = ph[i + static_cast<std::size_t>(m) - 1];
    const auto c_first = nearest_vertex(g, p.vertices[first], q, inst.r);
    const auto c_last = nearest_vertex(g, p.vertices[last], q, inst.r);
    if (!c_first || !c_last) {
      throw GeometryError("phase vertex without a neighbor on the b-line");
    }
    Q[i].sides[0] = geodesic_between(g, q.vertices[*c_first], p.vertices[first]);
    Q[i].sides[1] = subpath(p, first, last);
    Q[i].sides[2] = geodesic_between(g, p.vertices[last], q.vertices[*c_last]);
    Q[i].sides[3] = along(g, q, *c_last, *c_first);
    validate(g, Q[i]);
  }
  const GroupElement psi = translation_element(g, Q[0], Q[1]);
  const GroupElement expected =
      g.multiply(g.multiply(inst.x, g.inverse(inst.a)), g.inverse(inst.x));
  if (!g.equal(psi, expected)) {
    throw std::logic_error("internal error: translation element differs from x a^-1 x^-1");
  }
  const FourGon S = compose(g, Q[0], Q[1]);
  const auto left = static_cast<std::int64_t>(S.sides[0].length());
  const auto right = static_cast<std::int64_t>(S.sides[2].length());
  if (left > 2 * inst.r || right > 2 * inst.r) {
    throw std::logic_error("internal error: composed side longer than 2r");
  }
  rep.details.emplace_back("translation", g.format(psi));
  rep.details.emplace_back("composed_left_length", std::to_string(left));
  rep.details.emplace_back("composed_right_length", std::to_string(right));
  const auto bottom = static_cast<std::int64_t>(S.sides[3].periods());
  const auto top = static_cast<std::int64_t>(S.sides[1].periods());
  rep.details.emplace_back("composed_bottom_b_periods", std::to_string(bottom));
  rep.details.emplace_back("composed_top_b_periods", std::to_string(top));
  if (profile != nullptr && compare_K) {
    const std::int64_t K = profile->K_of_r(2 * inst.r);
    if (std::min(bottom, top) < K) {
      rep.notes.push_back("composed top/bottom carry fewer than K(2r) = " + std::to_string(K) +
                          " b-periods (profile constants below the true ones?)");
    }
  }
}

}  // namespace

HarnessReport lemma41_check(const Group& g, const GroupElement& b, const GroupElement& x_p, const GroupElement& x_q,
                            std::int64_t window, std::int64_t r, const ConstantsProfile* profile,
                            const SearchBounds& bounds) {
  HarnessReport rep;
  rep.check = "lemma41";
  if (window < 1 || r < 0) {
    throw std::invalid_argument("lemma41: window must be >= 1 and r >= 0");
  }
  check_element(g, b, "b", bounds, rep);
  if (rep.hypothesis_failed()) {
    return rep;
  }
  if (profile != nullptr) {
    echo_profile(*profile, rep);
    try {
      const auto k = profile->K_step(r);
      rep.constants_used.emplace_back("eps", to_string(k.eps));
      rep.constants_used.emplace_back("K(r)", std::to_string(k.K));
      if (window < k.K) {
        fail(rep, "window " + std::to_string(window) + " < K(r) = " + std::to_string(k.K));
        return rep;
      }
    } catch (const ConstantsError& e) {
      fail(rep, e.what());
      return rep;
    }
  } else {
    downgrade(rep, "no profile: window not compared with K(r)");
  }
  const GroupElement bw = g.power(b, window);
  const auto d_start = g.distance(x_p, x_q);
  const auto d_end = g.distance(g.multiply(x_p, bw), g.multiply(x_q, bw));
  rep.details.emplace_back("d_start", std::to_string(d_start.value));
  rep.details.emplace_back("d_end", std::to_string(d_end.value));
  if (!d_start.exact() || !d_end.exact()) {
    fail(rep, "endpoint distances not exactly certified");
    return rep;
  }
  if (std::max(d_start.value, d_end.value) > r) {
    fail(rep, "endpoint distance " + std::to_string(std::max(d_start.value, d_end.value)) + " > r");
    return rep;
  }

  const GroupElement c = g.multiply(g.inverse(x_q), x_p);  // A⁻¹B
  rep.details.emplace_back("A^-1B", g.format(c));
  bool undecided = false;
  GroupElement bn = g.identity();
  for (std::int64_t n = 1; n <= bounds.max_exponent; ++n) {
    bn = g.multiply(bn, b);
    const Equality eq = g.compare(g.multiply(c, bn), g.multiply(bn, c));
    if (eq == Equality::undecided) {
      undecided = true;
      continue;
    }
    if (eq == Equality::equal) {
      if (g.compare(g.conjugate(bn, c), bn) != Equality::equal) {
        throw std::logic_error("internal error: centralizing witness failed re-verification");
      }
      rep.witness_found = true;
      rep.n = n;
      rep.certificate = "verified by backend equality";
      break;
    }
  }
  if (undecided) {
    rep.notes.push_back("some equalities were undecided within the reduction budget");
  }

  if (const auto* fg = dynamic_cast<const FreeGroup*>(&g)) {
    // Centralizers in a free group are cyclic: C(bⁿ) = <root(b)>.
    const auto dec = free::cyclic_reduce(fg->to_string(b.word));
    const auto root_core = words::primitive_root(dec.core).root;
    const GroupElement root =
        g.normal_form(fg->from_string(dec.conjugator + root_core + free::inverse(dec.conjugator)));
    const auto bound = static_cast<std::int64_t>(c.word.size()) + 1;
    std::optional<std::int64_t> member;
    for (std::int64_t j = -bound; j <= bound && !member; ++j) {
      if (g.equal(g.power(root, j), c)) {
        member = j;
      }
    }
    if (member.has_value() != rep.witness_found) {
      throw std::logic_error("internal error: centralizer membership disagrees with the witness search");
    }
    if (member) {
      rep.details.emplace_back("centralizer", "A^-1B = root(b)^" + std::to_string(*member));
    } else {
      rep.certificate = "exact: A^-1B centralizes no nontrivial power of b";
    }
  }
  if (!rep.witness_found && rep.certificate.empty()) {
    rep.certificate = "no witness within bound n <= " + std::to_string(bounds.max_exponent);
  }
  return rep;
}

HarnessReport weak_theorem_check(const Group& g, const TheoremInstance& inst, const ConstantsProfile* profile,
                                 const WeakOptions& options) {
  HarnessReport rep;
  rep.check = "weak";
  check_instance(g, inst, rep);
  if (rep.hypothesis_failed()) {
    return rep;
  }
  if (profile != nullptr) {
    echo_profile(*profile, rep);
  }
  std::optional<std::int64_t> F;
  if (profile != nullptr && (options.require_F || !options.periods)) {
    try {
      F = profile->F_of_r(inst.r);
      rep.constants_used.emplace_back("K(2r)", std::to_string(profile->K_of_r(2 * inst.r)));
      rep.constants_used.emplace_back("F(r)", std::to_string(*F));
    } catch (const ConstantsError& e) {
      fail(rep, e.what());
      return rep;
    }
  }
  if (!options.periods && !F) {
    throw std::invalid_argument("weak check needs a profile or an explicit period count");
  }
  const std::int64_t m = options.periods.value_or(F.value_or(0));
  rep.details.emplace_back("periods", std::to_string(m));
  if (m < 1) {
    fail(rep, "period count must be positive");
    return rep;
  }
  if (options.require_F) {
    if (!F) {
      downgrade(rep, "no profile: period count not compared with F(r)");
    } else if (m < *F) {
      fail(rep, "period count " + std::to_string(m) + " < F(r) = " + std::to_string(*F));
      return rep;
    }
  }
  if (m > inst.bounds.max_window) {
    fail(rep, "period count exceeds max_window");
    return rep;
  }

  const PathInGraph p = periodic_line(g, inst.x, inst.a, 0, m);
  const PathInGraph q =
      b_window(g, inst.x, inst.y, inst.b, static_cast<std::int64_t>(p.length()), inst.r, inst.bounds, &rep);
  if (!neighborhood_contains(g, p, q, inst.r)) {
    fail(rep, "containment: p is not in the r-neighborhood of L(y,b)");
    return rep;
  }
  try {
    fourgon_claims(g, inst, p, q, m, profile, options.require_F && F.has_value(), rep);
  } catch (const GeometryError& e) {
    rep.notes.push_back(std::string("four-gon construction skipped: ") + e.what());
  }
  search_theorem_witness(g, inst, rep);
  return rep;
}

HarnessReport main_theorem_check(const Group& g, const TheoremInstance& inst, const ConstantsProfile* profile,
                                 const MainOptions& options) {
  if (options.sharp_free) {
    if (g.kind() != BackendKind::free || inst.r != 0) {
      throw std::invalid_argument("sharp mode applies to free groups at r = 0 only");
    }
    WeakOptions wo;
    wo.periods = options.periods.value_or(2);
    wo.require_F = false;
    HarnessReport rep = weak_theorem_check(g, inst, nullptr, wo);
    rep.check = "theorem";
    rep.constants_used.emplace_back("f(0)", "2");
    rep.notes.push_back("free group at r = 0: two periods, no trimming");
    return rep;
  }
  if (profile == nullptr) {
    throw std::invalid_argument("theorem check needs a constants profile (or sharp mode)");
  }
  HarnessReport rep;
  rep.check = "theorem";
  check_instance(g, inst, rep);
  if (rep.hypothesis_failed()) {
    return rep;
  }
  echo_profile(*profile, rep);
  std::int64_t k = 0;
  std::int64_t F_prime = 0;
  const std::int64_t r_prime = profile->two_delta_two_mu();
  Rational f;
  try {
    f = profile->f(Rational(inst.r));
    k = profile->k_trim(inst.r);
    F_prime = profile->F_of_r(r_prime);
  } catch (const ConstantsError& e) {
    fail(rep, e.what());
    return rep;
  }
  rep.constants_used.emplace_back("C", to_string(profile->C()));
  rep.constants_used.emplace_back("f(r)", to_string(f));
  rep.constants_used.emplace_back("k", std::to_string(k));
  rep.constants_used.emplace_back("r'", std::to_string(r_prime));
  rep.constants_used.emplace_back("F(r')", std::to_string(F_prime));

  const std::int64_t n = options.periods.value_or(ceil(f));
  rep.details.emplace_back("periods", std::to_string(n));
  if (Rational(n) < f) {
    fail(rep, "period count " + std::to_string(n) + " < f(r) = " + to_string(f));
    return rep;
  }
  if (n > inst.bounds.max_window) {
    fail(rep, "period count exceeds max_window");
    return rep;
  }
  const PathInGraph p = periodic_line(g, inst.x, inst.a, 0, n);
  const PathInGraph q =
      b_window(g, inst.x, inst.y, inst.b, static_cast<std::int64_t>(p.length()), inst.r, inst.bounds, &rep);
  if (!neighborhood_contains(g, p, q, inst.r)) {
    fail(rep, "containment: p is not in the r-neighborhood of L(y,b)");
    return rep;
  }
  const std::int64_t trimmed = n - 2 * k;
  rep.details.emplace_back("trimmed_periods", std::to_string(trimmed));
  if (trimmed < F_prime) {
    fail(rep, "trimmed path has " + std::to_string(trimmed) + " < F(2delta+2mu) periods");
    return rep;
  }
  const auto& ph = *p.phase_indices;
  const PathInGraph p_trim =
      subpath(p, ph[static_cast<std::size_t>(k)], ph[static_cast<std::size_t>(n - k)]);
  if (!neighborhood_contains(g, p_trim, q, r_prime)) {
    fail(rep, "trimmed path is not in the (2delta+2mu)-neighborhood of q (profile constants too small?)");
    return rep;
  }
  TheoremInstance inner = inst;
  inner.x = g.multiply(inst.x, g.power(inst.a, k));
  inner.r = r_prime;
  WeakOptions wo;
  wo.periods = trimmed;
  wo.require_F = true;
  HarnessReport weak = weak_theorem_check(g, inner, profile, wo);
  if (weak.hypothesis_failed()) {
    fail(rep, "weak check at r': " + weak.failed_hypothesis);
    rep.notes.insert(rep.notes.end(), weak.notes.begin(), weak.notes.end());
    return rep;
  }
  if (weak.hypothesis_status == HypothesisStatus::conditional) {
    rep.hypothesis_status = HypothesisStatus::conditional;
  }
  rep.witness_found = weak.witness_found;
  rep.s = weak.s;
  rep.t = weak.t;
  rep.certificate = weak.certificate;
  for (auto& kv : weak.constants_used) {
    if (std::none_of(rep.constants_used.begin(), rep.constants_used.end(),
                     [&](const auto& e) { return e.first == kv.first; })) {
      rep.constants_used.push_back(kv);
    }
  }
  rep.details.insert(rep.details.end(), weak.details.begin(), weak.details.end());
  rep.notes.insert(rep.notes.end(), weak.notes.begin(), weak.notes.end());
  if (rep.witness_found) {
    // The witness for x·a^k is also one for x: conjugating by a power of a
    // fixes a^t.
    reverify_theorem_witness(g, inst, *rep.s, *rep.t);
  }
  return rep;
}

CommensurabilityResult commensurability_search(const Group& g, const GroupElement& a, const GroupElement& b,
                                               std::int64_t max_exponent, int conjugator_bound) {
  if (g.is_identity(a) || g.is_identity(b)) {
    throw std::invalid_argument("commensurability: trivial element excluded");
  }
  CommensurabilityResult out;
  if (const auto* fg = dynamic_cast<const FreeGroup*>(&g)) {
    const auto w = free::free_commensurate(fg->to_string(a.word), fg->to_string(b.word));
    if (w) {
      out.witness = CommensurabilityResult::Witness{g.normal_form(fg->from_string(w->g)), w->s, w->t};
      out.label = "exact: commensurable";
    } else {
      out.label = "exact: non-commensurable";
    }
    out.certificate = Certificate::exact;
    return out;
  }
  out.certificate = Certificate::bounded;
  const auto order = exponent_order(max_exponent);
  std::vector<GroupElement> a_pows;
  std::vector<GroupElement> b_pows;
  for (auto k : order) {
    a_pows.push_back(g.power(a, k));
    b_pows.push_back(g.power(b, k));
  }
  for (const auto& entry : g.ball(conjugator_bound)) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        const GroupElement lhs = g.conjugate(b_pows[j], entry.element);
        if (g.compare(lhs, a_pows[i]) != Equality::equal) {
          continue;
        }
        Word check = g.alphabet().inverse(entry.element.word);
        const Word bt = repeat(b.word, order[j], g.alphabet());
        check.insert(check.end(), bt.begin(), bt.end());
        check.insert(check.end(), entry.element.word.begin(), entry.element.word.end());
        const Word as = repeat(a.word, -order[i], g.alphabet());
        check.insert(check.end(), as.begin(), as.end());
        if (g.compare(g.normal_form(check), g.identity()) != Equality::equal) {
          throw std::logic_error("internal error: commensurability witness failed re-verification");
        }
        out.witness = CommensurabilityResult::Witness{entry.element, order[i], order[j]};
        out.label = "verified";
        return out;
      }
    }
  }
  out.label = "not found within bounds";
  return out;
}

ThresholdResult empirical_period_threshold(const Group& g, const TheoremInstance& inst, std::int64_t max_periods) {
  ThresholdResult out;
  out.max_periods = max_periods;
  HarnessReport rep;
  check_instance(g, inst, rep);
  if (rep.hypothesis_failed()) {
    out.notes.push_back("instance hypothesis failed: " + rep.failed_hypothesis);
    return out;
  }
  // The witness does not depend on the period count.
  bool undecided = false;
  const GroupElement h = g.multiply(g.inverse(inst.y), inst.x);
  const auto w = conjugation_witness(g, h, inst.a, inst.b, inst.bounds.max_exponent, undecided);
  if (undecided) {
    out.notes.push_back("some equalities were undecided within the reduction budget");
  }
  if (!w) {
    out.notes.push_back("no witness within the exponent bound");
    return out;
  }
  reverify_theorem_witness(g, inst, w->s, w->t);
  for (std::int64_t m = 1; m <= max_periods; ++m) {
    const PathInGraph p = periodic_line(g, inst.x, inst.a, 0, m);
    const PathInGraph q =
        b_window(g, inst.x, inst.y, inst.b, static_cast<std::int64_t>(p.length()), inst.r, inst.bounds, nullptr);
    if (neighborhood_contains(g, p, q, inst.r)) {
      out.periods = m;
      out.s = w->s;
      out.t = w->t;
      return out;
    }
  }
  return out;
}

}  // namespace ahp
