#include "ahp/dehn.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ahp/rational.hpp"

namespace ahp {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
    std::string item = trim(s.substr(start, end - start));
    if (!item.empty()) {
      out.push_back(std::move(item));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

Word free_reduce_pairs(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && id(stack.back()) == (id(l) ^ 1u)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

std::size_t common_prefix(const Word& w, std::size_t from, const Word& r) {
  std::size_t n = 0;
  while (from + n < w.size() && n < r.size() && w[from + n] == r[n]) {
    ++n;
  }
  return n;
}

}  // namespace

Presentation Presentation::make(std::vector<char> generators, std::vector<std::string> relators) {
  if (generators.empty()) {
    throw std::invalid_argument("presentation: no generators");
  }
  std::set<char> seen;
  for (char g : generators) {
    if (g < 'a' || g > 'z') {
      throw std::invalid_argument(std::string("presentation: generator must be a lowercase letter: ") + g);
    }
    if (!seen.insert(g).second) {
      throw std::invalid_argument(std::string("presentation: duplicate generator ") + g);
    }
  }
  Presentation p{std::move(generators), std::move(relators)};
  const Alphabet alpha = p.alphabet();
  for (const auto& r : p.relators) {
    if (r.empty()) {
      throw std::invalid_argument("presentation: empty relator");
    }
    const Word w = alpha.parse(r);
    const Word reduced = free_reduce_pairs(w);
    if (reduced.size() != w.size() || (id(w.front()) ^ 1u) == id(w.back())) {
      throw std::invalid_argument("presentation: relator not cyclically reduced: " + r);
    }
  }
  return p;
}

Presentation Presentation::parse(std::string_view text) {
  std::vector<char> gens;
  std::vector<std::string> rels;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') {
      continue;
    }
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("presentation: line " + std::to_string(lineno) + ": expected 'gens:' or 'rel:'");
    }
    const std::string key = trim(std::string_view(t).substr(0, colon));
    const std::string value = t.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) {
        throw std::invalid_argument("presentation: duplicate gens line");
      }
      have_gens = true;
      for (const auto& g : split_commas(value)) {
        if (g.size() != 1) {
          throw std::invalid_argument("presentation: generator names are single letters: " + g);
        }
        gens.push_back(g[0]);
      }
    } else if (key == "rel" || key == "rels") {
      for (auto& r : split_commas(value)) {
        rels.push_back(std::move(r));
      }
    } else {
      throw std::invalid_argument("presentation: line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_gens) {
    throw std::invalid_argument("presentation: missing gens line");
  }
  return make(std::move(gens), std::move(rels));
}

Presentation Presentation::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("presentation: cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Alphabet Presentation::alphabet() const {
  std::vector<std::string> names;
  std::vector<Letter> inverses;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    names.emplace_back(1, generators[i]);
    names.emplace_back(1, static_cast<char>(std::toupper(static_cast<unsigned char>(generators[i]))));
    inverses.push_back(letter(2 * i + 1));
    inverses.push_back(letter(2 * i));
  }
  return Alphabet(std::move(names), std::move(inverses));
}

std::vector<Word> Presentation::relator_words() const {
  const Alphabet alpha = alphabet();
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) {
    out.push_back(alpha.parse(r));
  }
  return out;
}

std::vector<SymmetrizedRelator> symmetrize(const Presentation& p) {
  const Alphabet alpha = p.alphabet();
  const auto rels = p.relator_words();
  std::vector<SymmetrizedRelator> out;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (bool inv : {false, true}) {
      const Word base = inv ? alpha.inverse(rels[i]) : rels[i];
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word w(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
        w.insert(w.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back({std::move(w), i, k, inv});
      }
    }
  }
  return out;
}

PieceReport small_cancellation_report(const Presentation& p, int lambda_denominator) {
  if (lambda_denominator < 1) {
    throw std::invalid_argument("small cancellation: denominator must be positive");
  }
  const Alphabet alpha = p.alphabet();
  const auto rstar = symmetrize(p);
  PieceReport report;
  // Distinct entries of R* are distinct occurrences, even when two
  // rotations of a proper power spell the same word; their full overlap is
  // then a piece, which is what rules out proper powers.
  for (std::size_t i = 0; i < rstar.size(); ++i) {
    for (std::size_t j = i + 1; j < rstar.size(); ++j) {
      const Word& u = rstar[i].word;
      const Word& v = rstar[j].word;
      const std::size_t piece = common_prefix(u, 0, v);
      report.longest_piece = std::max(report.longest_piece, piece);
      const auto bound = static_cast<std::size_t>(lambda_denominator) * piece;
      if (report.satisfied && (bound >= u.size() || bound >= v.size())) {
        report.satisfied = false;
        report.witness = "piece '" + alpha.format(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(piece))) +
                         "' shared by " + alpha.format(u) + " and " + alpha.format(v);
      }
    }
  }
  return report;
}

bool verify_small_cancellation(const Presentation& p, int lambda_denominator) {
  return small_cancellation_report(p, lambda_denominator).satisfied;
}

DehnGroup::DehnGroup(Presentation p, DehnOptions options, std::string source)
    : presentation_(std::move(p)), options_(options), source_(std::move(source)) {
  if (const auto rep = small_cancellation_report(presentation_, 6); !rep.satisfied) {
    throw std::invalid_argument("dehn backend requires a C'(1/6) presentation: " + rep.witness);
  }
  if (options_.ball_radius < 0) {
    throw std::invalid_argument("dehn backend: negative ball radius");
  }
  if (source_.empty()) {
    source_ = "<inline>";
  }
  max_ball_size_ = options_.max_ball_size;
  alphabet_ = presentation_.alphabet();
  rstar_ = symmetrize(presentation_);
  by_first_letter_.assign(alphabet_.size(), {});
  for (std::size_t i = 0; i < rstar_.size(); ++i) {
    by_first_letter_[id(rstar_[i].word.front())].push_back(i);
    longest_relator_ = std::max(longest_relator_, rstar_[i].word.size());
  }

  // Nullspace of the relator exponent-sum matrix over Q, scaled to integers.
  const std::size_t ngen = presentation_.generators.size();
  std::vector<std::vector<Rational>> rows;
  even_relators_ = true;
  for (const auto& r : presentation_.relator_words()) {
    std::vector<Rational> row(ngen, Rational(0));
    for (Letter l : r) {
      row[id(l) / 2] += (id(l) % 2 == 0) ? 1 : -1;
    }
    rows.push_back(std::move(row));
    even_relators_ = even_relators_ && r.size() % 2 == 0;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ngen && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == Rational(0)) {
      ++piv;
    }
    if (piv == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[piv]);
    const Rational lead = rows[rank][c];
    for (auto& x : rows[rank]) {
      x /= lead;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != Rational(0)) {
        const Rational f = rows[r][c];
        for (std::size_t k = 0; k < ngen; ++k) {
          rows[r][k] -= f * rows[rank][k];
        }
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t c = 0; c < ngen; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) {
      continue;
    }
    std::vector<Rational> v(ngen, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = -rows[r][c];
    }
    std::int64_t scale = 1;
    for (const auto& x : v) {
      scale = std::lcm(scale, x.denominator());
    }
    std::vector<std::int64_t> iv;
    for (const auto& x : v) {
      iv.push_back(x.numerator() * (scale / x.denominator()));
    }
    functionals_.push_back(std::move(iv));
  }

  build_ball();
}

Word DehnGroup::free_reduce(const Word& w) const { return free_reduce_pairs(w); }

std::optional<Word> DehnGroup::dehn_reduce(const Word& input) const {
  alphabet_.validate(input);
  Word w = free_reduce(input);
  std::size_t steps = 0;
  for (;;) {
    bool replaced = false;
    for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
      for (std::size_t e : by_first_letter_[id(w[i])]) {
        const Word& r = rstar_[e].word;
        const std::size_t n = common_prefix(w, i, r);
        steps += n + 1;
        if (2 * n > r.size()) {
          // r = u v with u = w[i, i+n); u equals v⁻¹ in G and v⁻¹ is shorter.
          Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          for (std::size_t k = r.size(); k > n; --k) {
            next.push_back(alphabet_.inverse(r[k - 1]));
          }
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + n), w.end());
          w = free_reduce(next);
          replaced = true;
          break;
        }
      }
      if (steps > options_.step_budget) {
        return std::nullopt;
      }
    }
    if (!replaced) {
      return w;
    }
  }
}

bool DehnGroup::periodic_word_is_dehn_reduced(const Word& w) const {
  alphabet_.validate(w);
  if (w.empty()) {
    return false;
  }
  if (free_reduce(w).size() != w.size() || (id(w.front()) ^ 1u) == id(w.back())) {
    throw std::invalid_argument("periodic word must be cyclically reduced");
  }
  Word window;
  const std::size_t copies = longest_relator_ / w.size() + 2;
  for (std::size_t k = 0; k < copies; ++k) {
    window.insert(window.end(), w.begin(), w.end());
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t e : by_first_letter_[id(window[i])]) {
      const Word& r = rstar_[e].word;
      if (2 * common_prefix(window, i, r) > r.size()) {
        return false;
      }
    }
  }
  return true;
}

std::size_t DehnGroup::invariant_hash(const Word& w) const {
  std::vector<std::int64_t> exps(presentation_.generators.size(), 0);
  for (Letter l : w) {
    exps[id(l) / 2] += (id(l) % 2 == 0) ? 1 : -1;
  }
  std::size_t h = even_relators_ ? (w.size() % 2) : 0;
  for (const auto& f : functionals_) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      v += f[k] * exps[k];
    }
    h = h * 1'000'003u + std::hash<std::int64_t>{}(v);
  }
  return h;
}

std::optional<std::size_t> DehnGroup::lookup(const Word& reduced) const {
  if (auto it = canonical_index_.find(reduced); it != canonical_index_.end()) {
    return it->second;
  }
  const auto [lo, hi] = buckets_.equal_range(invariant_hash(reduced));
  for (auto it = lo; it != hi; ++it) {
    const Word& cand = ball_[it->second].element.word;
    // A Dehn-reduced word of length n cannot equal an element of length > n.
    if (cand.size() > reduced.size()) {
      continue;
    }
    Word q = reduced;
    const Word inv = alphabet_.inverse(cand);
    q.insert(q.end(), inv.begin(), inv.end());
    const auto red = dehn_reduce(q);
    if (!red) {
      throw UndecidedError("dehn: step budget exhausted during ball lookup");
    }
    if (red->empty()) {
      return it->second;
    }
  }
  return std::nullopt;
}

void DehnGroup::build_ball() {
  ball_.push_back({identity(), 0});
  buckets_.emplace(invariant_hash({}), 0);
  canonical_index_.emplace(Word{}, 0);
  std::size_t sphere_begin = 0;
  explored_radius_ = 0;
  for (int d = 0; d < options_.ball_radius; ++d) {
    const std::size_t sphere_end = ball_.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        Word w = ball_[i].element.word;
        w.push_back(letter(l));
        const auto red = dehn_reduce(w);
        if (!red) {
          throw UndecidedError("dehn: step budget exhausted while building the ball");
        }
        // A shorter reduced form means the element lies in the ball already.
        if (red->size() <= static_cast<std::size_t>(d) || lookup(*red)) {
          continue;
        }
        if (ball_.size() >= options_.max_ball_size) {
          ball_.resize(sphere_end);
          for (auto it = buckets_.begin(); it != buckets_.end();) {
            it = it->second >= sphere_end ? buckets_.erase(it) : std::next(it);
          }
          for (auto it = canonical_index_.begin(); it != canonical_index_.end();) {
            it = it->second >= sphere_end ? canonical_index_.erase(it) : std::next(it);
          }
          return;
        }
        const std::size_t idx = ball_.size();
        buckets_.emplace(invariant_hash(w), idx);
        canonical_index_.emplace(w, idx);
        ball_.push_back({{std::move(w), FormStatus::canonical}, d + 1});
      }
    }
    sphere_begin = sphere_end;
    explored_radius_ = d + 1;
  }
}

GroupElement DehnGroup::normal_form(const Word& w) const {
  const auto red = dehn_reduce(w);
  if (!red) {
    return {w, FormStatus::undecided};
  }
  try {
    if (const auto idx = lookup(*red)) {
      return ball_[*idx].element;
    }
  } catch (const UndecidedError&) {
    return {*red, FormStatus::undecided};
  }
  return {*red, FormStatus::reduced};
}

LengthResult DehnGroup::length(const GroupElement& g) const {
  if (g.status == FormStatus::canonical) {
    if (const auto it = canonical_index_.find(g.word); it != canonical_index_.end()) {
      return {ball_[it->second].distance, Certificate::exact};
    }
    return length(normal_form(g.word));
  }
  if (g.status == FormStatus::reduced) {
    return {explored_radius_ + 1, Certificate::lower_bound};
  }
  return {0, Certificate::lower_bound};
}

Equality DehnGroup::compare(const GroupElement& g, const GroupElement& h) const {
  if (g.status == FormStatus::undecided || h.status == FormStatus::undecided) {
    // The forms may still be decidable from scratch.
    const auto red = dehn_reduce([&] {
      Word q = g.word;
      const Word inv = alphabet_.inverse(h.word);
      q.insert(q.end(), inv.begin(), inv.end());
      return q;
    }());
    if (!red) {
      return Equality::undecided;
    }
    return red->empty() ? Equality::equal : Equality::distinct;
  }
  if (g.status == FormStatus::canonical && h.status == FormStatus::canonical) {
    return g.word == h.word ? Equality::equal : Equality::distinct;
  }
  if (g.status != h.status) {
    // Canonical forms live in the ball and reduced ones outside it.
    return Equality::distinct;
  }
  Word q = g.word;
  const Word inv = alphabet_.inverse(h.word);
  q.insert(q.end(), inv.begin(), inv.end());
  const auto red = dehn_reduce(q);
  if (!red) {
    return Equality::undecided;
  }
  return red->empty() ? Equality::equal : Equality::distinct;
}

std::vector<BallEntry> DehnGroup::ball(int radius) const {
  if (radius < 0) {
    throw std::invalid_argument("ball: negative radius");
  }
  if (radius > explored_radius_) {
    throw BudgetExceeded("dehn: ball of radius " + std::to_string(radius) + " exceeds the explored radius " +
                             std::to_string(explored_radius_),
                         explored_radius_);
  }
  std::vector<BallEntry> out;
  for (const auto& e : ball_) {
    if (e.distance > radius) {
      break;
    }
    out.push_back(e);
  }
  return out;
}

std::optional<Word> DehnGroup::geodesic(const GroupElement& g) const {
  if (g.status != FormStatus::canonical) {
    return std::nullopt;
  }
  if (canonical_index_.count(g.word) == 0) {
    return std::nullopt;
  }
  return g.word;
}

}  // namespace ahp
