#include "ahp/fourgon.hpp"

#include "ahp/geometry.hpp"

namespace ahp {

FourGon make_fourgon(const Group& g, const GroupElement& start, const std::array<Word, 4>& labels) {
  FourGon P;
  GroupElement at = start;
  for (std::size_t i = 0; i < 4; ++i) {
    P.sides[i] = make_path(g, at, labels[i]);
    at = P.sides[i].end();
  }
  if (!g.equal(at, start)) {
    throw FourGonError("four-gon labels do not close up");
  }
  P.sides[3].vertices.back() = start;
  return P;
}

void validate(const Group& g, const FourGon& P) {
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      validate(g, P.sides[i]);
    } catch (const GeometryError& e) {
      throw FourGonError("four-gon side " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!g.equal(P.sides[i].end(), P.sides[(i + 1) % 4].start())) {
      throw FourGonError("four-gon sides " + std::to_string(i + 1) + " and " + std::to_string((i + 1) % 4 + 1) +
                         " do not meet");
    }
  }
  Word loop;
  for (const auto& s : P.sides) {
    loop.insert(loop.end(), s.label.begin(), s.label.end());
  }
  if (!g.is_identity(g.normal_form(loop))) {
    throw FourGonError("four-gon label does not represent the identity");
  }
}

SideElements side_elements(const Group& g, const FourGon& P) {
  return {label_element(g, P.sides[0]), label_element(g, P.sides[1]), g.inverse(label_element(g, P.sides[2])),
          g.inverse(label_element(g, P.sides[3]))};
}

GroupElement translation_element(const Group& g, const FourGon& P, const FourGon& Q) {
  if (P.sides[1].label != Q.sides[1].label) {
    throw FourGonError("tops not label-equal");
  }
  return g.multiply(P.sides[1].start(), g.inverse(Q.sides[1].start()));
}

FourGon compose(const Group& g, const FourGon& P, const FourGon& Q) {
  const GroupElement h = translation_element(g, P, Q);
  std::array<PathInGraph, 4> r;
  for (std::size_t i = 0; i < 4; ++i) {
    r[i] = reversed(g, translated(g, h, Q.sides[i]));
  }
  FourGon S;
  S.sides[0] = concat(g, P.sides[0], r[0]);
  S.sides[1] = r[3];
  S.sides[2] = concat(g, r[2], P.sides[2]);
  S.sides[3] = P.sides[3];
  validate(g, S);
  return S;
}

namespace {

FourGon random_fourgon(const Group& g, Rng& rng, const Word& top, std::size_t max_side, std::size_t max_start) {
  const Alphabet& alpha = g.alphabet();
  const GroupElement start = g.normal_form(random_word(alpha, rng, rng.below(max_start + 1)));
  std::array<Word, 4> labels;
  labels[0] = random_word(alpha, rng, rng.below(max_side + 1));
  labels[1] = top;
  labels[2] = random_word(alpha, rng, rng.below(max_side + 1));
  Word loop = labels[0];
  loop.insert(loop.end(), labels[1].begin(), labels[1].end());
  loop.insert(loop.end(), labels[2].begin(), labels[2].end());
  labels[3] = geodesic_word(g, g.inverse(g.normal_form(loop)));
  return make_fourgon(g, start, labels);
}

}  // namespace

ComposablePair random_composable_pair(const Group& g, Rng& rng, std::size_t max_side, std::size_t max_start) {
  const Word top = random_word(g.alphabet(), rng, rng.below(max_side + 1));
  ComposablePair out;
  out.P = random_fourgon(g, rng, top, max_side, max_start);
  out.Q = random_fourgon(g, rng, top, max_side, max_start);
  return out;
}

}  // namespace ahp
