#pragma once

#include <array>

#include "ahp/path.hpp"
#include "ahp/random.hpp"

namespace ahp {

class FourGonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Four paths p1 p2 p3 p4 with (p_i)₊ = (p_{i+1})₋ cyclically.  p1 is the
/// left side, p2 the top, p3 the right side read downwards and p4 the bottom
/// read leftwards.
struct FourGon {
  std::array<PathInGraph, 4> sides;
};

/// Builds the 4-gon starting at `start` whose sides carry the given labels.
/// Throws FourGonError if the labels do not close up.
FourGon make_fourgon(const Group& g, const GroupElement& start, const std::array<Word, 4>& labels);

/// Throws FourGonError if some side is not a valid path or the loop is not
/// closed.
void validate(const Group& g, const FourGon& P);

struct SideElements {
  GroupElement left;
  GroupElement top;
  GroupElement right;
  GroupElement bottom;
};

/// L = [p1], T = [p2], R = [p3]⁻¹, B = [p4]⁻¹.
SideElements side_elements(const Group& g, const FourGon& P);

/// The unique g with g·(q2)₋ = (p2)₋; requires label(p2) == label(q2).
GroupElement translation_element(const Group& g, const FourGon& P, const FourGon& Q);

/// P∘Q = (p1·r̄1)·r̄4·(r̄3·p3)·p4 with r_i = g·q_i, g = translation_element(P, Q).
FourGon compose(const Group& g, const FourGon& P, const FourGon& Q);

struct ComposablePair {
  FourGon P;
  FourGon Q;
};

/// Two random 4-gons with a common random top label.  Left, top and right
/// sides are random words of length <= max_side; the bottom spells the
/// geodesic of the element closing the loop.  Start vertices are random
/// words of length <= max_start.
ComposablePair random_composable_pair(const Group& g, Rng& rng, std::size_t max_side, std::size_t max_start);

}  // namespace ahp
