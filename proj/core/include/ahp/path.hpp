#pragma once

#include <optional>
#include <vector>

#include "ahp/group.hpp"

namespace ahp {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite edge path in the Cayley graph.  vertices.size() == label.size() + 1
/// and vertices[i + 1] = vertices[i] · label[i].
///
/// For periodic paths, phase_indices lists the phase vertices and
/// period_element is the element carrying each phase vertex to the next.
struct PathInGraph {
  std::vector<GroupElement> vertices;
  Word label;
  std::optional<std::vector<std::size_t>> phase_indices;
  std::optional<GroupElement> period_element;

  std::size_t length() const { return label.size(); }
  const GroupElement& start() const { return vertices.front(); }
  const GroupElement& end() const { return vertices.back(); }
  std::size_t periods() const { return phase_indices && !phase_indices->empty() ? phase_indices->size() - 1 : 0; }
};

PathInGraph make_path(const Group& g, const GroupElement& start, const Word& label);

/// The subpath between vertex indices from <= to; phase data is kept for
/// the phase vertices that fall inside.
PathInGraph subpath(const PathInGraph& p, std::size_t from, std::size_t to);

/// Same point set traversed backwards (label inverted).
PathInGraph reversed(const Group& g, const PathInGraph& p);

/// Left translate by h: every vertex v becomes h · v; the label is unchanged.
PathInGraph translated(const Group& g, const GroupElement& h, const PathInGraph& p);

/// p followed by q; requires p₊ = q₋.  Phase data is dropped.
PathInGraph concat(const Group& g, const PathInGraph& p, const PathInGraph& q);

/// The element spelled by the label.
GroupElement label_element(const Group& g, const PathInGraph& p);

/// Throws GeometryError if the path or its phase data is inconsistent.
void validate(const Group& g, const PathInGraph& p);

}  // namespace ahp
