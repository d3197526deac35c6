#include "ahp/path.hpp"

#include <algorithm>

namespace ahp {

PathInGraph make_path(const Group& g, const GroupElement& start, const Word& label) {
  g.alphabet().validate(label);
  PathInGraph p;
  p.label = label;
  p.vertices.reserve(label.size() + 1);
  p.vertices.push_back(start);
  for (Letter l : label) {
    p.vertices.push_back(g.multiply(p.vertices.back(), l));
  }
  return p;
}

PathInGraph subpath(const PathInGraph& p, std::size_t from, std::size_t to) {
  if (from > to || to >= p.vertices.size()) {
    throw std::out_of_range("subpath: bad vertex range");
  }
  PathInGraph q;
  q.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(from),
                    p.vertices.begin() + static_cast<std::ptrdiff_t>(to + 1));
  q.label.assign(p.label.begin() + static_cast<std::ptrdiff_t>(from), p.label.begin() + static_cast<std::ptrdiff_t>(to));
  if (p.phase_indices) {
    std::vector<std::size_t> phases;
    for (std::size_t i : *p.phase_indices) {
      if (i >= from && i <= to) {
        phases.push_back(i - from);
      }
    }
    q.phase_indices = std::move(phases);
    q.period_element = p.period_element;
  }
  return q;
}

PathInGraph reversed(const Group& g, const PathInGraph& p) {
  PathInGraph q;
  q.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
  q.label = g.alphabet().inverse(p.label);
  if (p.phase_indices) {
    std::vector<std::size_t> phases;
    for (auto it = p.phase_indices->rbegin(); it != p.phase_indices->rend(); ++it) {
      phases.push_back(p.length() - *it);
    }
    q.phase_indices = std::move(phases);
    if (p.period_element) {
      q.period_element = g.inverse(*p.period_element);
    }
  }
  return q;
}

PathInGraph translated(const Group& g, const GroupElement& h, const PathInGraph& p) {
  PathInGraph q = p;
  for (auto& v : q.vertices) {
    v = g.multiply(h, v);
  }
  return q;
}

PathInGraph concat(const Group& g, const PathInGraph& p, const PathInGraph& q) {
  if (!g.equal(p.end(), q.start())) {
    throw GeometryError("concat: paths do not meet");
  }
  PathInGraph out;
  out.vertices = p.vertices;
  out.vertices.insert(out.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  out.label = p.label;
  out.label.insert(out.label.end(), q.label.begin(), q.label.end());
  return out;
}

GroupElement label_element(const Group& g, const PathInGraph& p) { return g.normal_form(p.label); }

void validate(const Group& g, const PathInGraph& p) {
  if (p.vertices.size() != p.label.size() + 1) {
    throw GeometryError("path: vertex count does not match label length");
  }
  for (std::size_t i = 0; i < p.label.size(); ++i) {
    if (!g.equal(g.multiply(p.vertices[i], p.label[i]), p.vertices[i + 1])) {
      throw GeometryError("path: edge " + std::to_string(i) + " does not match its label");
    }
  }
  if (!p.phase_indices) {
    return;
  }
  const auto& ph = *p.phase_indices;
  for (std::size_t i = 0; i < ph.size(); ++i) {
    if (ph[i] >= p.vertices.size() || (i > 0 && ph[i] <= ph[i - 1])) {
      throw GeometryError("path: phase indices must be increasing and in range");
    }
  }
  if (ph.size() < 2) {
    return;
  }
  const std::size_t seg = ph[1] - ph[0];
  const Word first(p.label.begin() + static_cast<std::ptrdiff_t>(ph[0]),
                   p.label.begin() + static_cast<std::ptrdiff_t>(ph[1]));
  for (std::size_t i = 1; i + 1 < ph.size(); ++i) {
    if (ph[i + 1] - ph[i] != seg ||
        !std::equal(first.begin(), first.end(), p.label.begin() + static_cast<std::ptrdiff_t>(ph[i]))) {
      throw GeometryError("path: period segments carry different labels");
    }
  }
  if (p.period_element) {
    for (std::size_t i = 0; i + 1 < ph.size(); ++i) {
      if (!g.equal(g.multiply(p.vertices[ph[i]], *p.period_element), p.vertices[ph[i + 1]])) {
        throw GeometryError("path: phase vertices are not related by the period element");
      }
    }
  }
}

}  // namespace ahp
