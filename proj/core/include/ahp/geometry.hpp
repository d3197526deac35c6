#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahp/group.hpp"
#include "ahp/path.hpp"
#include "ahp/rational.hpp"

namespace ahp {

/// ShortLex-least geodesic word for g; throws GeometryError when the length
/// of g is not exactly certified.
Word geodesic_word(const Group& g, const GroupElement& e);

/// The window of L(x, a) through the phase vertices x·aⁿ, n_min <= n <= n_max,
/// every period labeled by geodesic_word(a).
PathInGraph periodic_line(const Group& g, const GroupElement& x, const GroupElement& a, std::int64_t n_min,
                          std::int64_t n_max);

struct QuasiParams {
  Rational kappa{1};
  Rational eps{0};
};

struct QuasiViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t path_length = 0;
  std::int64_t distance = 0;
};

struct QuasiCheck {
  std::vector<QuasiViolation> violations;
  /// Set when some subpath could not be decided because a distance was only
  /// bounded from below.
  bool partial = false;
};

/// Every subpath q must satisfy d(q₋, q₊) >= ℓ(q)/κ - ε.
QuasiCheck quasi_geodesic_check(const Group& g, const PathInGraph& p, const QuasiParams& params);

/// True iff every subpath of length <= k is geodesic.  Returns nullopt when
/// some distance is not exactly certified.
std::optional<bool> is_local_geodesic(const Group& g, const PathInGraph& p, std::size_t k);

/// A point of the metric graph: a vertex (a == b) or the midpoint of the
/// edge {a, b}.
struct GraphPoint {
  GroupElement a;
  GroupElement b;
  bool midpoint = false;
};

/// Vertices and edge midpoints of p in order.
std::vector<GraphPoint> path_points(const PathInGraph& p);

/// Max over points of side i of the distance to the union of the other
/// sides, maximized over i.  Distances are measured at half-integer
/// resolution (vertices and edge midpoints).
Rational polygon_slimness(const Group& g, const std::vector<PathInGraph>& sides);

struct DeltaEstimate {
  Rational delta{0};
  Certificate certificate = Certificate::lower_bound;
  int radius = 0;
  std::size_t triangles = 0;
  std::size_t skipped = 0;
  bool sampled = false;
};

struct DeltaOptions {
  /// Above this many vertex pairs the triangles are sampled.
  std::size_t max_triangles = 4000;
  std::uint64_t seed = 1;
};

/// Largest slimness over geodesic triangles (1, g, h) with g, h in
/// ball(radius).  A lower bound for the hyperbolicity constant.
DeltaEstimate estimate_delta(const Group& g, int radius, const DeltaOptions& options = {});

struct StableNorm {
  Rational value{0};
  Certificate certificate = Certificate::upper_bound;
  std::int64_t attained_at = 1;
};

/// min over 1 <= n <= n_max of |gⁿ|/n, an upper bound for the stable norm.
StableNorm stable_norm_estimate(const Group& g, const GroupElement& e, std::int64_t n_max);

/// The exact stable norm where a closed form exists (free groups and free
/// products: the length of the cyclic core, or 0 for elliptic elements).
std::optional<Rational> stable_norm_exact(const Group& g, const GroupElement& e);

enum class ElementKind { elliptic, loxodromic, undecided };

std::string_view to_string(ElementKind k);

struct Classification {
  ElementKind kind = ElementKind::undecided;
  /// Order of a torsion element when found.
  std::optional<std::int64_t> order;
  std::string reason;
};

Classification classify_element(const Group& g, const GroupElement& e, std::int64_t n_max);

struct ShortestConjugate {
  GroupElement element;     // h⁻¹ g h
  GroupElement conjugator;  // h
  Certificate certificate = Certificate::exact;
};

/// A shortest element of the conjugacy class of e, ShortLex-least among the
/// cyclic permutations of its core.  Exact for free groups and free
/// products; brute force over ball(conjugator_bound) otherwise.
ShortestConjugate shortest_conjugate(const Group& g, const GroupElement& e, int conjugator_bound);

struct InjectivityEstimate {
  Rational value{0};
  Certificate certificate = Certificate::upper_bound;
  GroupElement witness;
  int length_bound = 0;
  std::int64_t n_max = 0;
  std::size_t scanned = 0;
};

/// Minimum stable norm over loxodromic conjugacy-shortest elements of
/// ball(length_bound).
InjectivityEstimate injectivity_radius_estimate(const Group& g, int length_bound, std::int64_t n_max);

struct AcylindricityProfile {
  int eps = 0;
  int radius = 0;
  std::int64_t R = 0;
  std::int64_t N = 0;
  /// counts[d]: max over |g| = d of #{f : |f| <= eps, |g⁻¹fg| <= eps}.
  std::vector<std::int64_t> counts;
  Certificate certificate = Certificate::observed_on_ball;
};

AcylindricityProfile acylindricity_profile(const Group& g, int eps, int radius);

/// Every vertex of p lies within distance r of some vertex of q.
bool neighborhood_contains(const Group& g, const PathInGraph& p, const PathInGraph& q, std::int64_t r);

/// Vertex-based symmetric Hausdorff distance.
Rational hausdorff_distance(const Group& g, const PathInGraph& p, const PathInGraph& q);

}  // namespace ahp
