#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahp/constants.hpp"
#include "ahp/geometry.hpp"
#include "ahp/group.hpp"

namespace ahp {

/// Witness search bounds.  They are experiment parameters: the theorem
/// asserts existence only.
struct SearchBounds {
  std::int64_t max_exponent = 8;
  int conjugator_bound = 4;
  /// Cap on the number of periods materialized for any line window.
  std::int64_t max_window = 4096;
};

struct TheoremInstance {
  GroupElement a;
  GroupElement b;
  GroupElement x;
  GroupElement y;
  std::int64_t r = 0;
  SearchBounds bounds;
};

enum class HypothesisStatus { satisfied, failed, conditional };

std::string_view to_string(HypothesisStatus s);

using NamedValues = std::vector<std::pair<std::string, std::string>>;

/// Outcome of a harness check.  Hypothesis failures are reported here, not
/// thrown.
struct HarnessReport {
  std::string check;
  HypothesisStatus hypothesis_status = HypothesisStatus::satisfied;
  std::string failed_hypothesis;
  bool witness_found = false;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> n;
  std::string certificate;
  NamedValues constants_used;
  NamedValues details;
  std::vector<std::string> notes;

  bool hypothesis_failed() const { return hypothesis_status == HypothesisStatus::failed; }
};

/// Lines p = L(x_P, b) and q = L(x_Q, b), `window` periods each from the
/// base point.  Searches n in [1, max_exponent] with (A⁻¹B)·bⁿ = bⁿ·(A⁻¹B)
/// for B = x_P, A = x_Q.  Without a profile the K(r) comparison is skipped
/// and the verdict is conditional.
HarnessReport lemma41_check(const Group& g, const GroupElement& b, const GroupElement& x_p, const GroupElement& x_q,
                            std::int64_t window, std::int64_t r, const ConstantsProfile* profile,
                            const SearchBounds& bounds = {});

struct WeakOptions {
  /// Number of a-periods on p; defaults to F(r).
  std::optional<std::int64_t> periods;
  /// Compare the period count with F(r) (needs a profile).
  bool require_F = true;
};

/// A subpath p of L(x, a) with the requested number of periods, assumed to
/// lie in the r-neighborhood of L(y, b); searches s, t != 0 with
/// (x⁻¹y)·b^s·(y⁻¹x) = a^t.
HarnessReport weak_theorem_check(const Group& g, const TheoremInstance& inst, const ConstantsProfile* profile,
                                 const WeakOptions& options = {});

struct MainOptions {
  /// Free groups at r = 0: two periods suffice and no trimming is done.
  bool sharp_free = false;
  /// Number of a-periods on p; defaults to ⌈f(r)⌉.
  std::optional<std::int64_t> periods;
};

/// Trims k periods from each end of a ⌈f(r)⌉-period subpath, checks the
/// trimmed path against F(2δ+2μ) and the (2δ+2μ)-neighborhood, then runs the
/// weak check at r' = 2δ + 2μ.
HarnessReport main_theorem_check(const Group& g, const TheoremInstance& inst, const ConstantsProfile* profile,
                                 const MainOptions& options = {});

struct CommensurabilityResult {
  struct Witness {
    GroupElement g;
    std::int64_t s = 0;
    std::int64_t t = 0;
  };
  std::optional<Witness> witness;
  /// "exact: commensurable", "exact: non-commensurable", "verified" or
  /// "not found within bounds".
  std::string label;
  Certificate certificate = Certificate::exact;
};

/// a^s = g⁻¹ b^t g.  Exact on free groups; a bounded search elsewhere.
CommensurabilityResult commensurability_search(const Group& g, const GroupElement& a, const GroupElement& b,
                                               std::int64_t max_exponent, int conjugator_bound);

struct ThresholdResult {
  std::optional<std::int64_t> periods;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> t;
  std::int64_t max_periods = 0;
  std::vector<std::string> notes;
};

/// Smallest m <= max_periods such that the m-period subpath of L(x, a) lies
/// in the r-neighborhood of L(y, b) and the witness search succeeds.
ThresholdResult empirical_period_threshold(const Group& g, const TheoremInstance& inst, std::int64_t max_periods);

}  // namespace ahp
