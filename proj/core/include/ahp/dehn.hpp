#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ahp/group.hpp"

namespace ahp {

/// Finite presentation on lowercase generators; uppercase letters denote
/// inverses.
///
/// Text format:
///   gens: a,b,c,d
///   rel: abABcdCD
/// Blank lines and lines starting with '#' are ignored.
struct Presentation {
  std::vector<char> generators;
  std::vector<std::string> relators;

  /// Validates generators and relators (nonempty, cyclically reduced, over
  /// the declared generators).
  static Presentation make(std::vector<char> generators, std::vector<std::string> relators);
  static Presentation parse(std::string_view text);
  static Presentation load(const std::filesystem::path& path);

  Alphabet alphabet() const;
  std::vector<Word> relator_words() const;
};

/// One element of the symmetrized closure R*: a cyclic permutation of a
/// relator or of its inverse.
struct SymmetrizedRelator {
  Word word;
  std::size_t relator = 0;
  std::size_t rotation = 0;
  bool inverted = false;
};

std::vector<SymmetrizedRelator> symmetrize(const Presentation& p);

struct PieceReport {
  bool satisfied = true;
  std::size_t longest_piece = 0;
  /// The first offending pair, when unsatisfied.
  std::string witness;
};

/// C'(1/λ): every piece u (common prefix of two distinct elements of R*)
/// satisfies λ·|u| < |r| for every r in R* beginning with u.
PieceReport small_cancellation_report(const Presentation& p, int lambda_denominator);
bool verify_small_cancellation(const Presentation& p, int lambda_denominator);

struct DehnOptions {
  /// Radius of the Cayley ball explored at construction; lengths beyond it
  /// are reported as lower bounds.
  int ball_radius = 4;
  std::size_t max_ball_size = 500'000;
  /// Total letter comparisons allowed for one run of Dehn's algorithm.
  std::size_t step_budget = 20'000'000;
};

/// A C'(1/6) group.  The word problem is solved exactly by Dehn's
/// algorithm; geodesic lengths come from an exhaustive ball built at
/// construction.  Elements of the ball carry their ShortLex-least geodesic
/// as canonical form; other elements carry a Dehn-reduced word.
class DehnGroup final : public Group {
 public:
  explicit DehnGroup(Presentation p, DehnOptions options = {}, std::string source = {});

  BackendKind kind() const override { return BackendKind::dehn; }
  std::string descriptor() const override { return "dehn:" + source_; }
  const Alphabet& alphabet() const override { return alphabet_; }

  GroupElement normal_form(const Word& w) const override;
  LengthResult length(const GroupElement& g) const override;
  Equality compare(const GroupElement& g, const GroupElement& h) const override;
  std::vector<BallEntry> ball(int radius) const override;
  std::optional<Word> geodesic(const GroupElement& g) const override;
  bool unique_normal_forms() const override { return false; }

  /// Dehn's algorithm; nullopt when the step budget runs out.
  std::optional<Word> dehn_reduce(const Word& w) const;

  /// True iff no subword of the bi-infinite word ...www... is more than half
  /// of a relator in R* (w must be cyclically reduced).
  bool periodic_word_is_dehn_reduced(const Word& w) const;

  int explored_radius() const { return explored_radius_; }
  const Presentation& presentation() const { return presentation_; }
  const std::vector<SymmetrizedRelator>& symmetrized() const { return rstar_; }

 private:
  Word free_reduce(const Word& w) const;
  std::size_t invariant_hash(const Word& w) const;
  std::optional<std::size_t> lookup(const Word& reduced) const;
  void build_ball();

  Presentation presentation_;
  DehnOptions options_;
  std::string source_;
  Alphabet alphabet_;
  std::vector<SymmetrizedRelator> rstar_;
  std::vector<std::vector<std::size_t>> by_first_letter_;
  std::size_t longest_relator_ = 0;
  /// Integer functionals on exponent-sum vectors that vanish on every
  /// relator: abelianization invariants used to bucket the ball.
  std::vector<std::vector<std::int64_t>> functionals_;
  bool even_relators_ = false;

  std::vector<BallEntry> ball_;
  std::unordered_multimap<std::size_t, std::size_t> buckets_;
  std::unordered_map<Word, std::size_t, WordHash> canonical_index_;
  int explored_radius_ = 0;
};

}  // namespace ahp
