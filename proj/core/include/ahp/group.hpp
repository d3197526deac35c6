#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ahp/alphabet.hpp"

namespace ahp {

enum class BackendKind { free, free_product, dehn };

/// How much a reported number can be trusted.
enum class Certificate {
  exact,
  lower_bound,
  upper_bound,
  observed_on_ball,
  bounded,
};

std::string_view to_string(Certificate c);

/// canonical: the backend's unique normal form.
/// reduced: a correct but possibly non-unique representative (Dehn-reduced
/// word outside the explored ball).
/// undecided: a reduction budget ran out; the word is the unreduced input.
enum class FormStatus { canonical, reduced, undecided };

std::string_view to_string(FormStatus s);

enum class Equality { equal, distinct, undecided };

struct GroupElement {
  Word word;
  FormStatus status = FormStatus::canonical;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct LengthResult {
  std::int64_t value = 0;
  Certificate certificate = Certificate::exact;

  bool exact() const { return certificate == Certificate::exact; }
};

struct BallEntry {
  GroupElement element;
  int distance = 0;
};

/// Thrown when an enumeration would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int largest_completed_radius)
      : std::runtime_error(what), largest_completed_radius_(largest_completed_radius) {}

  int largest_completed_radius() const { return largest_completed_radius_; }

 private:
  int largest_completed_radius_;
};

/// Thrown where a two-valued answer is required but the backend could only
/// answer "undecided".
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A concrete group given by a finite symmetric generating set.  Instances
/// are immutable after construction and safe to share between threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual BackendKind kind() const = 0;
  /// The --backend spelling, e.g. "free:2".
  virtual std::string descriptor() const = 0;
  virtual const Alphabet& alphabet() const = 0;

  virtual GroupElement normal_form(const Word& w) const = 0;
  virtual LengthResult length(const GroupElement& g) const = 0;

  /// Equal / distinct; "undecided" only when a reduction budget runs out.
  virtual Equality compare(const GroupElement& g, const GroupElement& h) const;

  /// Every element at distance <= radius exactly once, ordered by distance
  /// and then ShortLex on the canonical (ShortLex-least geodesic) word.
  virtual std::vector<BallEntry> ball(int radius) const;

  /// ShortLex-least geodesic word, when the length is exactly certified.
  virtual std::optional<Word> geodesic(const GroupElement& g) const;

  /// True when normal_form() is unique for every element, so that words can
  /// be hashed directly.
  virtual bool unique_normal_forms() const { return true; }

  GroupElement parse(std::string_view text) const;
  std::string format(const GroupElement& g) const;
  std::string format(const Word& w) const { return alphabet().format(w); }

  GroupElement identity() const { return {}; }
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement multiply(const GroupElement& g, Letter l) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, std::int64_t n) const;
  /// h⁻¹ · g · h
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;

  /// Throws UndecidedError if the backend cannot decide.
  bool equal(const GroupElement& g, const GroupElement& h) const;
  bool is_identity(const GroupElement& g) const { return equal(g, identity()); }

  /// d(g, h) = |g⁻¹ h|
  LengthResult distance(const GroupElement& g, const GroupElement& h) const;

  std::size_t max_ball_size() const { return max_ball_size_; }
  void set_max_ball_size(std::size_t n) { max_ball_size_ = n; }

 protected:
  std::size_t max_ball_size_ = 4'000'000;
};

}  // namespace ahp
