#pragma once

#include "ahp/free_group.hpp"
#include "ahp/group.hpp"

namespace ahp {

/// The free group of rank n on a, b, ...; normal form is the reduced word.
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank);

  BackendKind kind() const override { return BackendKind::free; }
  std::string descriptor() const override;
  const Alphabet& alphabet() const override { return alphabet_; }

  GroupElement normal_form(const Word& w) const override;
  LengthResult length(const GroupElement& g) const override;

  int rank() const { return rank_; }

  free::FreeWord to_string(const Word& w) const;
  Word from_string(std::string_view w) const;

 private:
  int rank_;
  Alphabet alphabet_;
};

}  // namespace ahp
