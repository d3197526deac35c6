#pragma once

// Exact periodicity algorithms on words of a free monoid.
//
// A period is identified by its length p: z has period length p iff
// z[i] == z[i + p] for every valid i.  The period word is the prefix of
// length p.  The full length |z| always counts as a period length.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ahp::words {

using MonoidWord = std::string;

class PeriodicityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure function: entry i is the length of the longest proper border of
/// z[0..i].
std::vector<std::size_t> border_array(std::string_view z);

/// All period lengths of z in ascending order (|z| included).
std::vector<std::size_t> period_lengths(std::string_view z);

bool has_period(std::string_view z, std::size_t p);

/// The common root guaranteed when z has period lengths p and q and
/// |z| >= p + q: returns the prefix of length gcd(p, q).
MonoidWord fine_wilf_root(std::string_view z, std::size_t p, std::size_t q);

struct PrimitiveRoot {
  MonoidWord root;
  std::size_t exponent = 0;
};

/// w == root^exponent with exponent maximal.
PrimitiveRoot primitive_root(std::string_view w);

MonoidWord power(std::string_view w, std::size_t n);

}  // namespace ahp::words
