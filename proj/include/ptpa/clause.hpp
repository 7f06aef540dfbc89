#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <ptpa/varset.hpp>

namespace ptpa {

/// Disjunction of literals, split by polarity.
struct clause
{
  var_set positives;
  var_set negatives;

  /// Throws tautology_error when a variable occurs with both polarities.
  static clause make( var_set positives, var_set negatives );
  /// DIMACS-style signed literals; duplicates are merged. Throws
  /// tautology_error (with `line`) for x ∨ ¬x and std::out_of_range for 0.
  static clause from_literals( std::span<int const> literals, std::size_t line = 0 );

  bool empty() const { return positives.empty() && negatives.empty(); }
  std::size_t width() const { return positives.size() + negatives.size(); }
  var_set variables() const { return positives | negatives; }
  /// Ascending by variable: -1 2 -4 ...
  std::vector<int> literals() const;

  bool operator==( clause const& ) const = default;
};

/// "(x1 | ~x2)"; the empty clause prints as "()".
std::string to_string( clause const& c );

} // namespace ptpa
