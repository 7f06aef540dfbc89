#pragma once

#include <cstddef>

namespace ptpa {

/// Resource caps shared by every expanding operation. All of them are
/// desk-scale limits for oracle work; the symbolic layer itself never
/// expands.
struct limits
{
  /// largest |U| for which a power term may be enumerated into monomials
  std::size_t max_power_size = 24;
  /// largest domain for truth tables / Moebius transforms (2^n rows)
  std::size_t oracle_cap = 20;
  /// largest intermediate or final monomial count of a polynomial product
  std::size_t max_monomials = std::size_t{ 1 } << 20;
  /// largest number of positive literals expanded by the direct clause ANF
  std::size_t max_clause_positives = 20;
};

inline limits const& default_limits()
{
  static limits const l{};
  return l;
}

} // namespace ptpa
