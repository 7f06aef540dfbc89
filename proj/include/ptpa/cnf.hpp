#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <ptpa/anf.hpp>
#include <ptpa/clause.hpp>
#include <ptpa/limits.hpp>

namespace ptpa {

/// Conjunction of clauses over x_1..x_n. The empty formula is true.
struct cnf_formula
{
  std::size_t n = 0;
  std::vector<clause> clauses;

  bool operator==( cnf_formula const& ) const = default;
};

/// DIMACS text. Lines starting with 'c' are comments, "p cnf n m" must come
/// before the first literal, clauses end with 0 and may span lines.
/// Duplicate literals are merged. A clause count other than m is not an
/// error; a note is appended to `warnings` when given.
/// Throws malformed_header, literal_out_of_range, unterminated_clause and
/// tautology_error, all carrying the offending line.
cnf_formula parse_dimacs( std::string_view text, std::vector<std::string>* warnings = nullptr );

/// Header plus one line per clause with literals in ascending variable order.
std::string write_dimacs( cnf_formula const& f );

/// Row a is 1 iff a satisfies every clause. Throws domain_too_large above
/// the oracle cap.
truth_table cnf_truth_table( cnf_formula const& f, limits const& lim = default_limits() );

} // namespace ptpa
