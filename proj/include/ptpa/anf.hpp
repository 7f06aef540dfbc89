#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <ptpa/limits.hpp>
#include <ptpa/varset.hpp>

namespace ptpa {

/// Product of the member variables; the empty set is the constant monomial 1.
using monomial = var_set;

/// Boolean polynomial in canonical ANF.
///
/// Coefficients live in GF(2), so a polynomial is just the set of monomials
/// with coefficient 1. Monomials are stored sorted by `compare_graded`
/// (constant first, then by degree, then lexicographically), which is also
/// the printed order.
class bool_poly
{
public:
  bool_poly() = default;

  static bool_poly zero() { return {}; }
  static bool_poly one();
  static bool_poly variable( var_id v );
  static bool_poly from_monomial( monomial m );
  /// GF(2) sum of the given monomials: repeated monomials cancel in pairs.
  static bool_poly from_monomials( std::vector<monomial> ms );

  std::vector<monomial> const& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const { return monomials_.size() == 1 && monomials_.front().empty(); }
  bool contains( monomial const& m ) const;
  /// Union of all variables that occur.
  var_set support() const;
  /// Largest variable index that occurs, 0 for constants.
  var_id max_var() const;
  std::size_t degree() const;

  bool_poly& operator+=( bool_poly const& o );
  friend bool_poly operator+( bool_poly a, bool_poly const& b ) { return a += b; }
  friend bool_poly operator*( bool_poly const& a, bool_poly const& b );

  bool operator==( bool_poly const& ) const = default;

private:
  std::vector<monomial> monomials_;
};

/// Values of x_1..x_n.
struct assignment
{
  std::vector<std::uint8_t> values;

  /// Assignment number `index` of n variables: x_1 is the least significant bit.
  static assignment from_index( std::uint64_t index, std::size_t n );
  std::size_t size() const { return values.size(); }
};

/// Truth table of an n-variable function. Row i holds f(a) for the
/// assignment a whose x_1 is bit 0 of i, x_2 bit 1, and so on, i.e. rows are
/// ordered f(0,0), f(1,0), f(0,1), f(1,1) for n = 2.
struct truth_table
{
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;

  truth_table() = default;
  truth_table( std::size_t vars, std::vector<std::uint8_t> values );
  static truth_table constant( std::size_t vars, bool value );

  std::size_t rows() const { return bits.size(); }
  bool operator==( truth_table const& ) const = default;
};

bool_poly poly_add( bool_poly const& a, bool_poly const& b );

/// GF(2) product with x_i^2 = x_i. Throws cap_exceeded when the result or an
/// intermediate accumulator exceeds `lim.max_monomials`.
bool_poly poly_mul( bool_poly const& a, bool_poly const& b, limits const& lim = default_limits() );

/// Throws domain_mismatch when p mentions a variable beyond the assignment.
bool poly_eval( bool_poly const& p, assignment const& a );

/// Evaluates p on every assignment of x_1..x_n. Throws domain_too_large for
/// n above the oracle cap and domain_mismatch when p has variables above n.
truth_table to_truth_table( bool_poly const& p, std::size_t n, limits const& lim = default_limits() );

/// Coefficient vector of p laid out like a truth table: row i holds the
/// coefficient of the monomial whose members are the set bits of i.
truth_table coefficient_table( bool_poly const& p, std::size_t n, limits const& lim = default_limits() );

/// Moebius transform over GF(2): truth table to ANF.
bool_poly mobius( truth_table const& t, limits const& lim = default_limits() );

/// Inverse direction expressed as a table transform (the butterfly is its own
/// inverse): returns the transformed table without building a polynomial.
truth_table mobius_table( truth_table const& t, limits const& lim = default_limits() );

/// ANF equality. With `cross_check` the truth tables over n variables are
/// compared as well and a disagreement between the two routes throws.
bool semantically_equal( bool_poly const& a, bool_poly const& b, std::size_t n, bool cross_check = false,
                         limits const& lim = default_limits() );

/// "x1 + x2 + x1*x2"; the zero polynomial prints as "0".
std::string to_string( bool_poly const& p );

/// Inverse of `to_string`, whitespace-insensitive. Repeated monomials cancel.
/// Also accepts a lone "0".
bool_poly parse_anf( std::string_view text );

} // namespace ptpa
