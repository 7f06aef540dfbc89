#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <ptpa/anf.hpp>
#include <ptpa/limits.hpp>
#include <ptpa/varset.hpp>

namespace ptpa {

/// An atomic expression: one of the constants 0 and 1, or a power term S.P_U.
///
/// S.P_U denotes the monomial family { S ∪ T | T ⊆ U, T ≠ ∅ } (just { S }
/// when U = ∅). A term always satisfies
///   - S ∩ U = ∅,
///   - |U| ≠ 1,
///   - (S, U) ≠ (∅, ∅), that shape being the constant 0.
/// The constants carry no sets.
class atomic_term
{
public:
  enum class kind_type
  {
    zero,
    one,
    term
  };

  static atomic_term zero() { return atomic_term( kind_type::zero, {}, {} ); }
  static atomic_term one() { return atomic_term( kind_type::one, {}, {} ); }
  /// Validating constructor; throws overlap_error, singleton_power_error or
  /// empty_term_error.
  static atomic_term make( var_set base, var_set power );

  kind_type kind() const { return kind_; }
  bool is_zero() const { return kind_ == kind_type::zero; }
  bool is_one() const { return kind_ == kind_type::one; }
  bool is_term() const { return kind_ == kind_type::term; }

  var_set const& base() const { return base_; }
  var_set const& power() const { return power_; }
  /// |U| for terms, 0 for the constants.
  std::size_t degree() const { return power_.size(); }

  bool operator==( atomic_term const& ) const = default;

private:
  atomic_term( kind_type k, var_set base, var_set power )
      : kind_( k ), base_( std::move( base ) ), power_( std::move( power ) )
  {
  }

  kind_type kind_;
  var_set base_;
  var_set power_;
};

/// Canonical order: 0 < 1 < terms, terms by (base, power) lexicographically.
std::strong_ordering compare( atomic_term const& a, atomic_term const& b );

struct term_less
{
  bool operator()( atomic_term const& a, atomic_term const& b ) const { return compare( a, b ) < 0; }
};

atomic_term mk_power_term( var_set base, var_set power );

std::size_t degree( atomic_term const& t );

/// The monomials denoted by t in graded order. Throws domain_too_large when
/// |U| exceeds `lim.max_power_size`.
std::vector<monomial> enumerate_monomials( atomic_term const& t, limits const& lim = default_limits() );

/// Power term polynomial: a ⊎-sum of atomic terms.
///
/// Stored normalized: sorted by `compare`, each term at most once (t ⊎ t
/// cancels), never containing the constant 0. The empty set is the zero
/// polynomial.
class pt_poly
{
public:
  pt_poly() = default;
  pt_poly( std::initializer_list<atomic_term> terms );
  /// ⊎-sum of the given terms; duplicates cancel in pairs, 0 is dropped.
  static pt_poly from_terms( std::vector<atomic_term> terms );

  std::vector<atomic_term> const& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool contains( atomic_term const& t ) const;

  pt_poly& operator+=( pt_poly const& o );
  pt_poly& operator+=( atomic_term const& t );
  friend pt_poly operator+( pt_poly a, pt_poly const& b ) { return a += b; }

  bool operator==( pt_poly const& ) const = default;

private:
  std::vector<atomic_term> terms_;
};

pt_poly ptpoly_add( pt_poly const& a, pt_poly const& b );

/// Number of atomic terms in the written form; the zero polynomial is
/// written as the single constant 0 and so has size 1.
std::size_t ptpoly_size( pt_poly const& p );

bool_poly eval_ptpoly( pt_poly const& p, limits const& lim = default_limits() );

/// ⊙-product of a nonempty, ordered list of factors.
class expr
{
public:
  explicit expr( std::vector<pt_poly> factors );
  std::vector<pt_poly> const& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  bool operator==( expr const& ) const = default;

private:
  std::vector<pt_poly> factors_;
};

bool_poly eval_expr( expr const& e, limits const& lim = default_limits() );

/* text form:
 *   term       := "0" | "1" | "S{" idlist "}.P{" idlist "}"
 *   polynomial := term (" (+) " term)*
 *   expression := "(" polynomial ")" (" (*) (" polynomial ")")*
 * Output is canonical, input is whitespace-insensitive. */
std::string to_string( atomic_term const& t );
std::string to_string( pt_poly const& p );
std::string to_string( expr const& e );

atomic_term parse_term( std::string_view text );
pt_poly parse_ptpoly( std::string_view text );
expr parse_expr( std::string_view text );

/// "{1,2}" style set as used inside the term syntax.
var_set parse_idlist( std::string_view text );

} // namespace ptpa
