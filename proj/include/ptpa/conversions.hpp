#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <ptpa/anf.hpp>
#include <ptpa/cnf.hpp>
#include <ptpa/rewrite.hpp>

namespace ptpa {

/* ---- CNF to ANF ---------------------------------------------------------- */

/// 1 + Π(1 + x_i, i positive) · Π(x_j, j negative), expanded. The empty
/// clause gives 0. Throws tautology_error, and cap_exceeded for more than
/// `lim.max_clause_positives` positive literals.
bool_poly clause_anf( clause const& c, limits const& lim = default_limits() );

/// Product of Boolean polynomials kept as its factors.
struct factored_anf
{
  /// variables the factors range over
  std::size_t n = 0;
  std::vector<bool_poly> factors;
  /// original variable -> its twin; empty unless twins were introduced
  std::map<var_id, var_id> twin_map;
};

/// One clause ANF per clause, in clause order.
factored_anf cnf_to_anf_direct( cnf_formula const& f, limits const& lim = default_limits() );

/// Every positive literal x_i becomes ¬x_{n+i}, so each clause factor is
/// 1 + (product of variables). One constraint factor x_i + x_{n+i} follows per
/// twinned variable in ascending order; `all_constraints` emits one for every
/// i in 1..n instead.
factored_anf cnf_to_anf_twin( cnf_formula const& f, bool all_constraints = false );

/// Product of all factors; 1 for no factors.
bool_poly expand( factored_anf const& fa, limits const& lim = default_limits() );

/// Replaces every twin x_{n+i} by 1 + x_i and re-expands.
bool_poly substitute_twins( bool_poly const& p, std::map<var_id, var_id> const& twin_map,
                            limits const& lim = default_limits() );

/* ---- ANF to CNF ---------------------------------------------------------- */

/// One clause per zero row in ascending row order; x_i appears positive
/// where the row has 0 and negated where it has 1.
cnf_formula bool_to_cnf_maxterms( truth_table const& t, limits const& lim = default_limits() );

/// Maxterms of p's truth table over x_1..x_n.
cnf_formula anf_to_cnf_naive( bool_poly const& p, std::size_t n, limits const& lim = default_limits() );

struct aux_definition
{
  enum class kind_type
  {
    product_of,  // aux = Π operands
    xor_chunk    // aux = Σ operands
  };

  var_id aux = 0;
  kind_type kind = kind_type::product_of;
  var_set operands;

  bool operator==( aux_definition const& ) const = default;
};

struct split_result
{
  cnf_formula cnf;
  std::vector<aux_definition> aux;
};

/// Linearize-and-split. Every monomial of degree > 1 gets a product aux
/// (numbered from n+1 in monomial order) with its AND clauses. While more
/// than k linear terms remain, the last max(k-1, 2) are replaced by a fresh
/// xor aux whose defining equation becomes its own chunk. Each chunk is
/// converted by maxterms over its own variables. Clause order: product definitions, xor
/// definitions, then the remaining chunk. n is raised to p's largest
/// variable. Throws std::invalid_argument for k < 2.
split_result anf_to_cnf_split( bool_poly const& p, std::size_t k, std::size_t n = 0 );

/// For every assignment of x_1..x_n, how many assignments of the remaining
/// variables x_{n+1}..x_{f.n} extend it to a model of f. Throws
/// domain_too_large when f.n is above the oracle cap.
std::vector<std::uint32_t> model_projection_counts( cnf_formula const& f, std::size_t n,
                                                    limits const& lim = default_limits() );

/* ---- power term pipeline ------------------------------------------------- */

/// One encode_clause factor per clause; the empty formula gives (1).
expr cnf_to_expr( cnf_formula const& f );

struct ptpa_result
{
  bool_poly anf;
  pt_poly reduced;
  rewrite_trace trace;
};

ptpa_result cnf_to_anf_ptpa( cnf_formula const& f, schedule const& sched = {}, reduce_options const& opts = {} );

} // namespace ptpa
