#include <ptpa/rewrite.hpp>

#include <array>
#include <cstdlib>
#include <stdexcept>

#include <ptpa/errors.hpp>

namespace ptpa {

/* ---- clauses ------------------------------------------------------------ */

clause clause::make( var_set positives, var_set negatives )
{
  if ( positives.intersects( negatives ) )
    throw tautology_error( "clause contains both polarities of " + ( positives & negatives ).to_string() );
  return { std::move( positives ), std::move( negatives ) };
}

clause clause::from_literals( std::span<int const> literals, std::size_t line )
{
  clause c;
  for ( int lit : literals )
  {
    if ( lit == 0 )
      throw std::out_of_range( "literal 0 is the clause terminator" );
    auto const v = static_cast<var_id>( std::abs( static_cast<long>( lit ) ) );
    ( lit > 0 ? c.positives : c.negatives ).insert( v );
  }
  if ( c.positives.intersects( c.negatives ) )
    throw tautology_error( "clause contains both polarities of " + ( c.positives & c.negatives ).to_string(), line );
  return c;
}

std::vector<int> clause::literals() const
{
  std::vector<int> out;
  for ( auto v : variables() )
    out.push_back( positives.contains( v ) ? static_cast<int>( v ) : -static_cast<int>( v ) );
  return out;
}

std::string to_string( clause const& c )
{
  std::string s = "(";
  bool first = true;
  for ( int lit : c.literals() )
  {
    if ( !first )
      s += " | ";
    s += ( lit < 0 ? "~x" : "x" ) + std::to_string( std::abs( lit ) );
    first = false;
  }
  return s + ")";
}

pt_poly encode_clause( clause const& c )
{
  if ( c.empty() )
    throw empty_clause_error( "the empty clause has no power term encoding" );
  if ( c.positives.intersects( c.negatives ) )
    throw tautology_error( "clause contains both polarities of " + ( c.positives & c.negatives ).to_string() );

  auto const k = c.positives.size();
  if ( c.negatives.empty() )
  {
    if ( k == 1 )
      return { atomic_term::make( c.positives, {} ) };
    return { atomic_term::make( {}, c.positives ) };
  }
  if ( k == 0 )
    return { atomic_term::one(), atomic_term::make( c.negatives, {} ) };
  if ( k == 1 )
    return { atomic_term::one(), atomic_term::make( c.negatives, {} ),
             atomic_term::make( c.negatives | c.positives, {} ) };
  return { atomic_term::one(), atomic_term::make( c.negatives, {} ), atomic_term::make( c.negatives, c.positives ) };
}

/* ---- multiplication table ----------------------------------------------- */

namespace {

/// The operands S.P_U ⊙ T.P_V with the set expressions the rows test.
struct operands
{
  operands( atomic_term const& a, atomic_term const& b )
      : lhs( a ), rhs( b ), S( a.base() ), U( a.power() ), T( b.base() ), V( b.power() )
  {
    common = U & V;
    u_only = U - V;
    v_only = V - U;
    st = S | T;
    s_meets_v = S.intersects( V );
    t_meets_u = T.intersects( U );
  }

  atomic_term const& lhs;
  atomic_term const& rhs;
  var_set const& S;
  var_set const& U;
  var_set const& T;
  var_set const& V;
  var_set common;  // U ∩ V
  var_set u_only;  // U \ V
  var_set v_only;  // V \ U
  var_set st;      // S ∪ T
  bool s_meets_v;
  bool t_meets_u;
};

using guard_fn = bool ( * )( operands const& );
using action_fn = pt_poly ( * )( operands const& );

struct rule_row
{
  int row;
  guard_fn guard;
  action_fn action;
};

atomic_term pt( var_set base, var_set power )
{
  return atomic_term::make( std::move( base ), std::move( power ) );
}

bool no_collapse( operands const& o )
{
  return !o.s_meets_v && !o.t_meets_u;
}

pt_poly full_product( operands const& o )
{
  return { pt( o.st, o.U | o.V ), pt( o.st, o.U ), pt( o.st, o.V ) };
}

// clang-format off
constexpr std::array<rule_row, rule_count> table{ {
  { 1, []( operands const& o ) { return o.lhs.is_zero() || o.rhs.is_zero(); },
       []( operands const& ) { return pt_poly{}; } },
  { 2, []( operands const& o ) { return o.lhs.is_one(); },
       []( operands const& o ) { return pt_poly{ o.rhs }; } },
  { 3, []( operands const& o ) { return o.rhs.is_one(); },
       []( operands const& o ) { return pt_poly{ o.lhs }; } },

  { 4, []( operands const& o ) { return o.U.empty() && o.V.empty(); },
       []( operands const& o ) { return pt_poly{ pt( o.st, {} ) }; } },
  { 5, []( operands const& o ) { return o.U.empty() && !o.s_meets_v; },
       []( operands const& o ) { return pt_poly{ pt( o.st, o.V ) }; } },
  { 6, []( operands const& o ) { return o.V.empty() && !o.t_meets_u; },
       []( operands const& o ) { return pt_poly{ pt( o.st, o.U ) }; } },
  { 7, []( operands const& o ) { return o.U.empty() && o.s_meets_v; },
       []( operands const& o ) { return pt_poly{ pt( o.st, {} ) }; } },
  { 8, []( operands const& o ) { return o.V.empty() && o.t_meets_u; },
       []( operands const& o ) { return pt_poly{ pt( o.st, {} ) }; } },

  { 9, []( operands const& o ) { return o.common.empty() && !o.s_meets_v && !o.t_meets_u; },
       full_product },
  { 10, []( operands const& o ) { return o.common.empty() && o.s_meets_v && !o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, o.U ) }; } },
  { 11, []( operands const& o ) { return o.common.empty() && !o.s_meets_v && o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, o.V ) }; } },
  { 12, []( operands const& o ) { return o.common.empty() && o.s_meets_v && o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, {} ) }; } },
  { 13, []( operands const& o ) { return !o.common.empty() && o.s_meets_v && !o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, o.U ) }; } },
  { 14, []( operands const& o ) { return !o.common.empty() && !o.s_meets_v && o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, o.V ) }; } },
  { 15, []( operands const& o ) { return !o.common.empty() && o.s_meets_v && o.t_meets_u; },
        []( operands const& o ) { return pt_poly{ pt( o.st, {} ) }; } },

  { 16, []( operands const& o ) {
          return o.common.size() == 1 && o.u_only.size() > 1 && o.v_only.size() > 1 && no_collapse( o ); },
        full_product },
  { 17, []( operands const& o ) {
          return o.common.size() == 1 && o.u_only.size() > 1 && o.v_only.size() == 1 && no_collapse( o ); },
        []( operands const& o ) {
          return pt_poly{ pt( o.st | o.v_only, o.u_only ), pt( o.st | o.V, o.u_only ), pt( o.st | o.common, {} ) }; } },
  { 18, []( operands const& o ) {
          return o.common.size() == 1 && o.u_only.size() == 1 && o.v_only.size() > 1 && no_collapse( o ); },
        []( operands const& o ) {
          return pt_poly{ pt( o.st | o.u_only, o.v_only ), pt( o.st | o.U, o.v_only ), pt( o.st | o.common, {} ) }; } },
  { 19, []( operands const& o ) {
          return o.common.size() == 1 && o.u_only.size() == 1 && o.v_only.size() == 1 && no_collapse( o ); },
        []( operands const& o ) {
          return pt_poly{ pt( o.st | o.u_only | o.v_only, {} ), pt( o.st | o.U | o.V, {} ),
                          pt( o.st | o.common, {} ) }; } },

  { 20, []( operands const& o ) { return o.common.size() > 1 && ( o.u_only.empty() || o.v_only.empty() ); },
        []( operands const& o ) { return pt_poly{ pt( o.st, o.common ) }; } },
  { 21, []( operands const& o ) {
          return o.common.size() > 1 && o.u_only.size() > 1 && o.v_only.size() > 1 && no_collapse( o ); },
        full_product },
  { 22, []( operands const& o ) {
          return o.common.size() > 1 && o.u_only.size() > 1 && o.v_only.size() == 1 && no_collapse( o ); },
        []( operands const& o ) {
          return pt_poly{ pt( o.st | o.v_only, o.U ), pt( o.st | o.v_only, o.common ), pt( o.st, o.common ) }; } },
  { 23, []( operands const& o ) {
          return o.common.size() > 1 && o.u_only.size() == 1 && o.v_only.size() > 1 && no_collapse( o ); },
        []( operands const& o ) {
          return pt_poly{ pt( o.st | o.u_only, o.V ), pt( o.st | o.u_only, o.common ), pt( o.st, o.common ) }; } },
  { 24, []( operands const& o ) {
          return o.common.size() > 1 && o.u_only.size() == 1 && o.v_only.size() == 1 && no_collapse( o ); },
        []( operands const& o ) {
          auto const outer = o.st | o.u_only | o.v_only;
          return pt_poly{ pt( outer, o.common ), pt( o.st, o.common ), pt( outer, {} ) }; } },
} };
// clang-format on

rule_row const& match( operands const& o )
{
  for ( auto const& r : table )
  {
    if ( r.guard( o ) )
      return r;
  }
  throw no_rule_error( "no multiplication rule matches " + to_string( o.lhs ) + " (*) " + to_string( o.rhs ) );
}

} // namespace

rule_id classify_rule( atomic_term const& a, atomic_term const& b )
{
  return { match( operands( a, b ) ).row };
}

std::pair<rule_id, pt_poly> multiply_atomic_traced( atomic_term const& a, atomic_term const& b )
{
  operands const o( a, b );
  auto const& r = match( o );
  return { rule_id{ r.row }, r.action( o ) };
}

pt_poly multiply_atomic( atomic_term const& a, atomic_term const& b )
{
  return multiply_atomic_traced( a, b ).second;
}

pt_poly multiply_ptpoly( pt_poly const& a, pt_poly const& b, rewrite_trace* trace )
{
  pt_poly acc;
  for ( auto const& x : a.terms() )
  {
    for ( auto const& y : b.terms() )
    {
      auto [rule, product] = multiply_atomic_traced( x, y );
      if ( trace )
      {
        trace->count_rule( rule );
        if ( trace->keeps_steps() )
        {
          trace_step step;
          step.op = trace_op::mul_atomic;
          step.rule = rule;
          step.inputs = { pt_poly{ x }, pt_poly{ y } };
          step.output = product;
          trace->add( std::move( step ) );
        }
      }
      acc += product;
    }
  }
  return acc;
}

} // namespace ptpa
