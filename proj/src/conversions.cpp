#include <ptpa/conversions.hpp>

#include <stdexcept>

#include <ptpa/errors.hpp>

namespace ptpa {

bool_poly clause_anf( clause const& c, limits const& lim )
{
  if ( c.positives.intersects( c.negatives ) )
    throw tautology_error( "clause contains both polarities of " + ( c.positives & c.negatives ).to_string() );
  if ( c.positives.size() > lim.max_clause_positives )
    throw cap_exceeded( "clause with " + std::to_string( c.positives.size() ) + " positive literals exceeds the cap of " +
                        std::to_string( lim.max_clause_positives ) );

  auto const pos = c.positives.to_vector();
  std::vector<monomial> ms{ monomial{} };
  for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << pos.size() ); ++w )
  {
    auto m = c.negatives;
    for ( std::size_t i = 0; i < pos.size(); ++i )
    {
      if ( ( w >> i ) & 1u )
        m.insert( pos[i] );
    }
    ms.push_back( std::move( m ) );
  }
  return bool_poly::from_monomials( std::move( ms ) );
}

factored_anf cnf_to_anf_direct( cnf_formula const& f, limits const& lim )
{
  factored_anf out;
  out.n = f.n;
  out.factors.reserve( f.clauses.size() );
  for ( auto const& c : f.clauses )
    out.factors.push_back( clause_anf( c, lim ) );
  return out;
}

factored_anf cnf_to_anf_twin( cnf_formula const& f, bool all_constraints )
{
  auto const n = static_cast<var_id>( f.n );
  factored_anf out;
  out.n = 2 * f.n;

  var_set twinned = all_constraints ? var_set::range( 1, n ) : var_set{};
  for ( auto const& c : f.clauses )
  {
    if ( c.positives.intersects( c.negatives ) )
      throw tautology_error( "clause contains both polarities of " + ( c.positives & c.negatives ).to_string() );
    auto m = c.negatives;
    for ( auto v : c.positives )
    {
      m.insert( n + v );
      twinned.insert( v );
    }
    out.factors.push_back( bool_poly::one() + bool_poly::from_monomial( std::move( m ) ) );
  }
  for ( auto v : twinned )
  {
    out.factors.push_back( bool_poly::variable( v ) + bool_poly::variable( n + v ) );
    out.twin_map.emplace( v, n + v );
  }
  return out;
}

bool_poly expand( factored_anf const& fa, limits const& lim )
{
  auto acc = bool_poly::one();
  for ( auto const& p : fa.factors )
    acc = poly_mul( acc, p, lim );
  return acc;
}

bool_poly substitute_twins( bool_poly const& p, std::map<var_id, var_id> const& twin_map, limits const& lim )
{
  std::map<var_id, var_id> original;
  for ( auto const& [v, t] : twin_map )
    original.emplace( t, v );

  bool_poly out;
  for ( auto const& m : p.monomials() )
  {
    monomial kept;
    auto term = bool_poly::one();
    for ( auto v : m )
    {
      if ( auto it = original.find( v ); it != original.end() )
        term = poly_mul( term, bool_poly::one() + bool_poly::variable( it->second ), lim );
      else
        kept.insert( v );
    }
    out += poly_mul( term, bool_poly::from_monomial( std::move( kept ) ), lim );
  }
  return out;
}

cnf_formula bool_to_cnf_maxterms( truth_table const& t, limits const& lim )
{
  if ( t.n > lim.oracle_cap )
    throw domain_too_large( "truth table of " + std::to_string( t.n ) + " variables exceeds the oracle cap of " +
                            std::to_string( lim.oracle_cap ) );
  cnf_formula f;
  f.n = t.n;
  for ( std::size_t row = 0; row < t.rows(); ++row )
  {
    if ( t.bits[row] )
      continue;
    clause c;
    for ( std::size_t i = 0; i < t.n; ++i )
      ( ( row >> i ) & 1u ? c.negatives : c.positives ).insert( static_cast<var_id>( i + 1 ) );
    f.clauses.push_back( std::move( c ) );
  }
  return f;
}

cnf_formula anf_to_cnf_naive( bool_poly const& p, std::size_t n, limits const& lim )
{
  return bool_to_cnf_maxterms( to_truth_table( p, n, lim ), lim );
}

namespace {

/// Maxterm clauses of p over exactly the variables in `vars`.
std::vector<clause> naive_over( bool_poly const& p, var_set const& vars )
{
  auto const order = vars.to_vector();
  std::map<var_id, var_id> local;
  for ( std::size_t i = 0; i < order.size(); ++i )
    local.emplace( order[i], static_cast<var_id>( i + 1 ) );

  std::vector<monomial> ms;
  for ( auto const& m : p.monomials() )
  {
    monomial r;
    for ( auto v : m )
      r.insert( local.at( v ) );
    ms.push_back( std::move( r ) );
  }

  std::vector<clause> out;
  for ( auto const& c : anf_to_cnf_naive( bool_poly::from_monomials( std::move( ms ) ), order.size() ).clauses )
  {
    clause g;
    for ( auto v : c.positives )
      g.positives.insert( order[v - 1] );
    for ( auto v : c.negatives )
      g.negatives.insert( order[v - 1] );
    out.push_back( std::move( g ) );
  }
  return out;
}

} // namespace

split_result anf_to_cnf_split( bool_poly const& p, std::size_t k, std::size_t n )
{
  if ( k < 2 )
    throw std::invalid_argument( "chunk size must be at least 2" );

  split_result out;
  auto next = static_cast<var_id>( std::max<std::size_t>( n, p.max_var() ) );

  bool constant = false;
  std::vector<var_id> linear;
  std::vector<var_id> products;
  for ( auto const& m : p.monomials() )
  {
    if ( m.empty() )
      constant = true;
    else if ( m.size() == 1 )
      linear.push_back( m.min() );
    else
    {
      auto const aux = ++next;
      out.aux.push_back( { aux, aux_definition::kind_type::product_of, m } );
      clause wide;
      wide.positives.insert( aux );
      wide.negatives = m;
      out.cnf.clauses.push_back( std::move( wide ) );
      for ( auto v : m )
      {
        clause narrow;
        narrow.negatives.insert( aux );
        narrow.positives.insert( v );
        out.cnf.clauses.push_back( std::move( narrow ) );
      }
      products.push_back( aux );
    }
  }
  linear.insert( linear.end(), products.begin(), products.end() );

  // k = 2 still folds two terms per aux so the list shrinks
  auto const take = std::max<std::size_t>( k - 1, 2 );
  while ( linear.size() > k )
  {
    var_set chunk( linear.end() - static_cast<std::ptrdiff_t>( take ), linear.end() );
    linear.resize( linear.size() - take );
    auto const aux = ++next;
    out.aux.push_back( { aux, aux_definition::kind_type::xor_chunk, chunk } );

    auto equation = bool_poly::one() + bool_poly::variable( aux );
    for ( auto v : chunk )
      equation += bool_poly::variable( v );
    chunk.insert( aux );
    for ( auto& c : naive_over( equation, chunk ) )
      out.cnf.clauses.push_back( std::move( c ) );
    linear.push_back( aux );
  }

  auto rest = constant ? bool_poly::one() : bool_poly::zero();
  for ( auto v : linear )
    rest += bool_poly::variable( v );
  for ( auto& c : naive_over( rest, var_set( linear.begin(), linear.end() ) ) )
    out.cnf.clauses.push_back( std::move( c ) );

  out.cnf.n = next;
  return out;
}

std::vector<std::uint32_t> model_projection_counts( cnf_formula const& f, std::size_t n, limits const& lim )
{
  if ( n > f.n )
    throw domain_mismatch( "projection onto " + std::to_string( n ) + " of " + std::to_string( f.n ) + " variables" );
  auto const t = cnf_truth_table( f, lim );
  std::size_t const mask = ( std::size_t{ 1 } << n ) - 1;
  std::vector<std::uint32_t> counts( std::size_t{ 1 } << n, 0 );
  for ( std::size_t row = 0; row < t.rows(); ++row )
    counts[row & mask] += t.bits[row];
  return counts;
}

expr cnf_to_expr( cnf_formula const& f )
{
  if ( f.clauses.empty() )
    return expr( { pt_poly{ atomic_term::one() } } );
  std::vector<pt_poly> factors;
  factors.reserve( f.clauses.size() );
  for ( auto const& c : f.clauses )
    factors.push_back( encode_clause( c ) );
  return expr( std::move( factors ) );
}

ptpa_result cnf_to_anf_ptpa( cnf_formula const& f, schedule const& sched, reduce_options const& opts )
{
  auto r = expr_reduce( cnf_to_expr( f ), sched, opts );
  auto anf = eval_ptpoly( r.result, opts.lim );
  return { std::move( anf ), std::move( r.result ), std::move( r.trace ) };
}

} // namespace ptpa
