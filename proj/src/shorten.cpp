#include <ptpa/rewrite.hpp>

#include <ptpa/errors.hpp>

namespace ptpa {

split_case classify_split( atomic_term const& t, var_set const& split_t, var_set const& split_v )
{
  if ( !t.is_term() )
    throw invalid_split_error( "only power terms can be expanded, got " + to_string( t ) );
  if ( split_t.empty() || split_v.empty() )
    throw invalid_split_error( "both parts of the split must be nonempty" );
  if ( split_t.intersects( split_v ) )
    throw invalid_split_error( "split parts " + split_t.to_string() + " and " + split_v.to_string() + " overlap" );
  if ( ( split_t | split_v ) != t.power() )
    throw invalid_split_error( split_t.to_string() + " and " + split_v.to_string() + " do not partition " +
                               t.power().to_string() );

  auto const nt = split_t.size(), nv = split_v.size();
  if ( nt == 1 && nv == 1 )
    return split_case::single_single;
  if ( nt > 1 && nv == 1 )
    return split_case::multi_single;
  if ( nt > 1 && nv > 1 )
    return split_case::multi_multi;
  throw invalid_split_error( "|T| = 1 with |V| > 1 has no identity; swap T and V" );
}

pt_poly expand_term( atomic_term const& t, var_set const& split_t, var_set const& split_v, limits const& lim )
{
  auto const which = classify_split( t, split_t, split_v );
  auto const& s = t.base();
  switch ( which )
  {
  case split_case::single_single:
    return { atomic_term::make( s | split_t, {} ), atomic_term::make( s | split_t | split_v, {} ),
             atomic_term::make( s | split_v, {} ) };
  case split_case::multi_single:
    return { atomic_term::make( s, split_t ), atomic_term::make( s | split_v, split_t ),
             atomic_term::make( s | split_v, {} ) };
  case split_case::multi_multi:
  default:
  {
    auto const sub = enumerate_monomials( atomic_term::make( {}, split_v ), lim );
    std::vector<atomic_term> terms;
    terms.reserve( sub.size() + 2 );
    for ( auto const& w : sub )
      terms.push_back( atomic_term::make( s | w, split_t ) );
    terms.push_back( atomic_term::make( s, split_t ) );
    terms.push_back( atomic_term::make( s, split_v ) );
    return pt_poly::from_terms( std::move( terms ) );
  }
  }
}

namespace {

std::optional<shortening> find_case1( pt_poly const& p )
{
  std::vector<atomic_term const*> flat;
  for ( auto const& t : p.terms() )
  {
    if ( t.is_term() && t.degree() == 0 )
      flat.push_back( &t );
  }
  for ( std::size_t i = 0; i < flat.size(); ++i )
  {
    auto const& x = flat[i]->base();
    for ( std::size_t j = i + 1; j < flat.size(); ++j )
    {
      auto const& y = flat[j]->base();
      if ( x.size() != y.size() )
        continue;
      auto const x_only = x - y;
      if ( x_only.size() != 1 )
        continue;
      auto const joined = atomic_term::make( x | y, {} );
      if ( !p.contains( joined ) )
        continue;
      return shortening{ split_case::single_single,
                         { *flat[i], joined, *flat[j] },
                         pt_poly{ atomic_term::make( x & y, x ^ y ) } };
    }
  }
  return std::nullopt;
}

std::optional<shortening> find_case2( pt_poly const& p )
{
  auto const& ts = p.terms();
  for ( auto const& a : ts )
  {
    if ( !a.is_term() || a.degree() < 2 )
      continue;
    for ( auto const& b : ts )
    {
      if ( !b.is_term() || b.power() != a.power() || b.base().size() != a.base().size() + 1 ||
           !a.base().is_subset_of( b.base() ) )
        continue;
      auto const single = atomic_term::make( b.base(), {} );
      if ( !p.contains( single ) )
        continue;
      return shortening{ split_case::multi_single,
                         { a, b, single },
                         pt_poly{ atomic_term::make( a.base(), a.power() | ( b.base() - a.base() ) ) } };
    }
  }
  return std::nullopt;
}

std::optional<shortening> find_case3( pt_poly const& p, std::size_t vsize )
{
  auto const& ts = p.terms();
  for ( auto const& a : ts )
  {
    if ( !a.is_term() || a.degree() < 2 )
      continue;
    for ( auto const& b : ts )
    {
      if ( !b.is_term() || b.degree() != vsize || b.base() != a.base() || b.power().intersects( a.power() ) )
        continue;
      std::vector<atomic_term> group{ a, b };
      bool complete = true;
      for ( auto const& w : enumerate_monomials( atomic_term::make( {}, b.power() ) ) )
      {
        auto member = atomic_term::make( a.base() | w, a.power() );
        if ( !p.contains( member ) )
        {
          complete = false;
          break;
        }
        group.push_back( std::move( member ) );
      }
      if ( complete )
        return shortening{ split_case::multi_multi, std::move( group ),
                           pt_poly{ atomic_term::make( a.base(), a.power() | b.power() ) } };
    }
  }
  return std::nullopt;
}

std::optional<shortening> try_identity( pt_poly const& p, atomic_term const& t, var_set const& split_t,
                                         var_set const& split_v )
{
  auto identity = expand_term( t, split_t, split_v );
  identity += t;
  std::vector<atomic_term> present;
  pt_poly absent;
  for ( auto const& x : identity.terms() )
  {
    if ( p.contains( x ) )
      present.push_back( x );
    else
      absent += x;
  }
  if ( 2 * present.size() <= identity.term_count() )
    return std::nullopt;
  return shortening{ classify_split( t, split_t, split_v ), std::move( present ), std::move( absent ) };
}

/// Subsets of `from` with `k` members, lexicographically by position.
template<typename Fn>
std::optional<shortening> for_each_subset( std::vector<var_id> const& from, std::size_t k, Fn&& fn )
{
  std::vector<std::size_t> idx( k );
  for ( std::size_t i = 0; i < k; ++i )
    idx[i] = i;
  while ( true )
  {
    var_set chosen;
    for ( auto i : idx )
      chosen.insert( from[i] );
    if ( auto s = fn( chosen ) )
      return s;
    std::size_t i = k;
    while ( i > 0 && idx[i - 1] == from.size() - k + i - 1 )
      --i;
    if ( i == 0 )
      return std::nullopt;
    ++idx[i - 1];
    for ( auto j = i; j < k; ++j )
      idx[j] = idx[j - 1] + 1;
  }
}

std::optional<shortening> find_partial( pt_poly const& p, shorten_options const& opts )
{
  for ( auto const& t : p.terms() )
  {
    if ( !t.is_term() || t.degree() < 2 )
      continue;
    auto const& u = t.power();
    for ( auto v : u )
    {
      if ( auto s = try_identity( p, t, u - var_set{ v }, var_set{ v } ) )
        return s;
    }
    auto const members = u.to_vector();
    for ( std::size_t k = 2; k <= opts.max_case3_v && k + 2 <= members.size(); ++k )
    {
      auto s = for_each_subset( members, k, [&]( var_set const& split_v ) {
        return try_identity( p, t, u - split_v, split_v );
      } );
      if ( s )
        return s;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<shortening> find_shortening( pt_poly const& p, shorten_options const& opts )
{
  if ( auto s = find_case1( p ) )
    return s;
  if ( auto s = find_case2( p ) )
    return s;
  for ( std::size_t v = 2; v <= opts.max_case3_v; ++v )
  {
    if ( auto s = find_case3( p, v ) )
      return s;
  }
  return find_partial( p, opts );
}

pt_poly shorten( pt_poly p, shorten_options const& opts, rewrite_trace* trace, std::size_t position )
{
  auto const bound = p.term_count();
  for ( std::size_t round = 0; round < bound; ++round )
  {
    auto s = find_shortening( p, opts );
    if ( !s )
      break;
    pt_poly next = p;
    for ( auto const& t : s->replaced )
      next += t;
    next += s->merged;
    if ( trace && trace->keeps_steps() )
    {
      trace_step step;
      step.op = trace_op::shorten;
      step.rewrite_case = static_cast<int>( s->which );
      step.positions = { position };
      step.inputs = { p };
      step.output = next;
      trace->add( std::move( step ) );
    }
    p = std::move( next );
  }
  return p;
}

pt_poly anf_to_ptpoly( bool_poly const& p, shorten_options const& opts )
{
  std::vector<atomic_term> terms;
  terms.reserve( p.size() );
  for ( auto const& m : p.monomials() )
    terms.push_back( m.empty() ? atomic_term::one() : atomic_term::make( m, {} ) );
  return shorten( pt_poly::from_terms( std::move( terms ) ), opts );
}

} // namespace ptpa
