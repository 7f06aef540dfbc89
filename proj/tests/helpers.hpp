#pragma once

#include <random>
#include <string>
#include <vector>

#include <ptpa/anf.hpp>
#include <ptpa/power_term.hpp>

namespace ptpa::testing {

inline var_set random_subset( std::mt19937_64& rng, var_id n, double p = 0.5 )
{
  std::bernoulli_distribution pick( p );
  var_set s;
  for ( var_id v = 1; v <= n; ++v )
  {
    if ( pick( rng ) )
      s.insert( v );
  }
  return s;
}

/// Any atomic term over x_1..x_n, constants included.
inline atomic_term random_atomic( std::mt19937_64& rng, var_id n )
{
  switch ( rng() % 8 )
  {
  case 0:
    return atomic_term::zero();
  case 1:
    return atomic_term::one();
  default:
    break;
  }
  while ( true )
  {
    auto base = random_subset( rng, n, 0.3 );
    auto power = random_subset( rng, n, 0.3 ) - base;
    if ( power.size() == 1 || ( base.empty() && power.empty() ) )
      continue;
    return atomic_term::make( std::move( base ), std::move( power ) );
  }
}

inline pt_poly random_ptpoly( std::mt19937_64& rng, var_id n, std::size_t max_terms = 4 )
{
  std::vector<atomic_term> ts;
  auto const k = rng() % ( max_terms + 1 );
  for ( std::size_t i = 0; i < k; ++i )
    ts.push_back( random_atomic( rng, n ) );
  return pt_poly::from_terms( std::move( ts ) );
}

inline bool_poly random_anf( std::mt19937_64& rng, var_id n, std::size_t max_monomials = 8 )
{
  std::vector<monomial> ms;
  auto const k = rng() % ( max_monomials + 1 );
  for ( std::size_t i = 0; i < k; ++i )
    ms.push_back( random_subset( rng, n, 0.4 ) );
  return bool_poly::from_monomials( std::move( ms ) );
}

inline bool_poly anf( std::string const& s )
{
  return parse_anf( s );
}

inline pt_poly ptp( std::string const& s )
{
  return parse_ptpoly( s );
}

} // namespace ptpa::testing
