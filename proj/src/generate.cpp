#include <ptpa/generate.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptpa {

cnf_formula random_cnf( std::size_t n, std::size_t m, std::size_t min_width, std::size_t max_width,
                        std::mt19937_64& rng )
{
  if ( n == 0 && m > 0 )
    throw std::invalid_argument( "clauses need at least one variable" );
  max_width = std::min( max_width, n );
  min_width = std::clamp<std::size_t>( min_width, 1, std::max<std::size_t>( max_width, 1 ) );

  cnf_formula f;
  f.n = n;
  std::vector<var_id> vars( n );
  std::iota( vars.begin(), vars.end(), var_id{ 1 } );
  for ( std::size_t i = 0; i < m; ++i )
  {
    auto const width = std::uniform_int_distribution<std::size_t>( min_width, max_width )( rng );
    std::shuffle( vars.begin(), vars.end(), rng );
    clause c;
    for ( std::size_t j = 0; j < width; ++j )
      ( rng() & 1u ? c.negatives : c.positives ).insert( vars[j] );
    f.clauses.push_back( std::move( c ) );
  }
  return f;
}

} // namespace ptpa
