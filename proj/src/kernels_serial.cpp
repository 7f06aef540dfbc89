#include <ptpa/kernels.hpp>

#include <unordered_set>

namespace ptpa::kernels::serial {

void mobius_inplace( std::span<std::uint8_t> table, std::size_t n )
{
  std::size_t const rows = std::size_t{ 1 } << n;
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::size_t const step = std::size_t{ 1 } << i;
    for ( std::size_t j = 0; j < rows; ++j )
    {
      if ( j & step )
        table[j] ^= table[j ^ step];
    }
  }
}

void evaluate_anf( std::span<std::uint64_t const> monomials, std::size_t n, std::span<std::uint8_t> out )
{
  std::size_t const rows = std::size_t{ 1 } << n;
  for ( std::size_t a = 0; a < rows; ++a )
  {
    std::uint8_t v = 0;
    for ( auto m : monomials )
      v ^= ( m & ~static_cast<std::uint64_t>( a ) ) == 0;
    out[a] = v;
  }
}

void evaluate_cnf( std::span<packed_clause const> clauses, std::size_t n, std::span<std::uint8_t> out )
{
  std::size_t const rows = std::size_t{ 1 } << n;
  for ( std::size_t a = 0; a < rows; ++a )
  {
    auto const bits = static_cast<std::uint64_t>( a );
    std::uint8_t v = 1;
    for ( auto const& c : clauses )
    {
      if ( !( bits & c.positives ) && !( ~bits & c.negatives ) )
      {
        v = 0;
        break;
      }
    }
    out[a] = v;
  }
}

bool multiply( std::span<std::uint64_t const> a, std::span<std::uint64_t const> b, std::size_t cap,
               std::vector<std::uint64_t>& out )
{
  std::unordered_set<std::uint64_t> acc;
  for ( auto x : a )
  {
    for ( auto y : b )
    {
      auto const m = x | y;
      if ( auto it = acc.find( m ); it != acc.end() )
        acc.erase( it );
      else if ( acc.size() >= cap )
        return false;
      else
        acc.insert( m );
    }
  }
  out.assign( acc.begin(), acc.end() );
  return true;
}

} // namespace ptpa::kernels::serial
