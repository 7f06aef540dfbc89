#include <ptpa/kernels.hpp>

#include <atomic>
#include <cstdint>
#include <unordered_set>

#include <omp.h>

namespace ptpa::kernels::omp {

void mobius_inplace( std::span<std::uint8_t> table, std::size_t n )
{
  auto const rows = static_cast<std::int64_t>( std::size_t{ 1 } << n );
  auto* data = table.data();
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const step = std::int64_t{ 1 } << i;
    // each level only reads rows with bit i clear and writes rows with it set
#pragma omp parallel for schedule( static ) if ( rows >= 4096 )
    for ( std::int64_t j = 0; j < rows; ++j )
    {
      if ( j & step )
        data[j] ^= data[j ^ step];
    }
  }
}

void evaluate_anf( std::span<std::uint64_t const> monomials, std::size_t n, std::span<std::uint8_t> out )
{
  auto const rows = static_cast<std::int64_t>( std::size_t{ 1 } << n );
  auto const* ms = monomials.data();
  auto const count = monomials.size();
  auto* dst = out.data();
#pragma omp parallel for schedule( static ) if ( rows * static_cast<std::int64_t>( count ) >= 65536 )
  for ( std::int64_t a = 0; a < rows; ++a )
  {
    auto const notbits = ~static_cast<std::uint64_t>( a );
    std::uint8_t v = 0;
    for ( std::size_t k = 0; k < count; ++k )
      v ^= ( ms[k] & notbits ) == 0;
    dst[a] = v;
  }
}

void evaluate_cnf( std::span<packed_clause const> clauses, std::size_t n, std::span<std::uint8_t> out )
{
  auto const rows = static_cast<std::int64_t>( std::size_t{ 1 } << n );
  auto const* cs = clauses.data();
  auto const count = clauses.size();
  auto* dst = out.data();
#pragma omp parallel for schedule( static ) if ( rows * static_cast<std::int64_t>( count ) >= 65536 )
  for ( std::int64_t a = 0; a < rows; ++a )
  {
    auto const bits = static_cast<std::uint64_t>( a );
    std::uint8_t v = 1;
    for ( std::size_t k = 0; k < count; ++k )
    {
      if ( !( bits & cs[k].positives ) && !( ~bits & cs[k].negatives ) )
      {
        v = 0;
        break;
      }
    }
    dst[a] = v;
  }
}

bool multiply( std::span<std::uint64_t const> a, std::span<std::uint64_t const> b, std::size_t cap,
               std::vector<std::uint64_t>& out )
{
  auto const rows = static_cast<std::int64_t>( a.size() );
  if ( rows * static_cast<std::int64_t>( b.size() ) < 16384 || omp_get_max_threads() == 1 )
    return serial::multiply( a, b, cap, out );

  std::vector<std::unordered_set<std::uint64_t>> partial( static_cast<std::size_t>( omp_get_max_threads() ) );
  std::atomic<bool> overflow{ false };
#pragma omp parallel
  {
    auto& acc = partial[static_cast<std::size_t>( omp_get_thread_num() )];
#pragma omp for schedule( static )
    for ( std::int64_t i = 0; i < rows; ++i )
    {
      if ( overflow.load( std::memory_order_relaxed ) )
        continue;
      for ( auto y : b )
      {
        auto const m = a[static_cast<std::size_t>( i )] | y;
        if ( auto it = acc.find( m ); it != acc.end() )
          acc.erase( it );
        else
          acc.insert( m );
      }
      if ( acc.size() > cap )
        overflow.store( true, std::memory_order_relaxed );
    }
  }
  if ( overflow )
    return false;

  auto& total = partial.front();
  for ( std::size_t t = 1; t < partial.size(); ++t )
  {
    for ( auto m : partial[t] )
    {
      if ( auto it = total.find( m ); it != total.end() )
        total.erase( it );
      else
        total.insert( m );
    }
  }
  if ( total.size() > cap )
    return false;
  out.assign( total.begin(), total.end() );
  return true;
}

} // namespace ptpa::kernels::omp
