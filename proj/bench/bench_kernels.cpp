// Serial reference against OpenMP kernels. The argument is the domain size n
// (or the operand size for multiply).

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <ptpa/kernels.hpp>

namespace k = ptpa::kernels;

namespace {

std::vector<std::uint8_t> random_table( std::size_t n )
{
  std::mt19937_64 rng( 1 );
  std::vector<std::uint8_t> t( std::size_t{ 1 } << n );
  for ( auto& b : t )
    b = rng() & 1u;
  return t;
}

std::vector<std::uint64_t> random_monomials( std::size_t count, std::size_t n, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::uint64_t const mask = n >= 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << n ) - 1;
  std::vector<std::uint64_t> out( count );
  for ( auto& m : out )
    m = rng() & rng() & mask;
  return out;
}

std::vector<k::packed_clause> random_clauses( std::size_t count, std::size_t n )
{
  std::mt19937_64 rng( 2 );
  std::vector<k::packed_clause> out( count );
  for ( auto& c : out )
  {
    for ( int i = 0; i < 3; ++i )
    {
      auto const bit = std::uint64_t{ 1 } << ( rng() % n );
      ( rng() & 1u ? c.positives : c.negatives ) |= bit;
    }
    c.negatives &= ~c.positives;
  }
  return out;
}

template <auto Kernel>
void bm_mobius( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  auto const base = random_table( n );
  for ( auto _ : state )
  {
    auto t = base;
    Kernel( t, n );
    benchmark::DoNotOptimize( t.data() );
  }
  state.SetItemsProcessed( state.iterations() * static_cast<std::int64_t>( base.size() ) );
}

template <auto Kernel>
void bm_evaluate_anf( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  auto const monomials = random_monomials( 256, n, 3 );
  std::vector<std::uint8_t> out( std::size_t{ 1 } << n );
  for ( auto _ : state )
  {
    Kernel( monomials, n, out );
    benchmark::DoNotOptimize( out.data() );
  }
}

template <auto Kernel>
void bm_evaluate_cnf( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  auto const clauses = random_clauses( 4 * n, n );
  std::vector<std::uint8_t> out( std::size_t{ 1 } << n );
  for ( auto _ : state )
  {
    Kernel( clauses, n, out );
    benchmark::DoNotOptimize( out.data() );
  }
}

template <auto Kernel>
void bm_multiply( benchmark::State& state )
{
  auto const count = static_cast<std::size_t>( state.range( 0 ) );
  auto const a = random_monomials( count, 40, 4 ), b = random_monomials( count, 40, 5 );
  std::vector<std::uint64_t> out;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( Kernel( a, b, std::size_t{ 1 } << 26, out ) );
  }
}

} // namespace

BENCHMARK( bm_mobius<k::serial::mobius_inplace> )->Name( "mobius/serial" )->DenseRange( 16, 22, 3 );
BENCHMARK( bm_mobius<k::omp::mobius_inplace> )->Name( "mobius/omp" )->DenseRange( 16, 22, 3 )->UseRealTime();
BENCHMARK( bm_evaluate_anf<k::serial::evaluate_anf> )->Name( "evaluate_anf/serial" )->DenseRange( 12, 18, 3 );
BENCHMARK( bm_evaluate_anf<k::omp::evaluate_anf> )->Name( "evaluate_anf/omp" )->DenseRange( 12, 18, 3 )->UseRealTime();
BENCHMARK( bm_evaluate_cnf<k::serial::evaluate_cnf> )->Name( "evaluate_cnf/serial" )->DenseRange( 12, 18, 3 );
BENCHMARK( bm_evaluate_cnf<k::omp::evaluate_cnf> )->Name( "evaluate_cnf/omp" )->DenseRange( 12, 18, 3 )->UseRealTime();
BENCHMARK( bm_multiply<k::serial::multiply> )->Name( "multiply/serial" )->RangeMultiplier( 4 )->Range( 64, 1024 );
BENCHMARK( bm_multiply<k::omp::multiply> )->Name( "multiply/omp" )->RangeMultiplier( 4 )->Range( 64, 1024 )->UseRealTime();

BENCHMARK_MAIN();
