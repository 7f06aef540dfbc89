#include <gtest/gtest.h>

#include <ptpa/errors.hpp>
#include <ptpa/power_term.hpp>

#include "helpers.hpp"

using namespace ptpa;
using ptpa::testing::anf;
using ptpa::testing::ptp;

TEST( PowerTerm, WellFormedness )
{
  auto const t = mk_power_term( { 3 }, { 1, 2 } );
  EXPECT_EQ( to_string( t ), "S{3}.P{1,2}" );
  EXPECT_THROW( mk_power_term( { 1 }, { 1, 2 } ), overlap_error );
  EXPECT_THROW( mk_power_term( {}, { 1 } ), singleton_power_error );
  EXPECT_THROW( mk_power_term( {}, {} ), empty_term_error );
}

TEST( PowerTerm, Degree )
{
  EXPECT_EQ( degree( mk_power_term( { 3 }, { 1, 2 } ) ), 2u );
  EXPECT_EQ( degree( mk_power_term( { 1, 2 }, {} ) ), 0u );
  EXPECT_EQ( degree( atomic_term::one() ), 0u );
  EXPECT_EQ( degree( atomic_term::zero() ), 0u );
}

TEST( PowerTerm, EnumerateMonomials )
{
  EXPECT_EQ( enumerate_monomials( mk_power_term( {}, { 1, 2 } ) ),
             ( std::vector<monomial>{ { 1 }, { 2 }, { 1, 2 } } ) );
  EXPECT_EQ( enumerate_monomials( mk_power_term( { 3 }, { 1, 2 } ) ),
             ( std::vector<monomial>{ { 1, 3 }, { 2, 3 }, { 1, 2, 3 } } ) );
  EXPECT_EQ( enumerate_monomials( mk_power_term( { 1, 2 }, {} ) ), ( std::vector<monomial>{ { 1, 2 } } ) );
  EXPECT_EQ( enumerate_monomials( atomic_term::one() ), ( std::vector<monomial>{ {} } ) );
  EXPECT_TRUE( enumerate_monomials( atomic_term::zero() ).empty() );
}

TEST( PowerTerm, EnumerationCap )
{
  limits lim;
  lim.max_power_size = 4;
  EXPECT_THROW( enumerate_monomials( mk_power_term( {}, { 1, 2, 3, 4, 5 } ), lim ), domain_too_large );
  EXPECT_EQ( enumerate_monomials( mk_power_term( {}, { 1, 2, 3, 4 } ), lim ).size(), 15u );
}

TEST( PowerTerm, EnumerationCardinality )
{
  std::mt19937_64 rng( 9 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const t = ptpa::testing::random_atomic( rng, 10 );
    if ( !t.is_term() )
      continue;
    auto const expected = t.power().empty() ? 1u : ( 1u << t.power().size() ) - 1u;
    EXPECT_EQ( enumerate_monomials( t ).size(), expected );
  }
}

TEST( PtPoly, Add )
{
  EXPECT_TRUE( ptpoly_add( ptp( "S{1}.P{}" ), ptp( "S{1}.P{}" ) ).empty() );
  auto const pi = ptp( "1 (+) S{2}.P{3,4}" );
  EXPECT_EQ( ptpoly_add( pi, pt_poly{} ), pi );
  EXPECT_EQ( ptpoly_add( ptp( "1 (+) S{1,5}.P{}" ), ptp( "1" ) ), ptp( "S{1,5}.P{}" ) );
}

TEST( PtPoly, ZeroIsDropped )
{
  auto const p = pt_poly{ atomic_term::zero(), atomic_term::one() };
  EXPECT_EQ( p, ptp( "1" ) );
  EXPECT_EQ( ptp( "0" ), pt_poly{} );
  EXPECT_EQ( to_string( pt_poly{} ), "0" );
}

TEST( PtPoly, Size )
{
  EXPECT_EQ( ptpoly_size( ptp( "1 (+) S{}.P{1,2}" ) ), 2u );
  EXPECT_EQ( ptpoly_size( ptp( "1 (+) S{1}.P{} (+) S{2}.P{} (+) S{1,2}.P{}" ) ), 4u );
  EXPECT_EQ( ptpoly_size( pt_poly{} ), 1u );
}

TEST( PtPoly, Eval )
{
  EXPECT_EQ( eval_ptpoly( ptp( "1 (+) S{}.P{1,2}" ) ), anf( "1 + x1 + x2 + x1*x2" ) );
  EXPECT_EQ( eval_ptpoly( ptp( "S{2}.P{} (+) S{1,2}.P{}" ) ), anf( "x2 + x1*x2" ) );
  EXPECT_EQ( eval_ptpoly( ptp( "S{}.P{1,2,3}" ) ), anf( "x1+x2+x3+x1*x2+x1*x3+x2*x3+x1*x2*x3" ) );
}

TEST( PtPoly, CanonicalOrderAndText )
{
  auto const p = ptp( "S{2}.P{}(+)S{1,2}.P{} (+)1(+) S{}.P{3,4}" );
  EXPECT_EQ( to_string( p ), "1 (+) S{}.P{3,4} (+) S{1,2}.P{} (+) S{2}.P{}" );
  EXPECT_THROW( ptp( "S{1}.P{1,2}" ), overlap_error );
  EXPECT_THROW( ptp( "S{1}.P{2" ), parse_error );
  EXPECT_THROW( ptp( "S{2,1}.P{}" ), parse_error );
}

TEST( PtPoly, PrintParseRoundTrip )
{
  std::mt19937_64 rng( 21 );
  for ( int i = 0; i < 300; ++i )
  {
    auto const p = ptpa::testing::random_ptpoly( rng, 7, 6 );
    EXPECT_EQ( ptp( to_string( p ) ), p );
  }
}

TEST( PtPoly, AdditionAxiomsAndHomomorphism )
{
  std::mt19937_64 rng( 22 );
  for ( int i = 0; i < 300; ++i )
  {
    auto const a = ptpa::testing::random_ptpoly( rng, 8 ), b = ptpa::testing::random_ptpoly( rng, 8 ),
               c = ptpa::testing::random_ptpoly( rng, 8 );
    EXPECT_EQ( a + b, b + a );
    EXPECT_EQ( ( a + b ) + c, a + ( b + c ) );
    EXPECT_EQ( a + pt_poly{}, a );
    EXPECT_TRUE( ( a + a ).empty() );
    EXPECT_EQ( eval_ptpoly( a + b ), eval_ptpoly( a ) + eval_ptpoly( b ) );
  }
}

TEST( Expr, Eval )
{
  EXPECT_EQ( eval_expr( expr( { ptp( "S{1}.P{}" ) } ) ), anf( "x1" ) );
  EXPECT_EQ( eval_expr( expr( { ptp( "S{}.P{1,2}" ), ptp( "1" ) } ) ), anf( "x1 + x2 + x1*x2" ) );
  EXPECT_THROW( expr( {} ), std::invalid_argument );
}

TEST( Expr, TextRoundTrip )
{
  auto const e = parse_expr( "(S{}.P{1,2}) (*) (1 (+) S{1,5}.P{})" );
  EXPECT_EQ( e.factor_count(), 2u );
  EXPECT_EQ( to_string( e ), "(S{}.P{1,2}) (*) (1 (+) S{1,5}.P{})" );
  EXPECT_EQ( parse_expr( to_string( e ) ), e );
}
