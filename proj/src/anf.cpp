#include <ptpa/anf.hpp>

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include <ptpa/errors.hpp>
#include <ptpa/kernels.hpp>

namespace ptpa {

namespace {

void sort_graded( std::vector<monomial>& ms )
{
  std::sort( ms.begin(), ms.end(), graded_less{} );
}

bool all_fit_word( bool_poly const& p )
{
  return std::all_of( p.monomials().begin(), p.monomials().end(), []( auto const& m ) { return m.fits_word(); } );
}

std::vector<std::uint64_t> masks_of( bool_poly const& p )
{
  std::vector<std::uint64_t> out;
  out.reserve( p.size() );
  for ( auto const& m : p.monomials() )
    out.push_back( m.mask() );
  return out;
}

void check_table_domain( std::size_t n, limits const& lim )
{
  if ( n > lim.oracle_cap || n > 63 )
    throw domain_too_large( "truth table over " + std::to_string( n ) + " variables exceeds the oracle cap of " +
                            std::to_string( lim.oracle_cap ) );
}

} // namespace

bool_poly bool_poly::one()
{
  return from_monomial( monomial{} );
}

bool_poly bool_poly::variable( var_id v )
{
  return from_monomial( monomial{ v } );
}

bool_poly bool_poly::from_monomial( monomial m )
{
  bool_poly p;
  p.monomials_.push_back( std::move( m ) );
  return p;
}

bool_poly bool_poly::from_monomials( std::vector<monomial> ms )
{
  sort_graded( ms );
  bool_poly p;
  for ( std::size_t i = 0; i < ms.size(); )
  {
    std::size_t j = i;
    while ( j < ms.size() && ms[j] == ms[i] )
      ++j;
    if ( ( j - i ) % 2 == 1 )
      p.monomials_.push_back( std::move( ms[i] ) );
    i = j;
  }
  return p;
}

bool bool_poly::contains( monomial const& m ) const
{
  return std::binary_search( monomials_.begin(), monomials_.end(), m, graded_less{} );
}

var_set bool_poly::support() const
{
  var_set s;
  for ( auto const& m : monomials_ )
    s |= m;
  return s;
}

var_id bool_poly::max_var() const
{
  var_id v = 0;
  for ( auto const& m : monomials_ )
    v = std::max( v, m.max() );
  return v;
}

std::size_t bool_poly::degree() const
{
  return monomials_.empty() ? 0 : monomials_.back().size();
}

bool_poly& bool_poly::operator+=( bool_poly const& o )
{
  std::vector<monomial> out;
  out.reserve( monomials_.size() + o.monomials_.size() );
  std::set_symmetric_difference( monomials_.begin(), monomials_.end(), o.monomials_.begin(), o.monomials_.end(),
                                 std::back_inserter( out ), graded_less{} );
  monomials_ = std::move( out );
  return *this;
}

bool_poly operator*( bool_poly const& a, bool_poly const& b )
{
  return poly_mul( a, b );
}

assignment assignment::from_index( std::uint64_t index, std::size_t n )
{
  assignment a;
  a.values.resize( n );
  for ( std::size_t i = 0; i < n; ++i )
    a.values[i] = ( index >> i ) & 1u;
  return a;
}

truth_table::truth_table( std::size_t vars, std::vector<std::uint8_t> values ) : n( vars ), bits( std::move( values ) )
{
  if ( vars > 63 || bits.size() != ( std::size_t{ 1 } << vars ) )
    throw domain_mismatch( "truth table over " + std::to_string( vars ) + " variables needs 2^" +
                           std::to_string( vars ) + " rows, got " + std::to_string( bits.size() ) );
  for ( auto& b : bits )
    b = b ? 1 : 0;
}

truth_table truth_table::constant( std::size_t vars, bool value )
{
  return truth_table( vars, std::vector<std::uint8_t>( std::size_t{ 1 } << vars, value ? 1 : 0 ) );
}

bool_poly poly_add( bool_poly const& a, bool_poly const& b )
{
  return a + b;
}

bool_poly poly_mul( bool_poly const& a, bool_poly const& b, limits const& lim )
{
  if ( a.is_zero() || b.is_zero() )
    return {};
  if ( a.is_one() )
    return b;
  if ( b.is_one() )
    return a;

  std::vector<monomial> result;
  if ( all_fit_word( a ) && all_fit_word( b ) )
  {
    auto const ma = masks_of( a ), mb = masks_of( b );
    std::vector<std::uint64_t> out;
    if ( !kernels::omp::multiply( ma, mb, lim.max_monomials, out ) )
      throw cap_exceeded( "polynomial product exceeds " + std::to_string( lim.max_monomials ) + " monomials" );
    result.reserve( out.size() );
    for ( auto m : out )
      result.push_back( var_set::from_mask( m ) );
  }
  else
  {
    std::unordered_set<monomial> acc;
    for ( auto const& x : a.monomials() )
    {
      for ( auto const& y : b.monomials() )
      {
        auto m = x | y;
        if ( auto it = acc.find( m ); it != acc.end() )
          acc.erase( it );
        else if ( acc.size() >= lim.max_monomials )
          throw cap_exceeded( "polynomial product exceeds " + std::to_string( lim.max_monomials ) + " monomials" );
        else
          acc.insert( std::move( m ) );
      }
    }
    result.assign( acc.begin(), acc.end() );
  }
  return bool_poly::from_monomials( std::move( result ) );
}

bool poly_eval( bool_poly const& p, assignment const& a )
{
  if ( p.max_var() > a.size() )
    throw domain_mismatch( "polynomial mentions x" + std::to_string( p.max_var() ) + " but the assignment has " +
                           std::to_string( a.size() ) + " variables" );
  bool v = false;
  for ( auto const& m : p.monomials() )
  {
    bool term = true;
    for ( auto x : m )
    {
      if ( !a.values[x - 1] )
      {
        term = false;
        break;
      }
    }
    v ^= term;
  }
  return v;
}

truth_table to_truth_table( bool_poly const& p, std::size_t n, limits const& lim )
{
  check_table_domain( n, lim );
  if ( p.max_var() > n )
    throw domain_mismatch( "polynomial mentions x" + std::to_string( p.max_var() ) + " outside a domain of " +
                           std::to_string( n ) + " variables" );
  std::vector<std::uint8_t> bits( std::size_t{ 1 } << n );
  auto const ms = masks_of( p );
  kernels::omp::evaluate_anf( ms, n, bits );
  return truth_table( n, std::move( bits ) );
}

truth_table coefficient_table( bool_poly const& p, std::size_t n, limits const& lim )
{
  check_table_domain( n, lim );
  if ( p.max_var() > n )
    throw domain_mismatch( "polynomial mentions x" + std::to_string( p.max_var() ) + " outside a domain of " +
                           std::to_string( n ) + " variables" );
  std::vector<std::uint8_t> bits( std::size_t{ 1 } << n, 0 );
  for ( auto const& m : p.monomials() )
    bits[m.mask()] = 1;
  return truth_table( n, std::move( bits ) );
}

truth_table mobius_table( truth_table const& t, limits const& lim )
{
  check_table_domain( t.n, lim );
  auto out = t;
  kernels::omp::mobius_inplace( out.bits, out.n );
  return out;
}

bool_poly mobius( truth_table const& t, limits const& lim )
{
  auto const coeffs = mobius_table( t, lim );
  std::vector<monomial> ms;
  for ( std::size_t i = 0; i < coeffs.rows(); ++i )
  {
    if ( coeffs.bits[i] )
      ms.push_back( var_set::from_mask( i ) );
  }
  return bool_poly::from_monomials( std::move( ms ) );
}

bool semantically_equal( bool_poly const& a, bool_poly const& b, std::size_t n, bool cross_check, limits const& lim )
{
  bool const same = a == b;
  if ( cross_check && same != ( to_truth_table( a, n, lim ) == to_truth_table( b, n, lim ) ) )
    throw error( "OracleDisagreement", "canonical ANF comparison and truth-table comparison disagree" );
  return same;
}

std::string to_string( bool_poly const& p )
{
  if ( p.is_zero() )
    return "0";
  std::string s;
  for ( auto const& m : p.monomials() )
  {
    if ( !s.empty() )
      s += " + ";
    if ( m.empty() )
    {
      s += '1';
      continue;
    }
    bool first = true;
    for ( auto v : m )
    {
      if ( !first )
        s += '*';
      s += 'x' + std::to_string( v );
      first = false;
    }
  }
  return s;
}

namespace {

class anf_parser
{
public:
  explicit anf_parser( std::string_view text ) : text_( text ) {}

  bool_poly parse()
  {
    skip_ws();
    if ( at_end() )
      fail( "empty polynomial" );
    std::vector<monomial> ms;
    if ( peek() == '0' )
    {
      ++pos_;
      skip_ws();
      if ( !at_end() )
        fail( "'0' must stand alone" );
      return {};
    }
    ms.push_back( term() );
    while ( true )
    {
      skip_ws();
      if ( at_end() )
        break;
      expect( '+' );
      ms.push_back( term() );
    }
    return bool_poly::from_monomials( std::move( ms ) );
  }

private:
  monomial term()
  {
    skip_ws();
    if ( !at_end() && peek() == '1' )
    {
      ++pos_;
      return {};
    }
    monomial m;
    m.insert( var() );
    while ( true )
    {
      skip_ws();
      if ( at_end() || peek() != '*' )
        break;
      ++pos_;
      m.insert( var() );
    }
    return m;
  }

  var_id var()
  {
    skip_ws();
    expect( 'x' );
    std::size_t const start = pos_;
    unsigned long long v = 0;
    while ( !at_end() && std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      v = v * 10 + static_cast<unsigned>( peek() - '0' );
      if ( v > 0xffffffffull )
        fail( "variable index too large" );
      ++pos_;
    }
    if ( pos_ == start || v == 0 )
      fail( "expected a positive variable index" );
    return static_cast<var_id>( v );
  }

  void expect( char c )
  {
    skip_ws();
    if ( at_end() || peek() != c )
      fail( std::string( "expected '" ) + c + "'" );
    ++pos_;
  }

  void skip_ws()
  {
    while ( !at_end() && std::isspace( static_cast<unsigned char>( peek() ) ) )
      ++pos_;
  }

  [[noreturn]] void fail( std::string const& what ) const
  {
    throw parse_error( what + " at offset " + std::to_string( pos_ ) );
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

bool_poly parse_anf( std::string_view text )
{
  return anf_parser( text ).parse();
}

} // namespace ptpa
