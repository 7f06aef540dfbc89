#include <ptpa/power_term.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <ptpa/errors.hpp>

namespace ptpa {

atomic_term atomic_term::make( var_set base, var_set power )
{
  if ( base.intersects( power ) )
    throw overlap_error( "base " + base.to_string() + " and power " + power.to_string() + " share " +
                         ( base & power ).to_string() );
  if ( power.size() == 1 )
    throw singleton_power_error( "power part " + power.to_string() + " has exactly one variable" );
  if ( base.empty() && power.empty() )
    throw empty_term_error( "S{}.P{} is the constant 0, not a power term" );
  return atomic_term( kind_type::term, std::move( base ), std::move( power ) );
}

std::strong_ordering compare( atomic_term const& a, atomic_term const& b )
{
  if ( a.kind() != b.kind() )
    return static_cast<int>( a.kind() ) <=> static_cast<int>( b.kind() );
  if ( auto c = compare_lex( a.base(), b.base() ); c != 0 )
    return c;
  return compare_lex( a.power(), b.power() );
}

atomic_term mk_power_term( var_set base, var_set power )
{
  return atomic_term::make( std::move( base ), std::move( power ) );
}

std::size_t degree( atomic_term const& t )
{
  return t.degree();
}

std::vector<monomial> enumerate_monomials( atomic_term const& t, limits const& lim )
{
  if ( t.is_zero() )
    return {};
  if ( t.is_one() )
    return { monomial{} };
  auto const u = t.power().to_vector();
  if ( u.size() > lim.max_power_size )
    throw domain_too_large( "expanding " + to_string( t ) + " needs 2^" + std::to_string( u.size() ) +
                            " monomials (cap |U| <= " + std::to_string( lim.max_power_size ) + ")" );
  if ( u.empty() )
    return { t.base() };

  std::vector<monomial> out;
  out.reserve( ( std::size_t{ 1 } << u.size() ) - 1 );
  for ( std::uint64_t sel = 1; sel < ( std::uint64_t{ 1 } << u.size() ); ++sel )
  {
    auto m = t.base();
    for ( std::size_t i = 0; i < u.size(); ++i )
    {
      if ( ( sel >> i ) & 1u )
        m.insert( u[i] );
    }
    out.push_back( std::move( m ) );
  }
  std::sort( out.begin(), out.end(), graded_less{} );
  return out;
}

pt_poly::pt_poly( std::initializer_list<atomic_term> terms ) : pt_poly( from_terms( std::vector( terms ) ) ) {}

pt_poly pt_poly::from_terms( std::vector<atomic_term> terms )
{
  std::sort( terms.begin(), terms.end(), term_less{} );
  pt_poly p;
  for ( std::size_t i = 0; i < terms.size(); )
  {
    std::size_t j = i;
    while ( j < terms.size() && terms[j] == terms[i] )
      ++j;
    if ( ( j - i ) % 2 == 1 && !terms[i].is_zero() )
      p.terms_.push_back( std::move( terms[i] ) );
    i = j;
  }
  return p;
}

bool pt_poly::contains( atomic_term const& t ) const
{
  return std::binary_search( terms_.begin(), terms_.end(), t, term_less{} );
}

pt_poly& pt_poly::operator+=( pt_poly const& o )
{
  std::vector<atomic_term> out;
  out.reserve( terms_.size() + o.terms_.size() );
  std::set_symmetric_difference( terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                 std::back_inserter( out ), term_less{} );
  terms_ = std::move( out );
  return *this;
}

pt_poly& pt_poly::operator+=( atomic_term const& t )
{
  if ( t.is_zero() )
    return *this;
  auto it = std::lower_bound( terms_.begin(), terms_.end(), t, term_less{} );
  if ( it != terms_.end() && *it == t )
    terms_.erase( it );
  else
    terms_.insert( it, t );
  return *this;
}

pt_poly ptpoly_add( pt_poly const& a, pt_poly const& b )
{
  return a + b;
}

std::size_t ptpoly_size( pt_poly const& p )
{
  return p.empty() ? 1 : p.term_count();
}

bool_poly eval_ptpoly( pt_poly const& p, limits const& lim )
{
  std::vector<monomial> all;
  for ( auto const& t : p.terms() )
  {
    auto ms = enumerate_monomials( t, lim );
    all.insert( all.end(), std::make_move_iterator( ms.begin() ), std::make_move_iterator( ms.end() ) );
  }
  return bool_poly::from_monomials( std::move( all ) );
}

expr::expr( std::vector<pt_poly> factors ) : factors_( std::move( factors ) )
{
  if ( factors_.empty() )
    throw std::invalid_argument( "an expression needs at least one factor" );
}

bool_poly eval_expr( expr const& e, limits const& lim )
{
  auto acc = eval_ptpoly( e.factors().front(), lim );
  for ( std::size_t i = 1; i < e.factor_count() && !acc.is_zero(); ++i )
    acc = poly_mul( acc, eval_ptpoly( e.factors()[i], lim ), lim );
  return acc;
}

std::string to_string( atomic_term const& t )
{
  switch ( t.kind() )
  {
  case atomic_term::kind_type::zero:
    return "0";
  case atomic_term::kind_type::one:
    return "1";
  default:
    return "S" + t.base().to_string() + ".P" + t.power().to_string();
  }
}

std::string to_string( pt_poly const& p )
{
  if ( p.empty() )
    return "0";
  std::string s;
  for ( auto const& t : p.terms() )
  {
    if ( !s.empty() )
      s += " (+) ";
    s += to_string( t );
  }
  return s;
}

std::string to_string( expr const& e )
{
  std::string s;
  for ( auto const& f : e.factors() )
  {
    if ( !s.empty() )
      s += " (*) ";
    s += "(" + to_string( f ) + ")";
  }
  return s;
}

namespace {

/// Recursive-descent reader over the text with all whitespace removed.
class pt_parser
{
public:
  explicit pt_parser( std::string_view text )
  {
    for ( char c : text )
    {
      if ( !std::isspace( static_cast<unsigned char>( c ) ) )
        text_ += c;
    }
  }

  atomic_term whole_term()
  {
    auto t = term();
    finish();
    return t;
  }

  pt_poly whole_poly()
  {
    auto p = poly();
    finish();
    return p;
  }

  expr whole_expr()
  {
    std::vector<pt_poly> factors;
    expect( "(" );
    factors.push_back( poly() );
    expect( ")" );
    while ( accept( "(*)" ) )
    {
      expect( "(" );
      factors.push_back( poly() );
      expect( ")" );
    }
    finish();
    return expr( std::move( factors ) );
  }

  var_set whole_idlist()
  {
    auto s = idlist();
    finish();
    return s;
  }

private:
  atomic_term term()
  {
    if ( accept( "0" ) )
      return atomic_term::zero();
    if ( accept( "1" ) )
      return atomic_term::one();
    expect( "S" );
    auto base = idlist();
    expect( ".P" );
    auto power = idlist();
    return atomic_term::make( std::move( base ), std::move( power ) );
  }

  pt_poly poly()
  {
    std::vector<atomic_term> ts;
    ts.push_back( term() );
    while ( accept( "(+)" ) )
      ts.push_back( term() );
    return pt_poly::from_terms( std::move( ts ) );
  }

  var_set idlist()
  {
    expect( "{" );
    var_set s;
    if ( accept( "}" ) )
      return s;
    do
    {
      std::size_t const start = pos_;
      unsigned long long v = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        v = v * 10 + static_cast<unsigned>( text_[pos_] - '0' );
        if ( v > 0xffffffffull )
          fail( "variable index too large" );
        ++pos_;
      }
      if ( pos_ == start || v == 0 )
        fail( "expected a positive variable index" );
      if ( !s.empty() && v <= s.max() )
        fail( "indices must be strictly ascending" );
      s.insert( static_cast<var_id>( v ) );
    } while ( accept( "," ) );
    expect( "}" );
    return s;
  }

  bool accept( std::string_view tok )
  {
    if ( std::string_view( text_ ).substr( pos_, tok.size() ) == tok )
    {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect( std::string_view tok )
  {
    if ( !accept( tok ) )
      fail( "expected '" + std::string( tok ) + "'" );
  }

  void finish()
  {
    if ( pos_ != text_.size() )
      fail( "trailing input" );
  }

  [[noreturn]] void fail( std::string const& what ) const
  {
    throw parse_error( what + " at '" + text_.substr( pos_, 16 ) + "'" );
  }

  std::string text_;
  std::size_t pos_ = 0;
};

} // namespace

atomic_term parse_term( std::string_view text )
{
  return pt_parser( text ).whole_term();
}

pt_poly parse_ptpoly( std::string_view text )
{
  return pt_parser( text ).whole_poly();
}

expr parse_expr( std::string_view text )
{
  return pt_parser( text ).whole_expr();
}

var_set parse_idlist( std::string_view text )
{
  return pt_parser( text ).whole_idlist();
}

} // namespace ptpa
