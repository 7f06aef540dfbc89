#include <ptpa/varset.hpp>

#include <algorithm>
#include <stdexcept>

namespace ptpa {

var_set::var_set( std::initializer_list<var_id> vars )
{
  for ( auto v : vars )
    insert( v );
}

var_set var_set::from_mask( std::uint64_t mask )
{
  var_set s;
  s.lo_ = mask;
  return s;
}

var_set var_set::range( var_id first, var_id last )
{
  var_set s;
  for ( var_id v = first; v <= last && v >= first; ++v )
    s.insert( v );
  return s;
}

void var_set::insert( var_id v )
{
  if ( v == 0 )
    throw std::out_of_range( "variable indices are 1-based" );
  auto const bit = v - 1;
  if ( bit < 64 )
  {
    lo_ |= std::uint64_t{ 1 } << bit;
    return;
  }
  auto const w = bit / 64;
  if ( hi_.size() < w )
    hi_.resize( w, 0 );
  hi_[w - 1] |= std::uint64_t{ 1 } << ( bit % 64 );
}

void var_set::erase( var_id v )
{
  if ( v == 0 )
    return;
  auto const bit = v - 1;
  if ( bit < 64 )
  {
    lo_ &= ~( std::uint64_t{ 1 } << bit );
    return;
  }
  auto const w = bit / 64;
  if ( w <= hi_.size() )
  {
    hi_[w - 1] &= ~( std::uint64_t{ 1 } << ( bit % 64 ) );
    trim();
  }
}

bool var_set::contains( var_id v ) const
{
  if ( v == 0 )
    return false;
  auto const bit = v - 1;
  auto const w = bit / 64;
  if ( w >= word_count() )
    return false;
  return ( word( w ) >> ( bit % 64 ) ) & 1u;
}

std::size_t var_set::size() const
{
  std::size_t n = std::popcount( lo_ );
  for ( auto w : hi_ )
    n += std::popcount( w );
  return n;
}

var_id var_set::max() const
{
  for ( auto i = word_count(); i-- > 0; )
  {
    if ( auto w = word( i ) )
      return static_cast<var_id>( i * 64 + 64 - std::countl_zero( w ) );
  }
  return 0;
}

var_id var_set::min() const
{
  return empty() ? 0 : *begin();
}

bool var_set::is_subset_of( var_set const& o ) const
{
  if ( hi_.size() > o.hi_.size() )
    return false;
  for ( std::size_t i = 0; i < word_count(); ++i )
  {
    if ( word( i ) & ~o.word( i ) )
      return false;
  }
  return true;
}

bool var_set::intersects( var_set const& o ) const
{
  auto const n = std::min( word_count(), o.word_count() );
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( word( i ) & o.word( i ) )
      return true;
  }
  return false;
}

var_set& var_set::operator|=( var_set const& o )
{
  lo_ |= o.lo_;
  if ( hi_.size() < o.hi_.size() )
    hi_.resize( o.hi_.size(), 0 );
  for ( std::size_t i = 0; i < o.hi_.size(); ++i )
    hi_[i] |= o.hi_[i];
  return *this;
}

var_set& var_set::operator&=( var_set const& o )
{
  lo_ &= o.lo_;
  if ( hi_.size() > o.hi_.size() )
    hi_.resize( o.hi_.size() );
  for ( std::size_t i = 0; i < hi_.size(); ++i )
    hi_[i] &= o.hi_[i];
  trim();
  return *this;
}

var_set& var_set::operator-=( var_set const& o )
{
  lo_ &= ~o.lo_;
  auto const n = std::min( hi_.size(), o.hi_.size() );
  for ( std::size_t i = 0; i < n; ++i )
    hi_[i] &= ~o.hi_[i];
  trim();
  return *this;
}

var_set& var_set::operator^=( var_set const& o )
{
  lo_ ^= o.lo_;
  if ( hi_.size() < o.hi_.size() )
    hi_.resize( o.hi_.size(), 0 );
  for ( std::size_t i = 0; i < o.hi_.size(); ++i )
    hi_[i] ^= o.hi_[i];
  trim();
  return *this;
}

std::vector<var_id> var_set::to_vector() const
{
  return { begin(), end() };
}

std::size_t var_set::hash() const
{
  // splitmix64 finalizer per word
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for ( std::size_t i = 0; i < word_count(); ++i )
  {
    std::uint64_t z = word( i ) + 0x9e3779b97f4a7c15ull * ( i + 1 ) + h;
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    h = z ^ ( z >> 31 );
  }
  return static_cast<std::size_t>( h );
}

std::string var_set::to_string() const
{
  std::string s = "{";
  bool first = true;
  for ( auto v : *this )
  {
    if ( !first )
      s += ',';
    s += std::to_string( v );
    first = false;
  }
  return s + "}";
}

void var_set::trim()
{
  while ( !hi_.empty() && hi_.back() == 0 )
    hi_.pop_back();
}

std::strong_ordering compare_lex( var_set const& a, var_set const& b )
{
  if ( a.fits_word() && b.fits_word() )
  {
    auto const x = a.mask(), y = b.mask();
    if ( x == y )
      return std::strong_ordering::equal;
    // first differing element decides; the set lacking it is smaller unless
    // it has no further elements (then it is a proper prefix)
    auto const p = std::countr_zero( x ^ y );
    auto const above = p == 63 ? 0 : ~std::uint64_t{ 0 } << ( p + 1 );
    if ( ( x >> p ) & 1u )
      return ( y & above ) == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    return ( x & above ) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  auto ia = a.begin(), ib = b.begin();
  auto const ea = a.end(), eb = b.end();
  for ( ; ia != ea && ib != eb; ++ia, ++ib )
  {
    if ( *ia != *ib )
      return *ia < *ib ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if ( ia == ea && ib == eb )
    return std::strong_ordering::equal;
  return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_graded( var_set const& a, var_set const& b )
{
  if ( auto c = a.size() <=> b.size(); c != 0 )
    return c;
  return compare_lex( a, b );
}

} // namespace ptpa
