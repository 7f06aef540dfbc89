#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace ptpa {

/// Variable index, 1-based (x_1 .. x_n).
using var_id = std::uint32_t;

/// Finite set of variable indices.
///
/// Variables 1..64 live in a single machine word; larger indices spill into
/// an overflow vector of words that is kept trimmed, so the common case never
/// allocates. Iteration is always in ascending index order.
class var_set
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = var_id;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = var_id;

    iterator() = default;
    var_id operator*() const { return static_cast<var_id>( word_ * 64 + std::countr_zero( bits_ ) + 1 ); }
    iterator& operator++()
    {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    iterator operator++( int )
    {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==( iterator const& o ) const { return word_ == o.word_ && bits_ == o.bits_; }

  private:
    friend class var_set;
    iterator( var_set const* s, std::size_t word ) : set_( s ), word_( word )
    {
      bits_ = word_ < set_->word_count() ? set_->word( word_ ) : 0;
      advance();
    }
    void advance()
    {
      while ( bits_ == 0 && word_ < set_->word_count() )
      {
        ++word_;
        bits_ = word_ < set_->word_count() ? set_->word( word_ ) : 0;
      }
    }

    var_set const* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  var_set() = default;
  var_set( std::initializer_list<var_id> vars );

  template<typename It>
  var_set( It first, It last )
  {
    for ( ; first != last; ++first )
      insert( static_cast<var_id>( *first ) );
  }

  /// Set whose members are the 1-based positions of the set bits of `mask`.
  static var_set from_mask( std::uint64_t mask );
  /// {first, ..., last}; empty when last < first.
  static var_set range( var_id first, var_id last );

  void insert( var_id v );
  void erase( var_id v );
  bool contains( var_id v ) const;

  std::size_t size() const;
  bool empty() const { return lo_ == 0 && hi_.empty(); }
  /// Largest member, 0 for the empty set.
  var_id max() const;
  var_id min() const;

  /// True when every member is ≤ 64; `mask()` is then the whole set.
  bool fits_word() const { return hi_.empty(); }
  std::uint64_t mask() const { return lo_; }

  bool is_subset_of( var_set const& o ) const;
  bool intersects( var_set const& o ) const;

  var_set& operator|=( var_set const& o );
  var_set& operator&=( var_set const& o );
  var_set& operator-=( var_set const& o );
  var_set& operator^=( var_set const& o );

  friend var_set operator|( var_set a, var_set const& b ) { return a |= b; }
  friend var_set operator&( var_set a, var_set const& b ) { return a &= b; }
  friend var_set operator-( var_set a, var_set const& b ) { return a -= b; }
  friend var_set operator^( var_set a, var_set const& b ) { return a ^= b; }

  bool operator==( var_set const& o ) const = default;

  iterator begin() const { return iterator( this, 0 ); }
  iterator end() const { return iterator( this, word_count() ); }

  std::vector<var_id> to_vector() const;
  std::size_t hash() const;

  /// "{1,2,5}"; the empty set prints as "{}".
  std::string to_string() const;

private:
  std::size_t word_count() const { return 1 + hi_.size(); }
  std::uint64_t word( std::size_t i ) const { return i == 0 ? lo_ : hi_[i - 1]; }
  void trim();

  std::uint64_t lo_ = 0;
  std::vector<std::uint64_t> hi_;
};

/// Lexicographic order on the ascending member sequences: {} < {1} < {1,2} < {2}.
std::strong_ordering compare_lex( var_set const& a, var_set const& b );

/// Degree first, then lexicographic: {} < {2} < {1,2} < {1,3}.
std::strong_ordering compare_graded( var_set const& a, var_set const& b );

struct lex_less
{
  bool operator()( var_set const& a, var_set const& b ) const { return compare_lex( a, b ) < 0; }
};

struct graded_less
{
  bool operator()( var_set const& a, var_set const& b ) const { return compare_graded( a, b ) < 0; }
};

} // namespace ptpa

template<>
struct std::hash<ptpa::var_set>
{
  std::size_t operator()( ptpa::var_set const& s ) const noexcept { return s.hash(); }
};
