#include <ptpa/rewrite.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

#include <ptpa/errors.hpp>

namespace ptpa {

std::vector<script_step> parse_schedule_script( std::string_view text )
{
  static std::regex const mul_re( R"(^\s*mul\s+(\d+)\s+(\d+)\s*$)" );
  static std::regex const shorten_re( R"(^\s*shorten\s+(\d+)\s*$)" );
  static std::regex const expand_re( R"(^\s*expand\s+(\d+)\s+(.+?)\s+T\s*(\{[^}]*\})\s*V\s*(\{[^}]*\})\s*$)" );

  std::vector<script_step> steps;
  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( auto hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    if ( std::all_of( line.begin(), line.end(), []( unsigned char c ) { return std::isspace( c ); } ) )
      continue;

    std::smatch m;
    script_step s;
    if ( std::regex_match( line, m, mul_re ) )
    {
      s.op = script_step::op_type::mul;
      s.first = std::stoul( m[1] );
      s.second = std::stoul( m[2] );
    }
    else if ( std::regex_match( line, m, shorten_re ) )
    {
      s.op = script_step::op_type::shorten;
      s.first = std::stoul( m[1] );
    }
    else if ( std::regex_match( line, m, expand_re ) )
    {
      s.op = script_step::op_type::expand;
      s.first = std::stoul( m[1] );
      try
      {
        s.term = parse_term( m[2].str() );
        s.split_t = parse_idlist( m[3].str() );
        s.split_v = parse_idlist( m[4].str() );
      }
      catch ( parse_error const& e )
      {
        throw parse_error( e.what(), lineno );
      }
    }
    else
    {
      throw parse_error( "unrecognized schedule instruction '" + line + "'", lineno );
    }
    if ( s.first == 0 || ( s.op == script_step::op_type::mul && ( s.second == 0 || s.second == s.first ) ) )
      throw parse_error( "factor positions are 1-based and must differ", lineno );
    steps.push_back( std::move( s ) );
  }
  return steps;
}

namespace {

class reducer
{
public:
  reducer( expr const& e, reduce_options const& opts )
      : factors_( e.factors() ), opts_( opts ), trace_( opts.record_trace )
  {
    if ( trace_.keeps_steps() )
    {
      trace_step init;
      init.op = trace_op::init;
      init.inputs = factors_;
      trace_.add( std::move( init ) );
    }
  }

  void run( schedule const& sched )
  {
    if ( sched.policy == schedule::policy_type::script )
    {
      for ( auto const& s : sched.steps )
        apply( s );
    }
    while ( factors_.size() > 1 )
    {
      auto const [i, j] = sched.policy == schedule::policy_type::left ? std::pair<std::size_t, std::size_t>{ 0, 1 }
                                                                       : smallest_pair();
      multiply( i, j );
    }
    if ( trace_.keeps_steps() )
    {
      trace_step done;
      done.op = trace_op::result;
      done.output = factors_.front();
      trace_.add( std::move( done ) );
    }
  }

  reduce_result finish() { return { std::move( factors_.front() ), std::move( trace_ ) }; }

private:
  void apply( script_step const& s )
  {
    check_position( s.first );
    switch ( s.op )
    {
    case script_step::op_type::mul:
      check_position( s.second );
      multiply( s.first - 1, s.second - 1 );
      break;
    case script_step::op_type::shorten:
      factors_[s.first - 1] = shorten( factors_[s.first - 1], opts_.shorten_opts, &trace_, s.first );
      break;
    case script_step::op_type::expand:
    {
      auto& f = factors_[s.first - 1];
      if ( !s.term || !f.contains( *s.term ) )
        throw invalid_split_error( "factor " + std::to_string( s.first ) + " does not contain " +
                                   ( s.term ? to_string( *s.term ) : std::string( "a term" ) ) );
      auto const which = classify_split( *s.term, s.split_t, s.split_v );
      auto next = f;
      next += *s.term;
      next += expand_term( *s.term, s.split_t, s.split_v, opts_.lim );
      if ( trace_.keeps_steps() )
      {
        trace_step step;
        step.op = trace_op::expand;
        step.rewrite_case = static_cast<int>( which );
        step.positions = { s.first };
        step.inputs = { f, pt_poly{ *s.term } };
        step.split_t = s.split_t;
        step.split_v = s.split_v;
        step.output = next;
        trace_.add( std::move( step ) );
      }
      f = std::move( next );
      break;
    }
    }
  }

  void check_position( std::size_t pos ) const
  {
    if ( pos == 0 || pos > factors_.size() )
      throw invalid_split_error( "factor position " + std::to_string( pos ) + " out of range 1.." +
                                 std::to_string( factors_.size() ) );
  }

  std::pair<std::size_t, std::size_t> smallest_pair() const
  {
    std::vector<std::size_t> order( factors_.size() );
    std::iota( order.begin(), order.end(), std::size_t{ 0 } );
    std::stable_sort( order.begin(), order.end(), [&]( std::size_t a, std::size_t b ) {
      return ptpoly_size( factors_[a] ) < ptpoly_size( factors_[b] );
    } );
    return { order[0], order[1] };
  }

  void multiply( std::size_t i, std::size_t j )
  {
    auto const lo = std::min( i, j ), hi = std::max( i, j );
    auto product = multiply_ptpoly( factors_[lo], factors_[hi], &trace_ );
    if ( trace_.keeps_steps() )
    {
      trace_step step;
      step.op = trace_op::mul_poly;
      step.positions = { lo + 1, hi + 1 };
      step.inputs = { factors_[lo], factors_[hi] };
      step.output = product;
      trace_.add( std::move( step ) );
    }
    if ( opts_.shorten_between_rounds )
      product = shorten( std::move( product ), opts_.shorten_opts, &trace_, lo + 1 );
    factors_[lo] = std::move( product );
    factors_.erase( factors_.begin() + static_cast<std::ptrdiff_t>( hi ) );
  }

  std::vector<pt_poly> factors_;
  reduce_options const& opts_;
  rewrite_trace trace_;
};

} // namespace

reduce_result expr_reduce( expr const& e, schedule const& sched, reduce_options const& opts )
{
  reducer r( e, opts );
  r.run( sched );
  return r.finish();
}

} // namespace ptpa
