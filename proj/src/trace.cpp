#include <ptpa/trace.hpp>

#include <regex>
#include <sstream>

#include <ptpa/errors.hpp>
#include <ptpa/rewrite.hpp>

namespace ptpa {

void rewrite_trace::add( trace_step step )
{
  if ( keep_steps_ )
    steps_.push_back( std::move( step ) );
}

void rewrite_trace::count_rule( rule_id r )
{
  if ( r.row >= 1 && r.row <= rule_count )
    ++histogram_[static_cast<std::size_t>( r.row - 1 )];
}

std::size_t rewrite_trace::atomic_multiplications() const
{
  std::size_t n = 0;
  for ( auto c : histogram_ )
    n += c;
  return n;
}

std::string_view to_string( trace_op op )
{
  switch ( op )
  {
  case trace_op::init:
    return "init";
  case trace_op::mul_atomic:
    return "mul_atomic";
  case trace_op::mul_poly:
    return "mul_poly";
  case trace_op::expand:
    return "expand";
  case trace_op::shorten:
    return "shorten";
  case trace_op::result:
    return "result";
  }
  return "?";
}

namespace {

std::string join_inputs( std::vector<pt_poly> const& ps )
{
  if ( ps.empty() )
    return "-";
  std::string s;
  for ( auto const& p : ps )
  {
    if ( !s.empty() )
      s += " ; ";
    s += to_string( p );
  }
  return s;
}

std::string step_id( trace_step const& s )
{
  switch ( s.op )
  {
  case trace_op::mul_atomic:
    return "R" + std::to_string( s.rule ? s.rule->row : 0 );
  case trace_op::mul_poly:
    return "@" + std::to_string( s.positions.at( 0 ) ) + "," + std::to_string( s.positions.at( 1 ) );
  case trace_op::expand:
    return "C" + std::to_string( s.rewrite_case ) + "@" + std::to_string( s.positions.at( 0 ) ) + " T" +
           s.split_t.to_string() + " V" + s.split_v.to_string();
  case trace_op::shorten:
    return "C" + std::to_string( s.rewrite_case ) + "@" + std::to_string( s.positions.at( 0 ) );
  default:
    return "-";
  }
}

trace_op op_from_name( std::string const& name, std::size_t line )
{
  for ( auto op : { trace_op::init, trace_op::mul_atomic, trace_op::mul_poly, trace_op::expand, trace_op::shorten,
                    trace_op::result } )
  {
    if ( to_string( op ) == name )
      return op;
  }
  throw parse_error( "unknown trace operation '" + name + "'", line );
}

std::vector<std::string> split( std::string const& s, std::string const& sep )
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while ( true )
  {
    auto const pos = s.find( sep, start );
    out.push_back( s.substr( start, pos - start ) );
    if ( pos == std::string::npos )
      break;
    start = pos + sep.size();
  }
  return out;
}

atomic_term single_term( pt_poly const& p, std::size_t step )
{
  if ( p.term_count() != 1 )
    throw trace_mismatch( "step " + std::to_string( step ) + ": expected a single atomic operand, got " +
                          to_string( p ) );
  return p.terms().front();
}

} // namespace

std::string serialize( rewrite_trace const& t )
{
  std::string out;
  std::size_t n = 0;
  for ( auto const& s : t.steps() )
  {
    out += std::to_string( ++n );
    out += '\t';
    out += to_string( s.op );
    out += '\t';
    out += step_id( s );
    out += '\t';
    out += join_inputs( s.inputs );
    out += '\t';
    out += s.op == trace_op::init ? std::string( "-" ) : to_string( s.output );
    out += '\n';
  }
  return out;
}

rewrite_trace parse_trace( std::string_view text )
{
  static std::regex const rule_re( R"(^R(\d+)$)" );
  static std::regex const pair_re( R"(^@(\d+),(\d+)$)" );
  static std::regex const shorten_re( R"(^C([123])@(\d+)$)" );
  static std::regex const expand_re( R"(^C([123])@(\d+) T(\{[^}]*\}) V(\{[^}]*\})$)" );

  rewrite_trace t;
  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( line.empty() )
      continue;
    auto const cols = split( line, "\t" );
    if ( cols.size() != 5 )
      throw parse_error( "trace lines have 5 tab-separated columns", lineno );

    trace_step s;
    s.op = op_from_name( cols[1], lineno );
    try
    {
      if ( cols[3] != "-" )
      {
        for ( auto const& item : split( cols[3], " ; " ) )
          s.inputs.push_back( parse_ptpoly( item ) );
      }
      if ( cols[4] != "-" )
        s.output = parse_ptpoly( cols[4] );

      std::smatch m;
      switch ( s.op )
      {
      case trace_op::mul_atomic:
        if ( !std::regex_match( cols[2], m, rule_re ) )
          throw parse_error( "bad rule id '" + cols[2] + "'", lineno );
        s.rule = rule_id{ std::stoi( m[1] ) };
        t.count_rule( *s.rule );
        break;
      case trace_op::mul_poly:
        if ( !std::regex_match( cols[2], m, pair_re ) )
          throw parse_error( "bad factor pair '" + cols[2] + "'", lineno );
        s.positions = { std::stoul( m[1] ), std::stoul( m[2] ) };
        break;
      case trace_op::shorten:
        if ( !std::regex_match( cols[2], m, shorten_re ) )
          throw parse_error( "bad shorten id '" + cols[2] + "'", lineno );
        s.rewrite_case = std::stoi( m[1] );
        s.positions = { std::stoul( m[2] ) };
        break;
      case trace_op::expand:
        if ( !std::regex_match( cols[2], m, expand_re ) )
          throw parse_error( "bad expand id '" + cols[2] + "'", lineno );
        s.rewrite_case = std::stoi( m[1] );
        s.positions = { std::stoul( m[2] ) };
        s.split_t = parse_idlist( m[3].str() );
        s.split_v = parse_idlist( m[4].str() );
        break;
      default:
        break;
      }
    }
    catch ( parse_error const& e )
    {
      if ( e.line )
        throw;
      throw parse_error( e.what(), lineno );
    }
    t.add( std::move( s ) );
  }
  return t;
}

pt_poly replay( rewrite_trace const& t )
{
  return replay( t, shorten_options{} );
}

pt_poly replay( rewrite_trace const& t, shorten_options const& opts )
{
  auto const& steps = t.steps();
  if ( steps.empty() || steps.front().op != trace_op::init )
    throw trace_mismatch( "a trace starts with its init step" );

  std::vector<pt_poly> factors = steps.front().inputs;
  std::vector<pt_poly> pending;

  auto fail = []( std::size_t n, std::string const& what ) {
    throw trace_mismatch( "step " + std::to_string( n ) + ": " + what );
  };
  auto factor_at = [&]( std::size_t n, std::size_t pos ) -> pt_poly& {
    if ( pos == 0 || pos > factors.size() )
      fail( n, "factor position " + std::to_string( pos ) + " out of range" );
    return factors[pos - 1];
  };

  for ( std::size_t k = 1; k < steps.size(); ++k )
  {
    auto const& s = steps[k];
    auto const n = k + 1;
    switch ( s.op )
    {
    case trace_op::init:
      fail( n, "second init step" );
      break;
    case trace_op::mul_atomic:
    {
      if ( s.inputs.size() != 2 )
        fail( n, "atomic product needs two operands" );
      auto const [rule, product] = multiply_atomic_traced( single_term( s.inputs[0], n ), single_term( s.inputs[1], n ) );
      if ( !s.rule || rule != *s.rule )
        fail( n, "rule R" + std::to_string( rule.row ) + " fires, trace says R" +
                     std::to_string( s.rule ? s.rule->row : 0 ) );
      if ( product != s.output )
        fail( n, "atomic product is " + to_string( product ) );
      pending.push_back( product );
      break;
    }
    case trace_op::mul_poly:
    {
      if ( s.positions.size() != 2 || s.inputs.size() != 2 || s.positions[0] == s.positions[1] )
        fail( n, "polynomial product needs two distinct factors" );
      auto const lo = std::min( s.positions[0], s.positions[1] ), hi = std::max( s.positions[0], s.positions[1] );
      if ( factor_at( n, s.positions[0] ) != s.inputs[0] || factor_at( n, s.positions[1] ) != s.inputs[1] )
        fail( n, "operands differ from the current factors" );
      auto const product = multiply_ptpoly( s.inputs[0], s.inputs[1] );
      if ( product != s.output )
        fail( n, "product is " + to_string( product ) );
      if ( !pending.empty() )
      {
        pt_poly sum;
        for ( auto const& p : pending )
          sum += p;
        if ( pending.size() != s.inputs[0].term_count() * s.inputs[1].term_count() || sum != s.output )
          fail( n, "recorded atomic products do not add up to the product" );
      }
      pending.clear();
      factors[lo - 1] = s.output;
      factors.erase( factors.begin() + static_cast<std::ptrdiff_t>( hi - 1 ) );
      break;
    }
    case trace_op::shorten:
    {
      if ( s.positions.size() != 1 || s.inputs.size() != 1 )
        fail( n, "shorten names one factor" );
      auto& f = factor_at( n, s.positions[0] );
      if ( f != s.inputs[0] )
        fail( n, "input differs from the current factor" );
      auto const found = find_shortening( f, opts );
      if ( !found || static_cast<int>( found->which ) != s.rewrite_case )
        fail( n, "no case-" + std::to_string( s.rewrite_case ) + " pattern is next" );
      auto next = f;
      for ( auto const& r : found->replaced )
        next += r;
      next += found->merged;
      if ( next != s.output )
        fail( n, "shortened factor is " + to_string( next ) );
      f = next;
      break;
    }
    case trace_op::expand:
    {
      if ( s.positions.size() != 1 || s.inputs.size() != 2 )
        fail( n, "expand names one factor and one term" );
      auto& f = factor_at( n, s.positions[0] );
      if ( f != s.inputs[0] )
        fail( n, "input differs from the current factor" );
      auto const term = single_term( s.inputs[1], n );
      if ( !f.contains( term ) )
        fail( n, "factor does not contain " + to_string( term ) );
      if ( static_cast<int>( classify_split( term, s.split_t, s.split_v ) ) != s.rewrite_case )
        fail( n, "split case differs" );
      auto next = f;
      next += term;
      next += expand_term( term, s.split_t, s.split_v );
      if ( next != s.output )
        fail( n, "expanded factor is " + to_string( next ) );
      f = next;
      break;
    }
    case trace_op::result:
      if ( factors.size() != 1 )
        fail( n, std::to_string( factors.size() ) + " factors remain" );
      if ( factors.front() != s.output )
        fail( n, "result is " + to_string( factors.front() ) );
      return s.output;
    }
  }
  throw trace_mismatch( "trace has no result step" );
}

} // namespace ptpa
