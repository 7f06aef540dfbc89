#include <ptpa/cnf.hpp>

#include <charconv>
#include <sstream>

#include <ptpa/errors.hpp>
#include <ptpa/kernels.hpp>

namespace ptpa {

namespace {

bool parse_int( std::string const& tok, long& out )
{
  auto const* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars( tok.data(), end, out );
  return ec == std::errc{} && ptr == end;
}

} // namespace

cnf_formula parse_dimacs( std::string_view text, std::vector<std::string>* warnings )
{
  cnf_formula f;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<int> pending;
  std::size_t clause_line = 0;

  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    std::istringstream words( line );
    std::string tok;
    if ( !( words >> tok ) || tok[0] == 'c' )
      continue;
    if ( tok == "%" )
      break;

    if ( tok == "p" )
    {
      if ( have_header )
        throw malformed_header( "second problem line", lineno );
      std::string format, extra;
      long n = -1, m = -1;
      std::string ns, ms;
      if ( !( words >> format >> ns >> ms ) || format != "cnf" || !parse_int( ns, n ) || !parse_int( ms, m ) ||
           n < 0 || m < 0 || ( words >> extra ) )
        throw malformed_header( "expected \"p cnf <vars> <clauses>\"", lineno );
      f.n = static_cast<std::size_t>( n );
      declared = static_cast<std::size_t>( m );
      have_header = true;
      continue;
    }

    if ( !have_header )
      throw malformed_header( "clause data before the \"p cnf\" line", lineno );

    do
    {
      long lit = 0;
      if ( !parse_int( tok, lit ) )
        throw literal_out_of_range( "'" + tok + "' is not a literal", lineno );
      if ( lit == 0 )
      {
        f.clauses.push_back( clause::from_literals( pending, clause_line ? clause_line : lineno ) );
        pending.clear();
        clause_line = 0;
        continue;
      }
      if ( static_cast<std::size_t>( lit < 0 ? -lit : lit ) > f.n )
        throw literal_out_of_range( "literal " + tok + " exceeds " + std::to_string( f.n ) + " variables", lineno );
      if ( pending.empty() )
        clause_line = lineno;
      pending.push_back( static_cast<int>( lit ) );
    } while ( words >> tok );
  }

  if ( !pending.empty() )
    throw unterminated_clause( "clause is missing its terminating 0", clause_line );
  if ( !have_header )
    throw malformed_header( "no \"p cnf\" line", lineno );
  if ( warnings && f.clauses.size() != declared )
    warnings->push_back( "header declares " + std::to_string( declared ) + " clauses, found " +
                         std::to_string( f.clauses.size() ) );
  return f;
}

std::string write_dimacs( cnf_formula const& f )
{
  std::string out = "p cnf " + std::to_string( f.n ) + " " + std::to_string( f.clauses.size() ) + "\n";
  for ( auto const& c : f.clauses )
  {
    for ( int lit : c.literals() )
    {
      out += std::to_string( lit );
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

truth_table cnf_truth_table( cnf_formula const& f, limits const& lim )
{
  if ( f.n > lim.oracle_cap || f.n > 63 )
    throw domain_too_large( "truth table of " + std::to_string( f.n ) + " variables exceeds the oracle cap of " +
                            std::to_string( lim.oracle_cap ) );
  std::vector<kernels::packed_clause> packed;
  packed.reserve( f.clauses.size() );
  for ( auto const& c : f.clauses )
  {
    if ( c.variables().max() > f.n )
      throw domain_mismatch( to_string( c ) + " mentions variables beyond " + std::to_string( f.n ) );
    packed.push_back( { c.positives.mask(), c.negatives.mask() } );
  }
  std::vector<std::uint8_t> bits( std::size_t{ 1 } << f.n );
  kernels::omp::evaluate_cnf( packed, f.n, bits );
  return truth_table( f.n, std::move( bits ) );
}

} // namespace ptpa
