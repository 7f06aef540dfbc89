// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every criterion is exact (zero tolerance) unless noted.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <ptpa/conversions.hpp>
#include <ptpa/errors.hpp>
#include <ptpa/generate.hpp>

using namespace ptpa;

namespace {

constexpr std::uint64_t seed = 20240601;
constexpr var_id sweep_vars = 5;          // criterion 2
constexpr var_id clause_vars = 6;         // criterion 3
constexpr var_id triple_vars = 6;         // criterion 4
constexpr int axiom_triples = 1000;       // criterion 5
constexpr var_id axiom_vars = 8;
constexpr int mobius_random = 500;        // criterion 6
constexpr std::size_t mobius_max_n = 10;
constexpr int random_cnfs = 200;          // criterion 7
constexpr std::size_t cnf_max_vars = 8;
constexpr std::size_t cnf_max_clauses = 12;
constexpr std::size_t cnf_max_width = 4;

std::string fixture( std::string const& name )
{
  std::ifstream in( std::string( PTPA_TEST_DATA ) + "/" + name );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Collects the first few mismatches of a criterion.
struct check
{
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect( bool ok, std::string const& what )
  {
    ++cases;
    if ( ok )
      return;
    if ( failures++ == 0 )
      first = what;
  }
};

/// Every atomic term over x_1..x_n: both constants and each (S, U) with
/// S ∩ U = ∅, |U| ≠ 1, not both empty.
std::vector<atomic_term> all_atomic( var_id n )
{
  std::vector<atomic_term> out{ atomic_term::zero(), atomic_term::one() };
  std::size_t total = 1;
  for ( var_id i = 0; i < n; ++i )
    total *= 3;
  for ( std::size_t code = 0; code < total; ++code )
  {
    var_set s, u;
    auto c = code;
    for ( var_id v = 1; v <= n; ++v, c /= 3 )
    {
      if ( c % 3 == 1 )
        s.insert( v );
      else if ( c % 3 == 2 )
        u.insert( v );
    }
    if ( u.size() == 1 || ( s.empty() && u.empty() ) )
      continue;
    out.push_back( atomic_term::make( s, u ) );
  }
  return out;
}

bool same( pt_poly const& a, pt_poly const& b )
{
  return eval_ptpoly( a ) == eval_ptpoly( b );
}

/* ---- criteria ------------------------------------------------------------ */

check worked_example()
{
  check c;
  auto const f = parse_dimacs( fixture( "worked.cnf" ) );
  c.expect( to_string( cnf_to_anf_ptpa( f ).anf ) == "x2 + x1*x2", "default schedule ANF" );

  auto const sched = schedule::scripted( parse_schedule_script( fixture( "worked.script" ) ) );
  auto const r = cnf_to_anf_ptpa( f, sched );
  c.expect( to_string( r.anf ) == "x2 + x1*x2", "scripted ANF" );
  c.expect( r.reduced == parse_ptpoly( "S{2}.P{} (+) S{1,2}.P{}" ), "final " + to_string( r.reduced ) );

  std::vector<pt_poly> shown;
  for ( auto const& s : r.trace.steps() )
  {
    if ( s.op == trace_op::mul_poly )
      shown.push_back( s.output );
    else if ( s.op == trace_op::shorten && !shown.empty() && s.inputs[0] == shown.back() )
      shown.back() = s.output;
  }
  char const* const expected[] = {
      "S{}.P{1,2} (+) S{1,4}.P{} (+) S{1,4,5}.P{}",  // p1 p3
      "1 (+) S{1,5}.P{}",                            // p5 p7
      "1 (+) S{1}.P{} (+) S{1,4}.P{}",               // p4 p6
      "S{}.P{2,3} (+) S{1,5}.P{2,3}",                // p2 p2'
      "S{}.P{1,2} (+) S{1}.P{} (+) S{1,4,5}.P{}",    // p1' p3'
      "S{1,2}.P{} (+) S{2}.P{}",                     // final
  };
  c.expect( shown.size() == 6, "six products, got " + std::to_string( shown.size() ) );
  for ( std::size_t i = 0; i < 6 && i < shown.size(); ++i )
    c.expect( shown[i] == parse_ptpoly( expected[i] ), "intermediate " + std::to_string( i + 1 ) + ": " +
                                                             to_string( shown[i] ) );
  return c;
}

check rule_table_sweep()
{
  check c;
  auto const terms = all_atomic( sweep_vars );
  std::vector<bool_poly> values;
  for ( auto const& t : terms )
    values.push_back( eval_ptpoly( pt_poly{ t } ) );
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    for ( std::size_t j = 0; j < terms.size(); ++j )
    {
      try
      {
        auto const [rule, product] = multiply_atomic_traced( terms[i], terms[j] );
        bool const ok = rule.row >= 1 && rule.row <= rule_count && ptpoly_size( product ) <= 3 &&
                        eval_ptpoly( product ) == poly_mul( values[i], values[j] );
        c.expect( ok, to_string( terms[i] ) + " (*) " + to_string( terms[j] ) );
      }
      catch ( no_rule_error const& )
      {
        c.expect( false, "no rule for " + to_string( terms[i] ) + " (*) " + to_string( terms[j] ) );
      }
    }
  }
  return c;
}

check clause_encoding()
{
  check c;
  std::size_t total = 1;
  for ( var_id i = 0; i < clause_vars; ++i )
    total *= 3;
  for ( std::size_t code = 1; code < total; ++code )
  {
    var_set pos, neg;
    auto k = code;
    for ( var_id v = 1; v <= clause_vars; ++v, k /= 3 )
    {
      if ( k % 3 == 1 )
        pos.insert( v );
      else if ( k % 3 == 2 )
        neg.insert( v );
    }
    auto const cl = clause::make( pos, neg );
    auto const p = encode_clause( cl );
    auto const t = to_truth_table( eval_ptpoly( p ), clause_vars );
    bool ok = ptpoly_size( p ) <= 3;
    for ( std::size_t a = 0; a < t.rows() && ok; ++a )
    {
      bool sat = false;
      for ( auto v : pos )
        sat = sat || ( ( a >> ( v - 1 ) ) & 1u );
      for ( auto v : neg )
        sat = sat || !( ( a >> ( v - 1 ) ) & 1u );
      ok = t.bits[a] == ( sat ? 1 : 0 );
    }
    c.expect( ok, to_string( cl ) );
  }
  return c;
}

check expansion_identities()
{
  check c;
  std::size_t total = 1;
  for ( var_id i = 0; i < triple_vars; ++i )
    total *= 4;
  // each variable goes to S, T, V or nowhere
  for ( std::size_t code = 0; code < total; ++code )
  {
    var_set s, t, v;
    auto k = code;
    for ( var_id x = 1; x <= triple_vars; ++x, k /= 4 )
    {
      if ( k % 4 == 1 )
        s.insert( x );
      else if ( k % 4 == 2 )
        t.insert( x );
      else if ( k % 4 == 3 )
        v.insert( x );
    }
    if ( t.empty() || v.empty() || ( t.size() == 1 && v.size() > 1 ) )
      continue;
    auto const term = atomic_term::make( s, t | v );
    auto const e = expand_term( term, t, v );
    std::string const what = to_string( term ) + " T" + t.to_string() + " V" + v.to_string();
    c.expect( same( e, pt_poly{ term } ), "semantics " + what );
    c.expect( shorten( e ) == pt_poly{ term }, "shorten " + what + " gives " + to_string( shorten( e ) ) );
  }
  return c;
}

pt_poly random_poly( std::mt19937_64& rng )
{
  std::vector<atomic_term> ts;
  auto const k = rng() % 5;
  for ( std::size_t i = 0; i < k; ++i )
  {
    auto const r = rng() % 10;
    if ( r == 0 )
    {
      ts.push_back( atomic_term::one() );
      continue;
    }
    while ( true )
    {
      var_set s, u;
      for ( var_id v = 1; v <= axiom_vars; ++v )
      {
        auto const d = rng() % 6;
        if ( d == 0 )
          s.insert( v );
        else if ( d == 1 )
          u.insert( v );
      }
      if ( u.size() == 1 || ( s.empty() && u.empty() ) )
        continue;
      ts.push_back( atomic_term::make( s, u ) );
      break;
    }
  }
  return pt_poly::from_terms( std::move( ts ) );
}

check algebra_axioms()
{
  check c;
  std::mt19937_64 rng( seed );
  pt_poly const zero{}, one = parse_ptpoly( "1" );
  for ( int i = 0; i < axiom_triples; ++i )
  {
    auto const a = random_poly( rng ), b = random_poly( rng ), d = random_poly( rng );
    auto const mul = []( pt_poly const& x, pt_poly const& y ) { return multiply_ptpoly( x, y ); };
    std::string const what = "(" + to_string( a ) + ", " + to_string( b ) + ", " + to_string( d ) + ")";
    c.expect( same( a + b, b + a ), "add commutes " + what );
    c.expect( same( ( a + b ) + d, a + ( b + d ) ), "add associates " + what );
    c.expect( same( a + zero, a ), "add identity " + what );
    c.expect( ( a + a ).empty(), "add self-inverse " + what );
    c.expect( same( mul( a, b ), mul( b, a ) ), "mul commutes " + what );
    c.expect( same( mul( mul( a, b ), d ), mul( a, mul( b, d ) ) ), "mul associates " + what );
    c.expect( same( mul( a, one ), a ), "mul identity " + what );
    c.expect( mul( a, zero ).empty(), "mul zero " + what );
    c.expect( same( mul( a, b + d ), mul( a, b ) + mul( a, d ) ), "distributes " + what );
  }
  return c;
}

check mobius_transform()
{
  check c;
  c.expect( mobius_table( truth_table( 2, { 0, 1, 1, 0 } ) ).bits == std::vector<std::uint8_t>{ 0, 1, 1, 0 },
            "golden table" );
  c.expect( to_string( mobius( truth_table( 2, { 0, 1, 1, 0 } ) ) ) == "x1 + x2", "golden ANF" );
  for ( std::size_t n = 0; n <= 4; ++n )
  {
    auto const rows = std::size_t{ 1 } << n;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << rows ); ++bits )
    {
      std::vector<std::uint8_t> v( rows );
      for ( std::size_t r = 0; r < rows; ++r )
        v[r] = ( bits >> r ) & 1u;
      truth_table const t( n, v );
      c.expect( mobius_table( mobius_table( t ) ) == t && to_truth_table( mobius( t ), n ) == t,
                "n=" + std::to_string( n ) + " table " + std::to_string( bits ) );
    }
  }
  std::mt19937_64 rng( seed + 6 );
  for ( int i = 0; i < mobius_random; ++i )
  {
    auto const n = rng() % ( mobius_max_n + 1 );
    std::vector<std::uint8_t> v( std::size_t{ 1 } << n );
    for ( auto& b : v )
      b = rng() & 1u;
    truth_table const t( n, v );
    c.expect( mobius_table( mobius_table( t ) ) == t && to_truth_table( mobius( t ), n ) == t,
              "random table " + std::to_string( i ) );
  }
  return c;
}

check strategy_agreement()
{
  check c;
  std::mt19937_64 rng( seed + 7 );
  for ( int i = 0; i < random_cnfs; ++i )
  {
    auto const n = 1 + rng() % cnf_max_vars;
    auto const m = rng() % ( cnf_max_clauses + 1 );
    auto const f = random_cnf( n, m, 1, std::min( n, cnf_max_width ), rng );
    auto const oracle = mobius( cnf_truth_table( f ) );
    auto const direct = expand( cnf_to_anf_direct( f ) );
    auto const twin = cnf_to_anf_twin( f );
    auto const twin_anf = substitute_twins( expand( twin ), twin.twin_map );
    auto const ptpa = cnf_to_anf_ptpa( f ).anf;
    c.expect( direct == oracle && ptpa == oracle, "formula " + std::to_string( i ) + ": " + write_dimacs( f ) );
    // constraint factors become 1 under substitution
    c.expect( twin_anf == oracle, "twin formula " + std::to_string( i ) );
  }
  return c;
}

check conversion_goldens()
{
  check c;
  auto const four = parse_dimacs( fixture( "four_clauses.cnf" ) );
  auto const twin = cnf_to_anf_twin( four );
  std::vector<std::string> const expected{ "1 + x5*x6", "1 + x1*x2*x4", "1 + x1*x3*x8", "1 + x5*x6*x7",
                                           "x1 + x5",   "x2 + x6",      "x3 + x7",      "x4 + x8" };
  c.expect( twin.factors.size() == expected.size(), "twin factor count" );
  for ( std::size_t i = 0; i < expected.size() && i < twin.factors.size(); ++i )
    c.expect( to_string( twin.factors[i] ) == expected[i], "twin factor " + to_string( twin.factors[i] ) );

  auto const p = parse_anf( fixture( "linearize.anf" ) );
  auto const split = anf_to_cnf_split( p, 3 );
  c.expect( split.aux.size() == 2, "two aux variables" );
  if ( split.aux.size() == 2 )
  {
    c.expect( split.aux[0] == aux_definition{ 4, aux_definition::kind_type::product_of, { 1, 2 } }, "product aux" );
    c.expect( split.aux[1] == aux_definition{ 5, aux_definition::kind_type::xor_chunk, { 3, 4 } }, "xor aux" );
  }
  std::vector<std::vector<int>> const defining{ { -1, -2, 4 }, { 1, -4 }, { 2, -4 } };
  for ( std::size_t i = 0; i < 3; ++i )
    c.expect( split.cnf.clauses.size() > i && split.cnf.clauses[i].literals() == defining[i],
              "defining clause " + std::to_string( i + 1 ) );

  auto const counts = model_projection_counts( split.cnf, 3 );
  auto const table = to_truth_table( p, 3 );
  for ( std::size_t a = 0; a < table.rows(); ++a )
    c.expect( counts[a] == table.bits[a], "projection row " + std::to_string( a ) );
  return c;
}

check minimal_witnesses()
{
  check c;
  auto const pi = parse_ptpoly( "S{1}.P{} (+) S{2}.P{}" );
  auto const rho = parse_ptpoly( "S{}.P{1,2} (+) S{1,2}.P{}" );
  c.expect( eval_ptpoly( pi ) == parse_anf( "x1 + x2" ) && eval_ptpoly( rho ) == eval_ptpoly( pi ), "x1 + x2" );
  c.expect( ptpoly_size( pi ) == 2 && ptpoly_size( rho ) == 2, "size 2" );

  auto const pi2 = parse_ptpoly( "S{}.P{1,2,3} (+) S{1,2,3}.P{} (+) S{2,3}.P{}" );
  auto const rho2 = parse_ptpoly( "S{}.P{1,2} (+) S{3}.P{} (+) S{1,3}.P{}" );
  c.expect( eval_ptpoly( pi2 ) == parse_anf( "x1 + x2 + x3 + x1*x2 + x1*x3" ) &&
                eval_ptpoly( rho2 ) == eval_ptpoly( pi2 ),
            "x1 + x2 + x3 + x1*x2 + x1*x3" );
  c.expect( ptpoly_size( pi2 ) == 3 && ptpoly_size( rho2 ) == 3, "size 3" );
  return c;
}

} // namespace

int main()
{
  struct criterion
  {
    int id;
    char const* name;
    std::function<check()> run;
  };
  criterion const criteria[] = {
      { 1, "worked example and its intermediates", worked_example },
      { 2, "rule table over all atomic pairs on 5 variables", rule_table_sweep },
      { 3, "clause encoding over all clauses on 6 variables", clause_encoding },
      { 4, "expansion identities over all splits on 6 variables", expansion_identities },
      { 5, "ring axioms on random triples", algebra_axioms },
      { 6, "Moebius golden and involution", mobius_transform },
      { 7, "strategy agreement on random CNFs", strategy_agreement },
      { 8, "twin and split conversion goldens", conversion_goldens },
      { 9, "equal-size minimal representations", minimal_witnesses },
  };

  bool all = true;
  for ( auto const& cr : criteria )
  {
    auto const start = std::chrono::steady_clock::now();
    check result;
    try
    {
      result = cr.run();
    }
    catch ( std::exception const& e )
    {
      result.expect( false, std::string( "exception: " ) + e.what() );
    }
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - start );
    bool const pass = result.failures == 0;
    all = all && pass;
    std::cout << ( pass ? "PASS" : "FAIL" ) << " " << cr.id << " " << cr.name << " (" << result.cases
              << " checks, " << ms.count() << " ms)";
    if ( !pass )
      std::cout << ": " << result.failures << " failed, first: " << result.first;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
