#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

std::string data( std::string const& name )
{
  return std::string( PTPA_TEST_DATA ) + "/" + name;
}

struct outcome
{
  int code;
  std::string out;
  std::string err;
};

outcome run( std::vector<std::string> args )
{
  args.insert( args.begin(), "ptpa" );
  std::vector<char const*> argv;
  for ( auto const& a : args )
    argv.push_back( a.c_str() );
  std::ostringstream out, err;
  int const code = ptpa::cli::run( static_cast<int>( argv.size() ), argv.data(), out, err );
  return { code, out.str(), err.str() };
}

fs::path scratch( std::string const& name )
{
  auto const dir = fs::temp_directory_path() / ( "ptpa_cli_" + name );
  fs::remove_all( dir );
  fs::create_directories( dir );
  return dir;
}

} // namespace

TEST( Cli, ConvertCnf )
{
  auto const r = run( { "convert", data( "worked.cnf" ) } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "x2 + x1*x2\n" );
  EXPECT_EQ( run( { "convert", data( "xor2.cnf" ), "--strategy", "direct" } ).out, "x1 + x2\n" );
  for ( auto const* s : { "direct", "twin", "mobius", "ptpa" } )
    EXPECT_EQ( run( { "convert", data( "four_clauses.cnf" ), "--strategy", s } ).out,
               "x1 + x2 + x1*x2 + x1*x3 + x1*x2*x4 + x1*x3*x4\n" )
        << s;
}

TEST( Cli, ConvertAnfSplit )
{
  auto const r = run( { "convert", data( "linearize.anf" ), "--chunk", "3" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out.rfind( "c aux 4 product 1 2 \nc aux 5 xor 3 4 \np cnf 5 11\n", 0 ), 0u ) << r.out;
}

TEST( Cli, ConvertWithTraceWritesStderr )
{
  auto const r = run( { "convert", data( "worked.cnf" ), "--trace" } );
  EXPECT_EQ( r.out, "x2 + x1*x2\n" );
  EXPECT_NE( r.err.find( "\tresult\t" ), std::string::npos );
}

TEST( Cli, Verify )
{
  auto const r = run( { "verify", data( "four_clauses.cnf" ) } );
  EXPECT_EQ( r.code, 0 ) << r.out << r.err;
  EXPECT_EQ( r.out.find( "FAIL" ), std::string::npos );
  EXPECT_EQ( run( { "verify", data( "worked.cnf" ), "--golden", data( "worked.golden" ) } ).code, 0 );
  auto const bad = run( { "verify", data( "worked.cnf" ), "--golden", data( "worked_corrupted.golden" ) } );
  EXPECT_EQ( bad.code, 1 );
  EXPECT_NE( bad.out.find( "FAIL golden = ptpa" ), std::string::npos );
  auto const anf = run( { "verify", data( "linearize.anf" ) } );
  EXPECT_EQ( anf.code, 0 );
  EXPECT_NE( anf.out.find( "PASS split = input" ), std::string::npos );
}

TEST( Cli, TraceAndReplay )
{
  auto const dir = scratch( "trace" );
  auto const file = ( dir / "worked.trace" ).string();
  auto const t = run( { "trace", data( "worked.cnf" ), "--schedule", "script", data( "worked.script" ), "--out", file } );
  ASSERT_EQ( t.code, 0 ) << t.err;
  auto const r = run( { "replay", file } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "PASS replay S{1,2}.P{} (+) S{2}.P{}\n" );

  std::ifstream in( file );
  std::stringstream ss;
  ss << in.rdbuf();
  auto text = ss.str();
  auto const pos = text.find( "S{1,4,5}.P{}\n" );
  ASSERT_NE( pos, std::string::npos );
  text.replace( pos, 13, "S{1,4,6}.P{}\n" );
  std::ofstream( file ) << text;
  EXPECT_EQ( run( { "replay", file } ).code, 1 );
}

TEST( Cli, ExitCodes )
{
  EXPECT_EQ( run( {} ).code, 2 );
  EXPECT_EQ( run( { "convert" } ).code, 2 );
  EXPECT_EQ( run( { "convert", data( "missing.cnf" ) } ).code, 2 );
  EXPECT_EQ( run( { "convert", data( "worked.cnf" ), "--strategy", "split" } ).code, 2 );
  EXPECT_EQ( run( { "convert", data( "worked.cnf" ), "--chunk", "1" } ).code, 2 );
  EXPECT_EQ( run( { "verify", data( "four_clauses.cnf" ), "--oracle-cap", "1" } ).code, 3 );

  auto const dir = scratch( "codes" );
  std::ofstream( dir / "bad.cnf" ) << "p cnf 2 1\n1 5 0\n";
  auto const bad = run( { "convert", ( dir / "bad.cnf" ).string() } );
  EXPECT_EQ( bad.code, 2 );
  EXPECT_NE( bad.err.find( "line 2" ), std::string::npos ) << bad.err;
}

TEST( Cli, BenchIsDeterministicWithoutTiming )
{
  auto const dir = scratch( "bench" );
  std::vector<std::string> args{ "bench", "--generate", "6", "--vars", "6", "--clauses", "8",
                                 "--seed", "3", "--no-timing", "--workers", "2" };
  auto const a = run( args );
  auto const b = run( args );
  ASSERT_EQ( a.code, 0 ) << a.err;
  EXPECT_EQ( a.out, b.out );
  std::istringstream lines( a.out );
  std::string line;
  std::size_t count = 0;
  while ( std::getline( lines, line ) )
  {
    auto const j = nlohmann::json::parse( line );
    EXPECT_EQ( j["millis"], 0 );
    EXPECT_EQ( j["rules"].size(), 24u );
    ++count;
  }
  EXPECT_GT( count, 0u );

  args.push_back( "--out" );
  args.push_back( ( dir / "m.jsonl" ).string() );
  EXPECT_EQ( run( args ).code, 0 );
  EXPECT_TRUE( fs::exists( dir / "m.jsonl" ) );
  EXPECT_TRUE( fs::exists( dir / "m.csv" ) );
}

TEST( Cli, BenchCorpus )
{
  auto const r = run( { "bench", PTPA_TEST_DATA, "--no-timing" } );
  EXPECT_EQ( r.code, 0 ) << r.err;
  EXPECT_NE( r.out.find( "\"input\":\"worked.cnf\"" ), std::string::npos ) << r.out;
  auto const empty = scratch( "empty" );
  auto const e = run( { "bench", empty.string(), "--no-timing" } );
  EXPECT_EQ( e.code, 0 );
  EXPECT_TRUE( e.out.empty() );
}
