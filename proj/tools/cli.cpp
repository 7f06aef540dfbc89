#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include <ptpa/conversions.hpp>
#include <ptpa/errors.hpp>
#include <ptpa/generate.hpp>

namespace ptpa::cli {

namespace fs = std::filesystem;

namespace {

struct io_error : error
{
  explicit io_error( std::string const& w ) : error( "IOError", w ) {}
};

struct usage : error
{
  explicit usage( std::string const& w ) : error( "UsageError", w ) {}
};

std::string read_file( std::string const& path )
{
  if ( path == "-" )
  {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw io_error( "cannot read " + path );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( std::string const& path, std::string const& text )
{
  std::ofstream o( path, std::ios::binary );
  if ( !o || !( o << text ) )
    throw io_error( "cannot write " + path );
}

void emit( run_config const& cfg, std::ostream& out, std::string const& text )
{
  if ( cfg.out.empty() )
    out << text;
  else
    write_file( cfg.out, text );
}

/// DIMACS when the first meaningful line is a comment or problem line.
bool looks_like_dimacs( std::string const& text )
{
  std::istringstream in( text );
  std::string line;
  while ( std::getline( in, line ) )
  {
    auto const first = line.find_first_not_of( " \t\r" );
    if ( first == std::string::npos )
      continue;
    return line[first] == 'c' || line[first] == 'p';
  }
  return false;
}

struct input
{
  std::string name;
  bool is_cnf = true;
  cnf_formula cnf;
  bool_poly anf;
  std::size_t n = 0;
};

input load( std::string const& path, std::ostream& err )
{
  input in;
  in.name = path == "-" ? "<stdin>" : fs::path( path ).filename().string();
  auto const text = read_file( path );
  if ( looks_like_dimacs( text ) )
  {
    std::vector<std::string> warnings;
    in.cnf = parse_dimacs( text, &warnings );
    in.n = in.cnf.n;
    for ( auto const& w : warnings )
      err << "warning: " << in.name << ": " << w << "\n";
  }
  else
  {
    in.is_cnf = false;
    in.anf = parse_anf( text );
    in.n = in.anf.max_var();
  }
  return in;
}

schedule make_schedule( run_config const& cfg )
{
  if ( cfg.schedule == "left" )
    return schedule::left_fold();
  if ( cfg.schedule == "script" )
    return schedule::scripted( parse_schedule_script( read_file( cfg.script_path ) ) );
  return schedule::smallest();
}

reduce_options make_reduce_options( run_config const& cfg, bool record_trace )
{
  reduce_options o;
  o.shorten_between_rounds = cfg.shorten;
  o.record_trace = record_trace;
  o.lim = cfg.lim;
  return o;
}

std::string first_strategy( run_config const& cfg, bool cnf_input )
{
  if ( !cfg.strategies.empty() )
    return cfg.strategies.front();
  return cnf_input ? "ptpa" : "split";
}

bool_poly anf_by( std::string const& strategy, cnf_formula const& f, run_config const& cfg )
{
  if ( strategy == "direct" )
    return expand( cnf_to_anf_direct( f, cfg.lim ), cfg.lim );
  if ( strategy == "twin" )
  {
    auto const t = cnf_to_anf_twin( f );
    return substitute_twins( expand( t, cfg.lim ), t.twin_map, cfg.lim );
  }
  if ( strategy == "ptpa" )
    return cnf_to_anf_ptpa( f, make_schedule( cfg ), make_reduce_options( cfg, false ) ).anf;
  if ( strategy == "mobius" )
    return mobius( cnf_truth_table( f, cfg.lim ), cfg.lim );
  throw usage( "strategy '" + strategy + "' does not apply to CNF input" );
}

std::string aux_comments( std::vector<aux_definition> const& aux )
{
  std::string s;
  for ( auto const& a : aux )
  {
    s += "c aux " + std::to_string( a.aux ) +
         ( a.kind == aux_definition::kind_type::product_of ? " product " : " xor " );
    for ( auto v : a.operands )
      s += std::to_string( v ) + " ";
    s += "\n";
  }
  return s;
}

} // namespace

/* ---- convert ------------------------------------------------------------- */

int cmd_convert( run_config const& cfg, std::ostream& out, std::ostream& err )
{
  auto const in = load( cfg.inputs.at( 0 ), err );
  auto const strategy = first_strategy( cfg, in.is_cnf );

  if ( in.is_cnf )
  {
    if ( strategy == "ptpa" )
    {
      auto r = cnf_to_anf_ptpa( in.cnf, make_schedule( cfg ), make_reduce_options( cfg, cfg.trace ) );
      emit( cfg, out, to_string( r.anf ) + "\n" );
      if ( cfg.trace )
        err << serialize( r.trace );
      return success;
    }
    emit( cfg, out, to_string( anf_by( strategy, in.cnf, cfg ) ) + "\n" );
    return success;
  }

  if ( strategy == "naive" )
  {
    emit( cfg, out, write_dimacs( anf_to_cnf_naive( in.anf, in.n, cfg.lim ) ) );
    return success;
  }
  if ( strategy == "split" )
  {
    auto const r = anf_to_cnf_split( in.anf, cfg.chunk, in.n );
    emit( cfg, out, aux_comments( r.aux ) + write_dimacs( r.cnf ) );
    return success;
  }
  if ( strategy == "ptpa" )
  {
    emit( cfg, out, to_string( anf_to_ptpoly( in.anf ) ) + "\n" );
    return success;
  }
  throw usage( "strategy '" + strategy + "' does not apply to ANF input" );
}

/* ---- verify -------------------------------------------------------------- */

int cmd_verify( run_config const& cfg, std::ostream& out, std::ostream& err )
{
  auto const in = load( cfg.inputs.at( 0 ), err );
  bool ok = true;
  auto report = [&]( bool pass, std::string const& what ) {
    out << ( pass ? "PASS " : "FAIL " ) << what << "\n";
    ok = ok && pass;
  };

  if ( in.is_cnf )
  {
    if ( in.n > cfg.lim.oracle_cap )
      throw domain_too_large( std::to_string( in.n ) + " variables exceed the oracle cap of " +
                              std::to_string( cfg.lim.oracle_cap ) );
    std::vector<std::string> names = cfg.strategies.empty()
                                         ? std::vector<std::string>{ "direct", "twin", "ptpa", "mobius" }
                                         : cfg.strategies;
    if ( std::find( names.begin(), names.end(), "mobius" ) == names.end() )
      names.push_back( "mobius" );
    std::vector<bool_poly> anfs;
    for ( auto const& s : names )
      anfs.push_back( anf_by( s, in.cnf, cfg ) );
    for ( std::size_t i = 0; i < names.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < names.size(); ++j )
        report( semantically_equal( anfs[i], anfs[j], in.n, true, cfg.lim ), names[i] + " = " + names[j] );
    }
    if ( !cfg.golden.empty() )
    {
      auto const golden = parse_anf( read_file( cfg.golden ) );
      for ( std::size_t i = 0; i < names.size(); ++i )
        report( golden == anfs[i], "golden = " + names[i] );
    }
    return ok ? success : verification_failure;
  }

  if ( !cfg.golden.empty() )
    throw usage( "--golden applies to CNF input" );
  auto const naive = anf_to_cnf_naive( in.anf, in.n, cfg.lim );
  report( mobius( cnf_truth_table( naive, cfg.lim ), cfg.lim ) == in.anf, "naive = input" );

  auto const split = anf_to_cnf_split( in.anf, cfg.chunk, in.n );
  auto const counts = model_projection_counts( split.cnf, in.n, cfg.lim );
  auto const table = to_truth_table( in.anf, in.n, cfg.lim );
  bool projected = true;
  for ( std::size_t a = 0; a < counts.size(); ++a )
    projected = projected && counts[a] == table.bits[a];
  report( projected, "split = input (projected, unique extension)" );
  return ok ? success : verification_failure;
}

/* ---- trace / replay ------------------------------------------------------ */

int cmd_trace( run_config const& cfg, std::ostream& out, std::ostream& err )
{
  auto const in = load( cfg.inputs.at( 0 ), err );
  if ( !in.is_cnf )
    throw usage( "trace needs CNF input" );
  if ( !cfg.strategies.empty() && cfg.strategies.front() != "ptpa" )
    throw usage( "trace records the ptpa strategy only" );
  auto const r = cnf_to_anf_ptpa( in.cnf, make_schedule( cfg ), make_reduce_options( cfg, true ) );
  emit( cfg, out, serialize( r.trace ) );
  return success;
}

int cmd_replay( run_config const& cfg, std::ostream& out, std::ostream& )
{
  auto const t = parse_trace( read_file( cfg.inputs.at( 0 ) ) );
  auto const result = replay( t );
  out << "PASS replay " << to_string( result ) << "\n";
  return success;
}

/* ---- bench --------------------------------------------------------------- */

namespace {

struct bench_item
{
  std::string name;
  input data;
  std::string load_error;
};

record measure( bench_item const& item, std::string const& strategy, run_config const& cfg )
{
  record r;
  r["input"] = item.name;
  r["strategy"] = strategy;
  auto const& in = item.data;
  std::size_t n = in.n, clauses = 0, factors = 0, monomials = 0, terms = 0, aux = 0;
  std::array<std::size_t, 24> rules{};
  std::string status = "ok";

  auto const start = std::chrono::steady_clock::now();
  try
  {
    if ( in.is_cnf )
    {
      clauses = in.cnf.clauses.size();
      if ( strategy == "direct" || strategy == "twin" )
      {
        auto const fa = strategy == "direct" ? cnf_to_anf_direct( in.cnf, cfg.lim ) : cnf_to_anf_twin( in.cnf );
        aux = fa.twin_map.size();
        n = in.n + aux;
        factors = fa.factors.size();
        for ( auto const& p : fa.factors )
          terms += p.size();
        monomials = expand( fa, cfg.lim ).size();
      }
      else if ( strategy == "ptpa" )
      {
        auto const e = cnf_to_expr( in.cnf );
        factors = e.factor_count();
        for ( auto const& p : e.factors() )
          terms += ptpoly_size( p );
        auto const r = cnf_to_anf_ptpa( in.cnf, make_schedule( cfg ), make_reduce_options( cfg, false ) );
        monomials = r.anf.size();
        rules = r.trace.rule_histogram();
      }
      else
      {
        status = "UnknownStrategy";
      }
    }
    else
    {
      monomials = in.anf.size();
      if ( strategy == "naive" )
      {
        auto const f = anf_to_cnf_naive( in.anf, in.n, cfg.lim );
        clauses = f.clauses.size();
      }
      else if ( strategy == "split" )
      {
        auto const s = anf_to_cnf_split( in.anf, cfg.chunk, in.n );
        clauses = s.cnf.clauses.size();
        aux = s.aux.size();
        n = s.cnf.n;
      }
      else
      {
        status = "UnknownStrategy";
      }
    }
  }
  catch ( error const& e )
  {
    status = e.kind();
  }
  auto const millis =
      std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();

  r["n"] = n;
  r["clauses"] = clauses;
  r["factors"] = factors;
  r["monomials"] = monomials;
  r["terms"] = terms;
  r["aux_vars"] = aux;
  r["millis"] = cfg.timing ? std::round( millis * 1000.0 ) / 1000.0 : 0.0;
  r["rules"] = rules;
  r["status"] = status;
  return r;
}

std::vector<bench_item> bench_inputs( run_config const& cfg, std::ostream& err )
{
  std::vector<bench_item> items;
  for ( auto const& root : cfg.inputs )
  {
    std::vector<fs::path> files;
    if ( fs::is_directory( root ) )
    {
      for ( auto const& entry : fs::directory_iterator( root ) )
      {
        auto const ext = entry.path().extension();
        if ( entry.is_regular_file() && ( ext == ".cnf" || ext == ".anf" ) )
          files.push_back( entry.path() );
      }
      std::sort( files.begin(), files.end() );
    }
    else if ( fs::exists( root ) )
      files.push_back( root );
    else
      throw io_error( "no such corpus " + root );

    for ( auto const& p : files )
    {
      bench_item item;
      item.name = p.filename().string();
      try
      {
        item.data = load( p.string(), err );
      }
      catch ( error const& e )
      {
        item.load_error = e.kind();
      }
      items.push_back( std::move( item ) );
    }
  }

  std::mt19937_64 rng( cfg.seed );
  for ( std::size_t i = 0; i < cfg.generate; ++i )
  {
    bench_item item;
    item.name = "ksat-" + std::to_string( i + 1 );
    item.data.cnf = random_cnf( cfg.gen_vars, cfg.gen_clauses, cfg.gen_width, cfg.gen_width, rng );
    item.data.n = cfg.gen_vars;
    items.push_back( std::move( item ) );
  }
  return items;
}

} // namespace

std::string records_to_csv( std::vector<record> const& records )
{
  std::string csv = "input,strategy,n,clauses,factors,monomials,terms,aux_vars,millis,status";
  for ( int i = 1; i <= 24; ++i )
    csv += ",rule_" + std::to_string( i );
  csv += "\n";
  for ( auto const& r : records )
  {
    csv += r["input"].get<std::string>() + "," + r["strategy"].get<std::string>();
    for ( auto const* key : { "n", "clauses", "factors", "monomials", "terms", "aux_vars", "millis" } )
      csv += "," + r[key].dump();
    csv += "," + r["status"].get<std::string>();
    for ( auto const& c : r["rules"] )
      csv += "," + c.dump();
    csv += "\n";
  }
  return csv;
}

int cmd_bench( run_config const& cfg, std::ostream& out, std::ostream& err )
{
  auto const items = bench_inputs( cfg, err );

  std::vector<std::pair<std::size_t, std::string>> jobs;
  for ( std::size_t i = 0; i < items.size(); ++i )
  {
    auto names = cfg.strategies;
    if ( names.empty() )
      names = items[i].data.is_cnf ? std::vector<std::string>{ "direct", "twin", "ptpa" }
                                   : std::vector<std::string>{ "naive", "split" };
    for ( auto const& s : names )
      jobs.emplace_back( i, s );
  }

  std::vector<record> records( jobs.size() );
  auto const job_count = static_cast<std::ptrdiff_t>( jobs.size() );
#pragma omp parallel for schedule( dynamic ) num_threads( cfg.workers )
  for ( std::ptrdiff_t j = 0; j < job_count; ++j )
  {
    auto const& [i, strategy] = jobs[static_cast<std::size_t>( j )];
    if ( items[i].load_error.empty() )
      records[static_cast<std::size_t>( j )] = measure( items[i], strategy, cfg );
    else
      records[static_cast<std::size_t>( j )] = record{ { "input", items[i].name },
                                                       { "strategy", strategy },
                                                       { "status", items[i].load_error } };
  }

  std::string jsonl;
  std::vector<record> complete;
  for ( auto const& r : records )
  {
    jsonl += r.dump() + "\n";
    if ( r.contains( "n" ) )
      complete.push_back( r );
  }

  if ( cfg.out.empty() )
  {
    out << jsonl;
    return success;
  }
  write_file( cfg.out, jsonl );
  write_file( fs::path( cfg.out ).replace_extension( ".csv" ).string(), records_to_csv( complete ) );
  return success;
}

/* ---- argument parsing ---------------------------------------------------- */

int run( int argc, char const* const* argv, std::ostream& out, std::ostream& err )
{
  run_config cfg;
  if ( char const* env = std::getenv( "PTPA_ORACLE_CAP" ) )
  {
    try
    {
      cfg.lim.oracle_cap = std::stoul( env );
    }
    catch ( std::exception const& )
    {
      err << "error: PTPA_ORACLE_CAP must be a number\n";
      return usage_error;
    }
  }

  CLI::App app{ "Power term polynomial algebra: CNF/ANF conversion, verification and tracing" };
  app.require_subcommand( 1 );

  std::vector<std::string> schedule_args;
  std::size_t cap = cfg.lim.oracle_cap;
  bool no_shorten = false, no_timing = false;

  auto common = [&]( CLI::App* sub, bool multiple_inputs ) {
    if ( multiple_inputs )
      sub->add_option( "inputs", cfg.inputs, "corpus directories or files" );
    else
      sub->add_option( "input", cfg.inputs, "DIMACS or ANF file, '-' for stdin" )->required()->expected( 1 );
    sub->add_option( "--strategy", cfg.strategies,
                     "direct|twin|ptpa|mobius for CNF input, naive|split|ptpa for ANF input" )
        ->delimiter( ',' );
    sub->add_option( "--schedule", schedule_args, "smallest | left | script FILE" )->expected( 1, 2 );
    sub->add_option( "--chunk", cfg.chunk, "chunk size k of the split conversion" )->check( CLI::Range( 2, 64 ) );
    sub->add_option( "--oracle-cap", cap, "largest truth table domain" )->check( CLI::Range( 0, 30 ) );
    sub->add_flag( "--no-shorten", no_shorten, "skip shortening between multiplications" );
    sub->add_flag( "--trace", cfg.trace, "also write the rewrite trace to standard error" );
    sub->add_option( "--seed", cfg.seed, "seed of the random formula generator" );
    sub->add_option( "--workers", cfg.workers, "OpenMP threads" )->check( CLI::PositiveNumber );
    sub->add_option( "--out", cfg.out, "output file instead of standard output" );
  };

  auto* convert = app.add_subcommand( "convert", "convert CNF to ANF or ANF to CNF" );
  common( convert, false );
  auto* verify = app.add_subcommand( "verify", "cross-check all strategies against the oracle" );
  common( verify, false );
  verify->add_option( "--golden", cfg.golden, "expected ANF" );
  auto* trace = app.add_subcommand( "trace", "print the rewrite trace of the ptpa strategy" );
  common( trace, false );
  auto* replay_cmd = app.add_subcommand( "replay", "re-execute a trace and check every step" );
  replay_cmd->add_option( "input", cfg.inputs, "trace file" )->required()->expected( 1 );
  auto* bench = app.add_subcommand( "bench", "size and time metrics over a corpus" );
  common( bench, true );
  bench->add_option( "--generate", cfg.generate, "number of random k-SAT formulas" );
  bench->add_option( "--vars", cfg.gen_vars, "variables per generated formula" );
  bench->add_option( "--clauses", cfg.gen_clauses, "clauses per generated formula" );
  bench->add_option( "--width", cfg.gen_width, "literals per generated clause" );
  bench->add_flag( "--no-timing", no_timing, "report millis as 0 for byte-identical output" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    out << app.help();
    return success;
  }
  catch ( CLI::ParseError const& e )
  {
    std::ostringstream msg, help;
    app.exit( e, help, msg );
    err << msg.str();
    return usage_error;
  }

  cfg.lim.oracle_cap = cap;
  cfg.shorten = !no_shorten;
  cfg.timing = !no_timing;
  if ( !schedule_args.empty() )
  {
    cfg.schedule = schedule_args[0];
    if ( cfg.schedule == "script" )
    {
      if ( schedule_args.size() != 2 )
      {
        err << "error: --schedule script needs a file\n";
        return usage_error;
      }
      cfg.script_path = schedule_args[1];
    }
    else if ( ( cfg.schedule != "smallest" && cfg.schedule != "left" ) || schedule_args.size() != 1 )
    {
      err << "error: --schedule takes smallest, left or script FILE\n";
      return usage_error;
    }
  }
  omp_set_num_threads( cfg.workers );

  try
  {
    if ( *convert )
      return cmd_convert( cfg, out, err );
    if ( *verify )
      return cmd_verify( cfg, out, err );
    if ( *trace )
      return cmd_trace( cfg, out, err );
    if ( *replay_cmd )
      return cmd_replay( cfg, out, err );
    return cmd_bench( cfg, out, err );
  }
  catch ( domain_too_large const& e )
  {
    err << "error: " << e.what() << "\n";
    return resource_cap;
  }
  catch ( cap_exceeded const& e )
  {
    err << "error: " << e.what() << "\n";
    return resource_cap;
  }
  catch ( trace_mismatch const& e )
  {
    out << "FAIL replay\n";
    err << "error: " << e.what() << "\n";
    return verification_failure;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << "\n";
    return e.kind() == "OracleDisagreement" ? verification_failure : usage_error;
  }
  catch ( std::invalid_argument const& e )
  {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return verification_failure;
  }
}

} // namespace ptpa::cli
