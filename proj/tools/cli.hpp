#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include <ptpa/limits.hpp>

namespace ptpa::cli {

enum exit_code : int
{
  success = 0,
  verification_failure = 1,
  usage_error = 2,
  resource_cap = 3
};

struct run_config
{
  std::string command;
  std::vector<std::string> inputs;
  std::string out;
  std::vector<std::string> strategies;
  std::string schedule = "smallest";
  std::string script_path;
  std::size_t chunk = 3;
  limits lim{};
  bool shorten = true;
  bool trace = false;
  bool timing = true;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string golden;

  /* bench generator */
  std::size_t generate = 0;
  std::size_t gen_vars = 8;
  std::size_t gen_clauses = 12;
  std::size_t gen_width = 3;
};

/// Parses argv and dispatches to the subcommand. Diagnostics go to `err`.
int run( int argc, char const* const* argv, std::ostream& out, std::ostream& err );

int cmd_convert( run_config const& cfg, std::ostream& out, std::ostream& err );
int cmd_verify( run_config const& cfg, std::ostream& out, std::ostream& err );
int cmd_trace( run_config const& cfg, std::ostream& out, std::ostream& err );
int cmd_replay( run_config const& cfg, std::ostream& out, std::ostream& err );
int cmd_bench( run_config const& cfg, std::ostream& out, std::ostream& err );

/// One metrics record; keys in output order.
using record = nlohmann::ordered_json;

/// CSV with a header row; the rule histogram becomes columns rule_1..rule_24.
std::string records_to_csv( std::vector<record> const& records );

} // namespace ptpa::cli
