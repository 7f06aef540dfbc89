#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptpa {

/// Base of every error raised by the library. `kind()` is a stable short tag
/// (e.g. "OverlapError") used by the CLI diagnostics and by tests.
class error : public std::runtime_error
{
public:
  error( std::string kind, std::string const& what )
      : std::runtime_error( kind + ": " + what ), kind_( std::move( kind ) )
  {
  }

  std::string const& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/* power term well-formedness */
struct overlap_error : error
{
  explicit overlap_error( std::string const& w ) : error( "OverlapError", w ) {}
};

struct singleton_power_error : error
{
  explicit singleton_power_error( std::string const& w ) : error( "SingletonPowerError", w ) {}
};

struct empty_term_error : error
{
  explicit empty_term_error( std::string const& w ) : error( "EmptyTermError", w ) {}
};

/* resource caps; the CLI maps these to exit status 3 */
struct domain_too_large : error
{
  explicit domain_too_large( std::string const& w ) : error( "DomainTooLarge", w ) {}
};

struct cap_exceeded : error
{
  explicit cap_exceeded( std::string const& w ) : error( "CapExceeded", w ) {}
};

struct domain_mismatch : error
{
  explicit domain_mismatch( std::string const& w ) : error( "DomainMismatch", w ) {}
};

/* clauses and rewriting */
struct empty_clause_error : error
{
  explicit empty_clause_error( std::string const& w ) : error( "EmptyClauseError", w ) {}
};

struct tautology_error : error
{
  explicit tautology_error( std::string const& w, std::size_t line = 0 )
      : error( "TautologyError", w ), line( line )
  {
  }
  std::size_t line;
};

struct no_rule_error : error
{
  explicit no_rule_error( std::string const& w ) : error( "NoRuleError", w ) {}
};

struct invalid_split_error : error
{
  explicit invalid_split_error( std::string const& w ) : error( "InvalidSplitError", w ) {}
};

/* text formats; `line` is 1-based, 0 when unknown */
struct parse_error : error
{
  parse_error( std::string kind, std::string const& w, std::size_t line = 0 )
      : error( std::move( kind ), line ? "line " + std::to_string( line ) + ": " + w : w ), line( line )
  {
  }
  explicit parse_error( std::string const& w, std::size_t line = 0 ) : parse_error( "ParseError", w, line ) {}
  std::size_t line;
};

struct malformed_header : parse_error
{
  explicit malformed_header( std::string const& w, std::size_t line = 0 ) : parse_error( "MalformedHeader", w, line ) {}
};

struct literal_out_of_range : parse_error
{
  explicit literal_out_of_range( std::string const& w, std::size_t line = 0 )
      : parse_error( "LiteralOutOfRange", w, line )
  {
  }
};

struct unterminated_clause : parse_error
{
  explicit unterminated_clause( std::string const& w, std::size_t line = 0 )
      : parse_error( "UnterminatedClause", w, line )
  {
  }
};

struct trace_mismatch : error
{
  explicit trace_mismatch( std::string const& w ) : error( "TraceMismatch", w ) {}
};

} // namespace ptpa
