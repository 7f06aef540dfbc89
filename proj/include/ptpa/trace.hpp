#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <ptpa/power_term.hpp>

namespace ptpa {

/// Row of the atomic multiplication table, 1..24.
struct rule_id
{
  int row = 0;
  bool operator==( rule_id const& ) const = default;
};

enum class trace_op
{
  init,        // the factor list the reduction starts from
  mul_atomic,  // one atomic product, tagged with its rule
  mul_poly,    // two factors replaced by their product
  expand,      // one term of a factor rewritten into finer terms
  shorten,     // one regrouping of terms of a factor into a single term
  result       // the final power term polynomial
};

struct trace_step
{
  trace_op op = trace_op::init;
  std::optional<rule_id> rule;           // mul_atomic
  int rewrite_case = 0;                  // expand, shorten: 1..3
  std::vector<std::size_t> positions;    // 1-based factor positions
  std::vector<pt_poly> inputs;           // operands; for expand {factor, term}
  var_set split_t;                       // expand
  var_set split_v;                       // expand
  pt_poly output;
};

/// Ordered record of a reduction. Replaying it from the `init` step
/// reproduces every recorded output.
class rewrite_trace
{
public:
  explicit rewrite_trace( bool keep_steps = true ) : keep_steps_( keep_steps ) {}

  void add( trace_step step );
  /// Counts the rule even when steps are not kept.
  void count_rule( rule_id r );

  std::vector<trace_step> const& steps() const { return steps_; }
  bool keeps_steps() const { return keep_steps_; }

  /// Firings of rules 1..24 (index 0 is rule 1).
  std::array<std::size_t, 24> const& rule_histogram() const { return histogram_; }
  std::size_t atomic_multiplications() const;

private:
  bool keep_steps_;
  std::vector<trace_step> steps_;
  std::array<std::size_t, 24> histogram_{};
};

std::string_view to_string( trace_op op );

/// One line per step, tab separated:
///   <step#> <op> <id> <inputs joined by " ; "> <output>
/// ids: "-" (init, result), "R<row>" (mul_atomic), "@i,j" (mul_poly),
/// "C<case>@i T{..} V{..}" (expand), "C<case>@i" (shorten). Polynomials use
/// the canonical power term syntax; "-" marks an absent column.
std::string serialize( rewrite_trace const& t );
rewrite_trace parse_trace( std::string_view text );

struct shorten_options;

/// Re-executes every step from the init step and checks each recorded output
/// (and rule) against a fresh computation. Shorten steps are checked against
/// the greedy search under `opts`, which must match the recorded run.
/// Returns the final polynomial. Throws trace_mismatch on the first
/// discrepancy.
pt_poly replay( rewrite_trace const& t, shorten_options const& opts );
pt_poly replay( rewrite_trace const& t );

} // namespace ptpa
