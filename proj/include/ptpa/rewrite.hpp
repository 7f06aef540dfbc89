#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ptpa/anf.hpp>
#include <ptpa/clause.hpp>
#include <ptpa/power_term.hpp>
#include <ptpa/trace.hpp>

namespace ptpa {

/* ---- clause encoding ---------------------------------------------------- */

/// Canonical power term polynomial of a clause with k positive and l negative
/// literals; its value is 1 + ANF(¬c) and it has at most three terms:
///   l = 0         : S{}.P{pos}                    (S{x}.P{} when k = 1)
///   k = 0         : 1 (+) S{neg}.P{}
///   k > 0, l > 0  : 1 (+) S{neg}.P{} (+) S{neg}.P{pos}
///                   (1 (+) S{neg}.P{} (+) S{neg ∪ pos}.P{} when k = 1)
/// Throws empty_clause_error, tautology_error.
pt_poly encode_clause( clause const& c );

/* ---- atomic multiplication ---------------------------------------------- */

inline constexpr int rule_count = 24;

/// First row (in table order) whose condition on (S, U, T, V) holds. Rows
/// 1-3 take the constants. Throws no_rule_error if no row matches, which
/// would be a defect in the table.
rule_id classify_rule( atomic_term const& a, atomic_term const& b );
/// The classified row's right-hand side; at most three terms.
pt_poly multiply_atomic( atomic_term const& a, atomic_term const& b );
/// Classification and product in one pass.
std::pair<rule_id, pt_poly> multiply_atomic_traced( atomic_term const& a, atomic_term const& b );

/// Distributes over both operands; every atomic product is recorded in
/// `trace` when one is given.
pt_poly multiply_ptpoly( pt_poly const& a, pt_poly const& b, rewrite_trace* trace = nullptr );

/* ---- shortening / expansion --------------------------------------------- */

/// Which regrouping identity applies to a split U = T ∪ V of a power part:
/// 1 for |T| = |V| = 1, 2 for |T| > 1, |V| = 1, 3 for |T| > 1, |V| > 1.
enum class split_case
{
  single_single = 1,
  multi_single = 2,
  multi_multi = 3
};

/// Rewrites S.P_{T∪V} into finer terms:
///   case 1: (S∪T).P{} (+) (S∪T∪V).P{} (+) (S∪V).P{}
///   case 2: S.P_T (+) (S∪V).P_T (+) (S∪V).P{}
///   case 3: ⊎ over nonempty W ⊆ V of (S∪W).P_T, then (+) S.P_T (+) S.P_V
/// The split must partition U into nonempty T, V; |T| = 1 with |V| > 1 is
/// rejected (swap the arguments). Throws invalid_split_error.
pt_poly expand_term( atomic_term const& t, var_set const& split_t, var_set const& split_v,
                     limits const& lim = default_limits() );
split_case classify_split( atomic_term const& t, var_set const& split_t, var_set const& split_v );

struct shorten_options
{
  /// largest |V| probed for the case-3 pattern (2^|V| + 1 terms)
  std::size_t max_case3_v = 4;
};

/// One size-lowering use of an expansion identity t ⊎ expand(t) = 0: the
/// identity terms present in the polynomial (`replaced`) give way to the
/// absent ones (`merged`).
struct shortening
{
  split_case which;
  std::vector<atomic_term> replaced;
  pt_poly merged;
};

/// First match of the greedy search. Patterns where all expansion terms are
/// present and t is not come first: case 1, then case 2, then case 3 by
/// increasing |V|. After them come identities whose term t is present along
/// with more than half of its expansion, in canonical order of t and then
/// by split.
std::optional<shortening> find_shortening( pt_poly const& p, shorten_options const& opts = {} );

/// Applies `find_shortening` until none is left. Every rewrite strictly
/// lowers the size, so at most Size(p) rounds run. Each rewrite is recorded
/// as a shorten step on factor `position` when a trace is given.
pt_poly shorten( pt_poly p, shorten_options const& opts = {}, rewrite_trace* trace = nullptr,
                 std::size_t position = 0 );

/* ---- reduction of products ---------------------------------------------- */

/// Script instruction; factor positions are 1-based in the current list.
struct script_step
{
  enum class op_type
  {
    mul,     // factors i and j replaced by their product at min(i, j)
    expand,  // term of factor i rewritten with split (T, V)
    shorten  // shorten factor i
  };

  op_type op = op_type::mul;
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<atomic_term> term;
  var_set split_t;
  var_set split_v;
};

/// Text form, one instruction per line, '#' starts a comment:
///   mul I J
///   expand I <term> T{..} V{..}
///   shorten I
std::vector<script_step> parse_schedule_script( std::string_view text );

struct schedule
{
  enum class policy_type
  {
    smallest,  // the two factors of least size, earlier position wins ties
    left,      // first two factors
    script     // `steps`, then `smallest` for whatever remains
  };

  policy_type policy = policy_type::smallest;
  std::vector<script_step> steps;

  static schedule smallest() { return {}; }
  static schedule left_fold() { return { policy_type::left, {} }; }
  static schedule scripted( std::vector<script_step> s ) { return { policy_type::script, std::move( s ) }; }
};

struct reduce_options
{
  /// shorten the product after each multiplication
  bool shorten_between_rounds = true;
  shorten_options shorten_opts{};
  /// keep the full step list; when false only the rule histogram is kept
  bool record_trace = true;
  limits lim{};
};

struct reduce_result
{
  pt_poly result;
  rewrite_trace trace;
};

/// Multiplies the factors pairwise until one power term polynomial is left.
reduce_result expr_reduce( expr const& e, schedule const& sched = {}, reduce_options const& opts = {} );

/// One degree-0 term per monomial (1 for the constant), then shortened.
pt_poly anf_to_ptpoly( bool_poly const& p, shorten_options const& opts = {} );

} // namespace ptpa
