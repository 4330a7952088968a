#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "puiseux/expr.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// A finite list of generators given verbatim.
struct ExplicitFamily {
  std::vector<PosRational> generators;
};

/// Generators numerator(n, p_n) / p_n for n in [index_start, index_end], where
/// p_n is the n-th prime admitted by `prime_filter`.
struct SymbolicFamily {
  Expr numerator;
  PrimeFilter prime_filter = PrimeFilter::all();
  std::uint64_t index_start = 1;
  std::optional<std::uint64_t> index_end;  // nullopt: unbounded
  bool declared_stable = false;
  /// When set, truncation rejects indices where p_n divides the numerator.
  bool primary = false;

  bool unbounded() const { return !index_end.has_value(); }
};

using GeneratorFamily = std::variant<ExplicitFamily, SymbolicFamily>;

/// User-declared facts about the infinite monoid. None are inferred.
struct SpecMetadata {
  std::optional<bool> zero_limit_point;
  std::optional<PosRational> atom_inf;
  std::optional<bool> inf_attained;
  std::optional<ExtendedRational> atom_sup;
  std::optional<bool> sup_attained;

  bool empty() const {
    return !zero_limit_point && !atom_inf && !inf_attained && !atom_sup && !sup_attained;
  }
};

struct MonoidSpec {
  std::string name;
  std::vector<GeneratorFamily> families;
  SpecMetadata metadata;

  /// True when every family is explicit or has a bounded index range.
  bool finitely_generated() const;
};

inline constexpr int kSpecSchemaVersion = 1;

/// Parses the JSON spec document. Throws SyntaxError (with line/column) on
/// malformed JSON or expressions and SemanticError on rule violations.
MonoidSpec parse_spec(std::string_view text);

/// Reads and parses a spec file.
MonoidSpec load_spec(const std::string& path);

/// Serializes to the same JSON schema parse_spec accepts (2-space indent).
std::string spec_to_json(const MonoidSpec& spec);

/// Parses a prime filter string; `above:` expressions may only use n.
PrimeFilter parse_prime_filter(std::string_view text);

/// Structural checks shared by the parser and programmatic construction.
void validate_spec(const MonoidSpec& spec);

}  // namespace puiseux
