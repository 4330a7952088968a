#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/expr.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/limits.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

enum class ElasticityMode { truncated_exact, symbolic };

const char* to_string(ElasticityMode m);

/// Whether rho(M) is attained by some element.
enum class Acceptance { accepted, not_accepted, unknown, inapplicable };

const char* to_string(Acceptance a);

struct ElasticityReport {
  ElasticityMode mode = ElasticityMode::truncated_exact;
  ExtendedRational value;
  Acceptance accepted = Acceptance::unknown;
  /// Which elements attain (or approach) the value.
  std::string witness_rule;
  /// Metadata keys the answer relied on; empty in truncated mode.
  std::vector<std::string> metadata_used;
};

/// JSON object with "mode", "value", "accepted", "witness_rule",
/// "metadata_used".
std::string to_json(const ElasticityReport& report);

/// Truncated mode: max atom / min atom of tm. Symbolic mode: inf when 0 is a
/// declared limit point, else atom_sup / atom_inf from the metadata. Throws
/// InsufficientMetadataError when symbolic mode lacks the needed keys.
ElasticityReport monoid_elasticity(const MonoidSpec& spec, const TruncatedMonoid& tm,
                                   ElasticityMode mode);

/// Accepted iff the atom set has a maximum and a minimum. Finitely generated
/// specs are always accepted; specs with infinite elasticity are inapplicable.
Acceptance is_accepted(const MonoidSpec& spec);

/// Nonzero x <= bound with element_elasticity(x) = max atom / min atom.
/// Throws Error if a witness is not a common integer multiple of both
/// extreme atoms.
std::vector<PosRational> elasticity_witnesses(const TruncatedMonoid& tm, const PosRational& bound,
                                              const EnumerationLimits& limits = {});

/// {rho(x) : x nonzero in tm, x <= bound}, ascending.
std::vector<PosRational> elasticity_set(const TruncatedMonoid& tm, const PosRational& bound,
                                        const EnumerationLimits& limits = {});

struct Decomposition {
  PosRational stable_part;
  PosRational unstable_part;
  bool unique = true;
  /// Number of splittings x = s + u with s uniquely factorable.
  std::size_t candidates = 0;
};

/// Splits x as s + u with s in the stable submonoid (uniquely factorable in
/// tm) and u in the unstable submonoid. When several splittings qualify the
/// smallest stable part is returned and `unique` is false. Throws DomainError
/// when tm is not primary or no splitting exists.
Decomposition decompose_stable_unstable(const MonoidSpec& spec, const TruncatedMonoid& tm,
                                        const PosRational& x,
                                        const EnumerationLimits& limits = {});

struct ShiftReport {
  CheckStatus status = CheckStatus::inapplicable;
  LengthSet base;     // L(x)
  LengthSet shifted;  // L(x + a)
  std::string reason;
};

/// Checks L(x + a) = L(x) + 1 for an atom a whose prime denominator divides
/// no other atom's denominator nor d(x).
ShiftReport shifted_lengths(const TruncatedMonoid& tm, const PosRational& x, const PosRational& a,
                            const EnumerationLimits& limits = {});

struct LengthBounds {
  std::uint64_t min_length = 0;
  std::uint64_t max_length = 0;
};

/// {(L_i + k) / (l_i + k) : i, 1 <= k <= k_max}, ascending.
std::vector<PosRational> predicted_elasticities_finite_unstable(std::span<const LengthBounds> base,
                                                                std::uint64_t k_max);

struct AbsolutelyUnstable {
  PosRational element;
  LengthBounds lengths;
};

/// Elements x <= bound of tm with no nonzero stable divisor, together with
/// min/max L(x). Feeds predicted_elasticities_finite_unstable.
std::vector<AbsolutelyUnstable> absolutely_unstable_up_to(const MonoidSpec& spec,
                                                          const TruncatedMonoid& tm,
                                                          const PosRational& bound,
                                                          const EnumerationLimits& limits = {});

/// n -> expr(n, p_n) with p_n drawn from `primes`.
struct SequenceDescriptor {
  Expr expr;
  PrimeFilter primes = PrimeFilter::all();

  static SequenceDescriptor parse(std::string_view expr, std::string_view prime_filter = "all");
};

struct DensityBudget {
  std::uint64_t max_n = 10'000;
  std::uint64_t max_k = 10'000'000;
};

struct DensityResult {
  bool found = false;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  PosRational ratio;
  PosRational error;
  std::string diagnostics;
};

/// Finds n, k >= 1 with |(a_n + k) / (b_n + k) - target| < epsilon. For each
/// n with a_n >= b_n the best k is solved for directly and the nearest
/// integers tried; every returned pair is re-validated exactly.
DensityResult density_witness(const SequenceDescriptor& a, const SequenceDescriptor& b,
                              const PosRational& target, const PosRational& epsilon,
                              const DensityBudget& budget = {});

enum class FactorizationClass { ff, bf, bf_not_ff, not_bf, unknown };

const char* to_string(FactorizationClass c);

struct StatusReport {
  FactorizationClass status = FactorizationClass::unknown;
  std::vector<std::string> reasons;
};

/// FF/BF classification. Primary-ness is read off the depth-`depth`
/// truncation; stability from the symbolic families. A non-FF witness is
/// accepted when its factorization count strictly grows over depths
/// depth, 2*depth, 4*depth.
StatusReport bf_ff_status(const MonoidSpec& spec, std::uint64_t depth,
                          const std::optional<PosRational>& non_ff_witness = std::nullopt,
                          const EnumerationLimits& limits = {});

}  // namespace puiseux
