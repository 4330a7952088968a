#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "puiseux/limits.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

struct FactorTerm {
  PosRational atom;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

/// A formal sum of atoms, stored as (atom, multiplicity) pairs sorted by atom.
class Factorization {
 public:
  Factorization() = default;
  /// Merges repeated atoms and drops zero multiplicities.
  explicit Factorization(std::vector<FactorTerm> terms);

  const std::vector<FactorTerm>& terms() const { return terms_; }
  /// Number of formal summands |z|.
  std::uint64_t length() const;
  /// The element the formal sum evaluates to.
  PosRational value() const;
  std::uint64_t multiplicity(const PosRational& atom) const;

  /// Terms as "m x a/b", in lexicographic order of that text.
  std::vector<std::string> serialize() const;
  /// serialize() joined with " + "; the empty factorization prints as "0".
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<FactorTerm> terms_;
};

/// Sorts a factorization set into its canonical (lexicographic) order.
void sort_canonical(std::vector<Factorization>& set);

/// Sorted set of factorization lengths.
class LengthSet {
 public:
  LengthSet() = default;
  explicit LengthSet(std::vector<std::uint64_t> lengths);

  const std::vector<std::uint64_t>& values() const { return lengths_; }
  bool empty() const { return lengths_.empty(); }
  std::size_t size() const { return lengths_.size(); }
  std::uint64_t min() const { return lengths_.front(); }
  std::uint64_t max() const { return lengths_.back(); }
  bool contains(std::uint64_t len) const;
  /// The set with every length shifted by `k`.
  LengthSet shifted(std::uint64_t k) const;
  /// "{2, 3, 5}"
  std::string str() const;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<std::uint64_t> lengths_;
};

/// The complete set Z(x), in canonical order. Z(0) is the single empty
/// factorization. Throws NotMemberError when x is not in tm and ResourceError
/// when |Z(x)| exceeds limits.factorization_cap.
std::vector<Factorization> factorizations(const TruncatedMonoid& tm, const PosRational& x,
                                          const EnumerationLimits& limits = {});

/// L(x) = {|z| : z in Z(x)}; L(0) = {0}.
LengthSet length_set(const TruncatedMonoid& tm, const PosRational& x,
                     const EnumerationLimits& limits = {});

/// max L(x) / min L(x). Undefined (DomainError) at x = 0.
PosRational element_elasticity(const TruncatedMonoid& tm, const PosRational& x,
                               const EnumerationLimits& limits = {});

/// min(|Z(x)|, stop_after); 0 when x is not in tm.
std::uint64_t count_factorizations(const TruncatedMonoid& tm, const PosRational& x,
                                   std::uint64_t stop_after);

enum class CheckStatus { pass, fail, inapplicable };

const char* to_string(CheckStatus s);

struct ValuationCheckEntry {
  PosRational atom;
  mpz_class prime;
  std::uint64_t multiplicity = 0;
  bool divides = false;
};

struct ValuationCheckReport {
  CheckStatus status = CheckStatus::inapplicable;
  std::vector<ValuationCheckEntry> entries;
  std::string reason;
};

/// For a primary tm, an integer x, and z in Z(x): checks that the prime
/// denominator of every atom used in z divides its multiplicity. Violated
/// preconditions give an inapplicable report.
ValuationCheckReport valuation_coefficient_check(const TruncatedMonoid& tm, const PosRational& x,
                                                 const Factorization& z);

/// Minimum and maximum factorization length at every point of the grid
/// {0, g/L, 2g/L, ...} up to a bound, where g is the gcd of the scaled atoms.
/// Computed by dynamic programming, independently of factorizations().
class LengthExtremesTable {
 public:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

  std::size_t cells() const { return min_.size(); }
  bool member(std::size_t cell) const { return min_[cell] != kUnreachable; }
  std::uint32_t min_length(std::size_t cell) const { return min_[cell]; }
  std::uint32_t max_length(std::size_t cell) const { return max_[cell]; }
  PosRational element(std::size_t cell) const;

 private:
  friend LengthExtremesTable length_extremes_up_to(const TruncatedMonoid&, const PosRational&,
                                                   const EnumerationLimits&);
  mpz_class step_;  // grid spacing in scaled units
  mpz_class denom_lcm_;
  std::vector<std::uint32_t> min_;
  std::vector<std::uint32_t> max_;
};

/// Throws ResourceError when the grid exceeds limits.grid_limit cells or the
/// scaled values do not fit in 62 bits.
LengthExtremesTable length_extremes_up_to(const TruncatedMonoid& tm, const PosRational& bound,
                                          const EnumerationLimits& limits = {});

}  // namespace puiseux
