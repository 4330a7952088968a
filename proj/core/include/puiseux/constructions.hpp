#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "puiseux/limits.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

/// Names accepted by catalog(), in a fixed order.
const std::vector<std::string>& catalog_names();

/// Spec of a named monoid:
///   bfplot           <1/2, (p_n + 1)/p_n | n >= 2>
///   factorial        <1/p | p prime>
///   bfnotff          <floor(p/2)/p, (p - floor(p/2))/p | p odd prime>
///   unstablenotbf    <n/p_n, (n+1)/p_n>, p_n the least prime > max((n+1)^2, p_{n-1})
///   primarydense     <n/p_n | n >= 1>
///   primarystable    <n/p_n | n <= 12> + <30/p_n | n > 12>
///   infiniteunstable <n/p_n | n >= 1>, primes enumerated without 3
/// Throws DomainError for unknown names.
MonoidSpec catalog(std::string_view name);

/// One pair of atoms a/2 - 1/p, a/2 + 1/p added for a reducible a.
struct AddedPair {
  PosRational reducible;
  mpz_class prime;
  PosRational lower;
  PosRational upper;
};

struct Stage {
  /// Generators of this stage (those of the previous stage plus the pairs).
  std::vector<PosRational> generators;
  std::vector<AddedPair> added;
};

/// M_0 = <1/2, 1/3> followed by the built stages M_1, M_2, ...
struct StagedMonoid {
  PosRational value_bound;
  std::vector<Stage> stages;
  std::vector<std::string> warnings;

  TruncatedMonoid stage_monoid(std::size_t j) const;
};

/// Builds `num_stages` stages. Stage j lists the reducibles of M_{j-1} up to
/// value_bound with no length-2 factorization in ascending order and gives the
/// n-th of them the least unused prime >= max(13, 2^j).
StagedMonoid bifurcus_build(std::size_t num_stages, const PosRational& value_bound,
                            const EnumerationLimits& limits = {});

struct BifurcusReport {
  PosRational min_nonzero;
  bool min_is_one_third = false;
  bool atoms_preserved = false;
  bool length_two_everywhere = false;
  std::vector<std::string> failures;

  bool ok() const { return min_is_one_third && atoms_preserved && length_two_everywhere; }
};

/// Desk-scale checks on the built stages: min of M^* is 1/3; every recorded
/// generator is an atom of the final stage; every reducible <= bound of stage
/// j-1 has a length-2 factorization in stage j.
BifurcusReport bifurcus_verify(const StagedMonoid& sm, const PosRational& bound,
                               const EnumerationLimits& limits = {});

std::string staged_to_json(const StagedMonoid& sm);
StagedMonoid staged_from_json(std::string_view text);

}  // namespace puiseux
