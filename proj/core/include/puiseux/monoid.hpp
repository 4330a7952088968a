#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "puiseux/limits.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

namespace detail {
struct Kernels;
}

struct TruncationOrigin {
  std::shared_ptr<const MonoidSpec> spec;  // null for monoids built from a bare list
  std::uint64_t depth = 0;
};

/// A finitely generated Puiseux monoid: its atoms, the lcm L of their
/// denominators, and the atoms scaled by L. Immutable.
class TruncatedMonoid {
 public:
  /// The trivial monoid {0}.
  TruncatedMonoid();

  /// Builds the monoid generated by `generators`, keeping only its atoms.
  /// Zeros and duplicates are dropped.
  static TruncatedMonoid from_generators(std::vector<PosRational> generators,
                                         TruncationOrigin origin = {});

  /// Ascending, pairwise distinct.
  const std::vector<PosRational>& atoms() const { return atoms_; }
  const mpz_class& denom_lcm() const { return denom_lcm_; }
  /// scaled_gens()[i] == atoms()[i] * denom_lcm().
  const std::vector<mpz_class>& scaled_gens() const { return scaled_; }
  const TruncationOrigin& origin() const { return origin_; }

  bool trivial() const { return atoms_.empty(); }
  /// Precondition: !trivial().
  const PosRational& min_atom() const { return atoms_.front(); }
  const PosRational& max_atom() const { return atoms_.back(); }

  /// Index of `a` in atoms(), if it is an atom.
  std::optional<std::size_t> atom_index(const PosRational& a) const;

  /// x * denom_lcm() when that is an integer.
  std::optional<mpz_class> scale(const PosRational& x) const;
  PosRational unscale(const mpz_class& v) const;

  const detail::Kernels& kernels() const { return *kernels_; }

 private:
  std::vector<PosRational> atoms_;
  mpz_class denom_lcm_ = 1;
  std::vector<mpz_class> scaled_;
  TruncationOrigin origin_;
  std::shared_ptr<const detail::Kernels> kernels_;
};

/// Instantiates each symbolic family at its first `depth` indices (clipped to
/// index_end), adds the explicit generators, and keeps the atoms. Throws
/// SemanticError for nonpositive numerators, primality violations of families
/// flagged `primary`, and atoms outside declared atom_inf/atom_sup.
TruncatedMonoid truncate(const MonoidSpec& spec, std::uint64_t depth);

/// The generators of tm that are not sums of two nonzero elements, recomputed
/// by exhaustive search.
std::vector<PosRational> atoms(const TruncatedMonoid& tm);

/// Generators (deduplicated, zeros dropped) that survive atom detection.
std::vector<PosRational> detect_atoms(std::vector<PosRational> generators);

bool contains(const TruncatedMonoid& tm, const PosRational& x);

/// Every element <= bound, ascending. Uses a grid table of bound * L cells
/// when that fits limits.grid_limit and otherwise enumerates combinations.
std::vector<PosRational> elements_up_to(const TruncatedMonoid& tm, const PosRational& bound,
                                        const EnumerationLimits& limits = {});

struct PrimaryReport {
  bool is_primary = false;
  std::map<PosRational, mpz_class> prime_of_atom;  // filled only when primary
  std::string reason;                              // why not, when not primary
};

PrimaryReport is_primary(const TruncatedMonoid& tm);

enum class Stability { stable, unstable };

const char* to_string(Stability s);

/// Stability of every atom of truncate(spec, depth), decided from the symbolic
/// families: an atom is stable iff its numerator is the constant numerator of
/// an unbounded family (or such a family is declared stable).
std::map<PosRational, Stability> classify_stability(const MonoidSpec& spec, std::uint64_t depth);

/// Same classification applied to the atoms of an existing truncation.
std::map<PosRational, Stability> classify_atoms(const MonoidSpec& spec, const TruncatedMonoid& tm);

}  // namespace puiseux
