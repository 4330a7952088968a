#pragma once

// Exhaustive search over nonnegative integer combinations of positive integer
// generators. Shared by membership, element listing, and factorization.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux::detail {

// Values handled by the 64-bit kernel stay below this so sums of two never wrap.
inline constexpr std::uint64_t kNativeLimit = std::uint64_t{1} << 62;

inline bool fits_native(const mpz_class& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::uint64_t to_native(const mpz_class& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline std::uint64_t gcd_of(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline std::uint64_t count_of(std::uint64_t v) { return v; }

inline std::uint64_t count_of(const mpz_class& v) {
  if (!fits_native(v)) throw ResourceError("multiplicity exceeds 62 bits");
  return to_native(v);
}

inline bool is_zero(std::uint64_t v) { return v == 0; }
inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }

/// Generators are kept in descending order; counts reported to visitors are
/// indexed the same way.
template <class Int>
class Knapsack {
 public:
  Knapsack() = default;

  explicit Knapsack(std::vector<Int> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end(), [](const Int& a, const Int& b) { return a > b; });
    suffix_gcd_.assign(gens_.size() + 1, Int(0));
    for (std::size_t i = gens_.size(); i-- > 0;) {
      suffix_gcd_[i] = gcd_of(gens_[i], suffix_gcd_[i + 1]);
    }
  }

  const std::vector<Int>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// gcd of all generators (0 when there are none).
  const Int& gcd() const { return suffix_gcd_.front(); }

  /// Calls visit(counts) for every representation of target; visit returns
  /// false to stop early. Returns false iff stopped.
  template <class Visit>
  bool solve(const Int& target, Visit&& visit) const {
    std::vector<std::uint64_t> counts(gens_.size(), 0);
    return solve_from(0, target, counts, visit);
  }

  bool representable(const Int& target) const {
    if (is_zero(target)) return true;
    return !solve(target, [](const std::vector<std::uint64_t>&) { return false; });
  }

  /// Calls visit(sum) once per combination whose total is <= bound (distinct
  /// combinations may repeat a sum). Throws ResourceError past `budget`.
  template <class Visit>
  void sums_up_to(const Int& bound, std::uint64_t budget, Visit&& visit) const {
    std::uint64_t visited = 0;
    sums_from(0, Int(0), bound, budget, visited, visit);
  }

 private:
  template <class Visit>
  bool solve_from(std::size_t i, const Int& residual, std::vector<std::uint64_t>& counts,
                  Visit& visit) const {
    if (is_zero(residual)) {
      std::fill(counts.begin() + static_cast<std::ptrdiff_t>(i), counts.end(), 0);
      return visit(counts);
    }
    if (i == gens_.size()) return true;
    if (!is_zero(Int(residual % suffix_gcd_[i]))) return true;
    const Int& g = gens_[i];
    if (i + 1 == gens_.size()) {
      counts[i] = count_of(Int(residual / g));
      return visit(counts);
    }
    const std::uint64_t most = count_of(Int(residual / g));
    Int rest = residual - Int(g * Int(most));
    for (std::uint64_t c = most;; --c) {
      counts[i] = c;
      if (!solve_from(i + 1, rest, counts, visit)) return false;
      if (c == 0) break;
      rest += g;
    }
    counts[i] = 0;
    return true;
  }

  template <class Visit>
  void sums_from(std::size_t i, const Int& sum, const Int& room, std::uint64_t budget,
                 std::uint64_t& visited, Visit& visit) const {
    if (i == gens_.size()) {
      if (++visited > budget) {
        throw ResourceError("element enumeration exceeded the combination budget of " +
                            std::to_string(budget));
      }
      visit(sum);
      return;
    }
    const Int& g = gens_[i];
    Int s = sum;
    Int r = room;
    for (;;) {
      sums_from(i + 1, s, r, budget, visited, visit);
      if (r < g) break;
      r -= g;
      s += g;
    }
  }

  std::vector<Int> gens_;
  std::vector<Int> suffix_gcd_;
};

/// Native kernel when every generator fits in 62 bits, plus the always
/// available arbitrary-precision kernel.
struct Kernels {
  std::optional<Knapsack<std::uint64_t>> native;
  Knapsack<mpz_class> wide;

  explicit Kernels(const std::vector<mpz_class>& gens) : wide(gens) {
    const bool small = std::all_of(gens.begin(), gens.end(), fits_native);
    if (small) {
      std::vector<std::uint64_t> n;
      n.reserve(gens.size());
      for (const auto& g : gens) n.push_back(to_native(g));
      native.emplace(std::move(n));
    }
  }
};

/// Calls f(kernel, target) with the native kernel when both the kernel and the
/// target fit, otherwise with the wide kernel.
template <class F>
decltype(auto) dispatch(const Kernels& k, const mpz_class& target, F&& f) {
  if (k.native && fits_native(target)) {
    return f(*k.native, to_native(target));
  }
  return f(k.wide, target);
}

}  // namespace puiseux::detail
