#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library's knapsack, grid tables or prime sequences.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace oracle {

using puiseux::PosRational;

/// First `count` primes by a sieve of Eratosthenes over a growing range.
inline std::vector<std::uint64_t> sieve_primes(std::size_t count) {
  std::size_t limit = 64;
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      if (primes.size() == count) return primes;
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    limit *= 2;
  }
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Multiplicity vector over `atoms` (same order).
using Counts = std::vector<std::uint64_t>;

/// Every multiplicity vector with sum(c_i * atoms_i) == x: nested loops over
/// c_i in [0, x / atoms_i], all values scaled to integers by the lcm of the
/// denominators; the last multiplicity is solved for directly.
inline std::vector<Counts> factorizations(const std::vector<PosRational>& atoms,
                                          const PosRational& x) {
  mpz_class lcm = x.denominator();
  for (const auto& a : atoms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.denominator().get_mpz_t());
  std::vector<std::uint64_t> w;
  for (const auto& a : atoms) w.push_back(mpz_class(a.numerator() * (lcm / a.denominator())).get_ui());
  const std::uint64_t target = mpz_class(x.numerator() * (lcm / x.denominator())).get_ui();

  std::vector<Counts> out;
  if (atoms.empty()) {
    if (target == 0) out.emplace_back();
    return out;
  }
  Counts c(atoms.size(), 0);
  auto loop = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
    if (i + 1 == atoms.size()) {
      if (rest % w[i] == 0) {
        c[i] = rest / w[i];
        out.push_back(c);
      }
      return;
    }
    for (std::uint64_t k = 0; k * w[i] <= rest; ++k) {
      c[i] = k;
      self(self, i + 1, rest - k * w[i]);
    }
    c[i] = 0;
  };
  loop(loop, 0, target);
  return out;
}

inline std::set<std::uint64_t> lengths(const std::vector<Counts>& zs) {
  std::set<std::uint64_t> out;
  for (const auto& z : zs) {
    std::uint64_t len = 0;
    for (auto m : z) len += m;
    out.insert(len);
  }
  return out;
}

/// All sums of the atoms that are <= bound (including 0), ascending.
inline std::vector<PosRational> elements_up_to(const std::vector<PosRational>& atoms,
                                               const PosRational& bound) {
  std::set<mpq_class> seen{mpq_class(0)};
  std::vector<mpq_class> frontier{mpq_class(0)};
  while (!frontier.empty()) {
    std::vector<mpq_class> next;
    for (const auto& v : frontier) {
      for (const auto& a : atoms) {
        mpq_class s = v + a.value();
        if (s > bound.value()) continue;
        if (seen.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<PosRational> out;
  for (const auto& v : seen) out.push_back(PosRational::from_mpq(v));
  return out;
}

/// Generators that are not sums of two nonzero elements of the monoid they
/// generate, by listing all elements below each generator.
inline std::vector<PosRational> atoms_of(std::vector<PosRational> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<PosRational> out;
  for (const auto& g : gens) {
    const auto below = elements_up_to(gens, g);
    const std::set<PosRational> members(below.begin(), below.end());
    bool reducible = false;
    for (const auto& y : below) {
      if (y.is_zero() || y == g) continue;
      if (members.contains(g.minus(y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(g);
  }
  return out;
}

/// For M = <i / p_i | 1 <= i <= parts>: an integer x factors as a sum of
/// multiplicities p_i * m_i of i/p_i with sum i * m_i = x, so its length is
/// sum p_i * m_i. Returns {min, max} of that weight over all partitions of x
/// into parts 1..parts (the i-th part weighted by primes[i-1]).
inline std::pair<std::uint64_t, std::uint64_t> partition_length_extremes(
    std::uint64_t x, const std::vector<std::uint64_t>& primes) {
  std::uint64_t lo = UINT64_MAX;
  std::uint64_t hi = 0;
  auto rec = [&](auto&& self, std::size_t part, std::uint64_t rest, std::uint64_t weight) -> void {
    if (rest == 0) {
      lo = std::min(lo, weight);
      hi = std::max(hi, weight);
      return;
    }
    if (part == 0) return;
    const std::uint64_t size = part;
    for (std::uint64_t k = 0; k * size <= rest; ++k) {
      self(self, part - 1, rest - k * size, weight + k * primes[part - 1]);
    }
  };
  rec(rec, primes.size(), x, 0);
  return {lo, hi};
}

/// Random positive rational a/b with 1 <= a <= max_num, 1 <= b <= max_den.
inline PosRational random_rational(std::mt19937_64& rng, unsigned max_num, unsigned max_den) {
  std::uniform_int_distribution<unsigned> num(1, max_num);
  std::uniform_int_distribution<unsigned> den(1, max_den);
  const unsigned a = num(rng);
  const unsigned b = den(rng);
  return puiseux::canonical(a, b);
}

/// Between min_count and max_count random generators.
inline std::vector<PosRational> random_generators(std::mt19937_64& rng, unsigned min_count,
                                                  unsigned max_count, unsigned max_num,
                                                  unsigned max_den) {
  std::uniform_int_distribution<unsigned> count(min_count, max_count);
  const unsigned n = count(rng);
  std::vector<PosRational> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(random_rational(rng, max_num, max_den));
  return out;
}

}  // namespace oracle
