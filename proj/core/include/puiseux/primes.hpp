#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace puiseux {

/// Deterministic Miller-Rabin for 64-bit inputs (witnesses: first twelve
/// primes).
bool is_prime_u64(std::uint64_t n);

/// Record of a primality decision that was only probabilistic.
struct PrimalityCertificate {
  mpz_class n;
  int rounds = 0;
};

struct PrimalityOptions {
  int rounds = 40;
  /// Receives one entry per input >= 2^64 that was accepted as (probably) prime.
  std::function<void(const PrimalityCertificate&)> log;
};

/// Exact below 2^64; above that a Miller-Rabin/BPSW test with `rounds`
/// repetitions whose positive answers are reported to `options.log`.
bool is_prime(const mpz_class& n, const PrimalityOptions& options = {});

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

/// Which primes, in increasing order, make up a prime sequence.
class PrimeFilter {
 public:
  enum class Kind { all, odd, exclude, min, above };

  static PrimeFilter all();
  static PrimeFilter odd();
  static PrimeFilter excluding(std::vector<mpz_class> excluded);
  static PrimeFilter at_least(mpz_class bound);
  /// The n-th prime is the least prime exceeding both lower(n) and the
  /// (n-1)-th prime. `label` is the expression text used when serializing.
  static PrimeFilter above(std::string label,
                           std::function<mpz_class(std::uint64_t)> lower);

  Kind kind() const { return kind_; }

  /// Serialized form: all | odd | exclude:[a,b] | min:b | above:<expr>.
  std::string str() const;

 private:
  friend class PrimeSequence;

  bool admits(const mpz_class& p) const;

  Kind kind_ = Kind::all;
  std::vector<mpz_class> excluded_;
  mpz_class bound_;
  std::string label_;
  std::function<mpz_class(std::uint64_t)> lower_;
};

/// Lazily extended, 1-indexed sequence of the primes admitted by a filter.
class PrimeSequence {
 public:
  explicit PrimeSequence(PrimeFilter filter) : filter_(std::move(filter)) {}

  /// The index-th prime (index >= 1).
  const mpz_class& at(std::uint64_t index);

  /// The first `count` primes.
  std::vector<mpz_class> take(std::uint64_t count);

 private:
  PrimeFilter filter_;
  std::vector<mpz_class> cache_;
};

/// The first `count` primes admitted by `filter`.
std::vector<mpz_class> prime_seq(const PrimeFilter& filter, std::uint64_t count);

}  // namespace puiseux
