#include "puiseux/primes.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool fits_u64(const mpz_class& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const mpz_class& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (const std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n, const PrimalityOptions& options) {
  if (sgn(n) <= 0) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  const int verdict = mpz_probab_prime_p(n.get_mpz_t(), options.rounds);
  if (verdict == 0) return false;
  if (options.log) options.log(PrimalityCertificate{n, options.rounds});
  return true;
}

mpz_class next_prime(const mpz_class& n) {
  mpz_class candidate = n + 1;
  if (candidate <= 2) return 2;
  if (mpz_even_p(candidate.get_mpz_t())) ++candidate;
  while (!is_prime(candidate)) candidate += 2;
  return candidate;
}

PrimeFilter PrimeFilter::all() { return PrimeFilter{}; }

PrimeFilter PrimeFilter::odd() {
  PrimeFilter f;
  f.kind_ = Kind::odd;
  return f;
}

PrimeFilter PrimeFilter::excluding(std::vector<mpz_class> excluded) {
  PrimeFilter f;
  f.kind_ = Kind::exclude;
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  f.excluded_ = std::move(excluded);
  return f;
}

PrimeFilter PrimeFilter::at_least(mpz_class bound) {
  PrimeFilter f;
  f.kind_ = Kind::min;
  f.bound_ = std::move(bound);
  return f;
}

PrimeFilter PrimeFilter::above(std::string label, std::function<mpz_class(std::uint64_t)> lower) {
  PrimeFilter f;
  f.kind_ = Kind::above;
  f.label_ = std::move(label);
  f.lower_ = std::move(lower);
  return f;
}

bool PrimeFilter::admits(const mpz_class& p) const {
  switch (kind_) {
    case Kind::all:
    case Kind::above:
      return true;
    case Kind::odd:
      return p != 2;
    case Kind::exclude:
      return !std::binary_search(excluded_.begin(), excluded_.end(), p);
    case Kind::min:
      return p >= bound_;
  }
  return true;
}

std::string PrimeFilter::str() const {
  switch (kind_) {
    case Kind::all:
      return "all";
    case Kind::odd:
      return "odd";
    case Kind::exclude: {
      std::string out = "exclude:[";
      for (std::size_t i = 0; i < excluded_.size(); ++i) {
        if (i > 0) out += ",";
        out += excluded_[i].get_str();
      }
      return out + "]";
    }
    case Kind::min:
      return "min:" + bound_.get_str();
    case Kind::above:
      return "above:" + label_;
  }
  return "all";
}

const mpz_class& PrimeSequence::at(std::uint64_t index) {
  if (index == 0) {
    throw DomainError("prime sequences are 1-indexed");
  }
  while (cache_.size() < index) {
    mpz_class start = cache_.empty() ? mpz_class(1) : cache_.back();
    if (filter_.kind_ == PrimeFilter::Kind::above) {
      const mpz_class lower = filter_.lower_(cache_.size() + 1);
      start = std::max(start, lower);
      cache_.push_back(next_prime(start));
      continue;
    }
    if (filter_.kind_ == PrimeFilter::Kind::min && start < filter_.bound_) {
      start = filter_.bound_ - 1;
    }
    mpz_class p = next_prime(start);
    while (!filter_.admits(p)) p = next_prime(p);
    cache_.push_back(std::move(p));
  }
  return cache_[index - 1];
}

std::vector<mpz_class> PrimeSequence::take(std::uint64_t count) {
  if (count > 0) at(count);
  return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<mpz_class> prime_seq(const PrimeFilter& filter, std::uint64_t count) {
  PrimeSequence seq(filter);
  return seq.take(count);
}

}  // namespace puiseux
