#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace puiseux {

/// Exact nonnegative rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class PosRational {
 public:
  PosRational() = default;
  PosRational(unsigned long value) : q_(value) {}  // NOLINT(implicit)

  /// Reduces numer/denom. Throws DomainError when denom == 0 or either
  /// argument is negative.
  static PosRational canonical(const mpz_class& numer, const mpz_class& denom);

  /// Parses "a/b" or "a" (ASCII digits only).
  static PosRational parse(std::string_view text);

  static PosRational from_mpq(const mpq_class& value);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  friend PosRational operator+(const PosRational& a, const PosRational& b) {
    return PosRational(mpq_class(a.q_ + b.q_));
  }
  friend PosRational operator*(const PosRational& a, const PosRational& b) {
    return PosRational(mpq_class(a.q_ * b.q_));
  }
  /// Throws DomainError on division by zero.
  friend PosRational operator/(const PosRational& a, const PosRational& b);

  PosRational& operator+=(const PosRational& rhs) {
    q_ += rhs.q_;
    return *this;
  }

  /// a - b; throws DomainError when the difference would be negative.
  PosRational minus(const PosRational& rhs) const;

  /// floor(value)
  mpz_class floor() const;

  friend bool operator==(const PosRational& a, const PosRational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const PosRational& a, const PosRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit PosRational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

/// A nonnegative rational or +infinity. Infinity prints as "inf".
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(PosRational value) : finite_(std::move(value)) {}  // NOLINT(implicit)

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.finite_.reset();
    return r;
  }
  static ExtendedRational parse(std::string_view text);

  bool is_infinite() const { return !finite_.has_value(); }
  /// Precondition: !is_infinite().
  const PosRational& finite() const { return *finite_; }

  std::string str() const { return finite_ ? finite_->str() : "inf"; }

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

 private:
  std::optional<PosRational> finite_ = PosRational{};
};

/// Shorthand for PosRational::canonical.
PosRational canonical(const mpz_class& numer, const mpz_class& denom);

/// (n(r), d(r)) for r > 0. Zero has no such pair and throws DomainError.
std::pair<mpz_class, mpz_class> num_den(const PosRational& r);

/// p-adic valuation; nullopt value represents +infinity (only for r = 0).
struct Valuation {
  std::optional<long> value;

  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// v_p(r) = v_p(n(r)) - v_p(d(r)), v_p(0) = inf. Throws DomainError unless p
/// is prime.
Valuation padic_val(const mpz_class& p, const PosRational& r);

/// Exponent of p in a positive integer n.
long padic_val_int(const mpz_class& p, const mpz_class& n);

/// Least positive common integer multiple of two positive rationals:
/// lcm(n(a), n(b)) / gcd(d(a), d(b)).
PosRational rational_lcm(const PosRational& a, const PosRational& b);

}  // namespace puiseux
