#include "puiseux/rational.hpp"

#include <cctype>

#include "puiseux/errors.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

mpz_class parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw DomainError("malformed rational literal '" + std::string(whole) + "'");
  }
  for (const char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed rational literal '" + std::string(whole) + "'");
    }
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

PosRational PosRational::canonical(const mpz_class& numer, const mpz_class& denom) {
  if (sgn(denom) == 0) {
    throw DomainError("zero denominator");
  }
  if (sgn(numer) < 0 || sgn(denom) < 0) {
    throw DomainError("negative rationals are not supported");
  }
  mpq_class q(numer, denom);
  q.canonicalize();
  return PosRational(std::move(q));
}

PosRational PosRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return canonical(parse_digits(text, text), 1);
  }
  return canonical(parse_digits(text.substr(0, slash), text),
                   parse_digits(text.substr(slash + 1), text));
}

PosRational PosRational::from_mpq(const mpq_class& value) {
  return canonical(value.get_num(), value.get_den());
}

PosRational operator/(const PosRational& a, const PosRational& b) {
  if (b.is_zero()) {
    throw DomainError("division by zero");
  }
  return PosRational(mpq_class(a.q_ / b.q_));
}

PosRational PosRational::minus(const PosRational& rhs) const {
  if (q_ < rhs.q_) {
    throw DomainError("negative difference " + str() + " - " + rhs.str());
  }
  return PosRational(mpq_class(q_ - rhs.q_));
}

mpz_class PosRational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") {
    return infinity();
  }
  return ExtendedRational(PosRational::parse(text));
}

PosRational canonical(const mpz_class& numer, const mpz_class& denom) {
  return PosRational::canonical(numer, denom);
}

std::pair<mpz_class, mpz_class> num_den(const PosRational& r) {
  if (r.is_zero()) {
    throw DomainError("n(r) and d(r) are undefined at 0");
  }
  return {r.numerator(), r.denominator()};
}

long padic_val_int(const mpz_class& p, const mpz_class& n) {
  if (sgn(n) == 0) {
    throw DomainError("valuation of 0 is infinite");
  }
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation padic_val(const mpz_class& p, const PosRational& r) {
  if (!is_prime(p)) {
    throw DomainError(p.get_str() + " is not prime");
  }
  if (r.is_zero()) {
    return Valuation{};
  }
  return Valuation{padic_val_int(p, r.numerator()) - padic_val_int(p, r.denominator())};
}

PosRational rational_lcm(const PosRational& a, const PosRational& b) {
  if (a.is_zero() || b.is_zero()) {
    throw DomainError("lcm of zero");
  }
  mpz_class n;
  mpz_class d;
  mpz_lcm(n.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_gcd(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return canonical(n, d);
}

}  // namespace puiseux
