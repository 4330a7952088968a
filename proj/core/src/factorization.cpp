#include "puiseux/factorization.hpp"

#include <algorithm>
#include <set>

#include "knapsack.hpp"
#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

[[noreturn]] void not_member(const PosRational& x) {
  throw NotMemberError(x.str() + " is not an element of the monoid");
}

// Runs visit(counts-by-atom-index) over Z(x) with the cap enforced.
template <class Visit>
void for_each_factorization(const TruncatedMonoid& tm, const PosRational& x,
                            const EnumerationLimits& limits, Visit&& visit) {
  const auto target = tm.scale(x);
  if (!target) not_member(x);
  const std::size_t k = tm.atoms().size();
  std::uint64_t seen = 0;
  std::vector<std::uint64_t> by_atom(k, 0);
  detail::dispatch(tm.kernels(), *target, [&](const auto& kernel, const auto& t) {
    kernel.solve(t, [&](const std::vector<std::uint64_t>& counts) {
      if (++seen > limits.factorization_cap) {
        throw ResourceError("|Z(" + x.str() + ")| exceeds the factorization cap of " +
                            std::to_string(limits.factorization_cap));
      }
      for (std::size_t i = 0; i < k; ++i) by_atom[k - 1 - i] = counts[i];
      visit(by_atom);
      return true;
    });
    return 0;
  });
  if (seen == 0) not_member(x);
}

}  // namespace

Factorization::Factorization(std::vector<FactorTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const FactorTerm& a, const FactorTerm& b) { return a.atom < b.atom; });
  for (auto& t : terms) {
    if (t.multiplicity == 0) continue;
    if (!terms_.empty() && terms_.back().atom == t.atom) {
      terms_.back().multiplicity += t.multiplicity;
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

std::uint64_t Factorization::length() const {
  std::uint64_t len = 0;
  for (const auto& t : terms_) len += t.multiplicity;
  return len;
}

PosRational Factorization::value() const {
  PosRational sum;
  for (const auto& t : terms_) sum += t.atom * PosRational(t.multiplicity);
  return sum;
}

std::uint64_t Factorization::multiplicity(const PosRational& atom) const {
  for (const auto& t : terms_) {
    if (t.atom == atom) return t.multiplicity;
  }
  return 0;
}

std::vector<std::string> Factorization::serialize() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(std::to_string(t.multiplicity) + " x " + t.atom.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::string Factorization::str() const {
  const auto parts = serialize();
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " + ";
    out += parts[i];
  }
  return out;
}

void sort_canonical(std::vector<Factorization>& set) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
  keys.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) keys.emplace_back(set[i].serialize(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Factorization> sorted;
  sorted.reserve(set.size());
  for (const auto& [_, i] : keys) sorted.push_back(std::move(set[i]));
  set = std::move(sorted);
}

LengthSet::LengthSet(std::vector<std::uint64_t> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
}

bool LengthSet::contains(std::uint64_t len) const {
  return std::binary_search(lengths_.begin(), lengths_.end(), len);
}

LengthSet LengthSet::shifted(std::uint64_t k) const {
  std::vector<std::uint64_t> out = lengths_;
  for (auto& v : out) v += k;
  return LengthSet(std::move(out));
}

std::string LengthSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(lengths_[i]);
  }
  return out + "}";
}

std::vector<Factorization> factorizations(const TruncatedMonoid& tm, const PosRational& x,
                                          const EnumerationLimits& limits) {
  std::vector<Factorization> out;
  const auto& atoms = tm.atoms();
  for_each_factorization(tm, x, limits, [&](const std::vector<std::uint64_t>& counts) {
    std::vector<FactorTerm> terms;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0) terms.push_back({atoms[i], counts[i]});
    }
    out.emplace_back(std::move(terms));
  });
  sort_canonical(out);
  return out;
}

LengthSet length_set(const TruncatedMonoid& tm, const PosRational& x,
                     const EnumerationLimits& limits) {
  std::set<std::uint64_t> lengths;
  for_each_factorization(tm, x, limits, [&](const std::vector<std::uint64_t>& counts) {
    std::uint64_t len = 0;
    for (const auto c : counts) len += c;
    lengths.insert(len);
  });
  return LengthSet({lengths.begin(), lengths.end()});
}

PosRational element_elasticity(const TruncatedMonoid& tm, const PosRational& x,
                               const EnumerationLimits& limits) {
  if (x.is_zero()) throw DomainError("elasticity is undefined at 0");
  const LengthSet ls = length_set(tm, x, limits);
  return canonical(detail::to_mpz(ls.max()), detail::to_mpz(ls.min()));
}

std::uint64_t count_factorizations(const TruncatedMonoid& tm, const PosRational& x,
                                   std::uint64_t stop_after) {
  const auto scaled = tm.scale(x);
  if (!scaled) return 0;
  if (x.is_zero()) return 1;
  std::uint64_t seen = 0;
  detail::dispatch(tm.kernels(), *scaled, [&](const auto& kernel, const auto& t) {
    kernel.solve(t, [&](const std::vector<std::uint64_t>&) { return ++seen < stop_after; });
    return 0;
  });
  return seen;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

ValuationCheckReport valuation_coefficient_check(const TruncatedMonoid& tm, const PosRational& x,
                                                 const Factorization& z) {
  ValuationCheckReport report;
  const PrimaryReport primary = is_primary(tm);
  if (!primary.is_primary) {
    report.reason = "monoid is not primary: " + primary.reason;
    return report;
  }
  if (!x.is_integer()) {
    report.reason = x.str() + " is not an integer";
    return report;
  }
  for (const auto& t : z.terms()) {
    if (!tm.atom_index(t.atom)) {
      report.reason = t.atom.str() + " is not an atom";
      return report;
    }
  }
  if (z.value() != x) {
    report.reason = "factorization " + z.str() + " does not sum to " + x.str();
    return report;
  }
  report.status = CheckStatus::pass;
  for (const auto& t : z.terms()) {
    const mpz_class& p = primary.prime_of_atom.at(t.atom);
    const bool divides = mpz_divisible_p(detail::to_mpz(t.multiplicity).get_mpz_t(), p.get_mpz_t());
    report.entries.push_back({t.atom, p, t.multiplicity, divides});
    if (!divides) report.status = CheckStatus::fail;
  }
  return report;
}

PosRational LengthExtremesTable::element(std::size_t cell) const {
  return canonical(mpz_class(step_ * detail::to_mpz(cell)), denom_lcm_);
}

LengthExtremesTable length_extremes_up_to(const TruncatedMonoid& tm, const PosRational& bound,
                                          const EnumerationLimits& limits) {
  LengthExtremesTable table;
  table.denom_lcm_ = tm.denom_lcm();
  const mpz_class top = (bound.numerator() * tm.denom_lcm()) / bound.denominator();
  const auto& kernels = tm.kernels();
  if (tm.trivial()) {
    table.step_ = 1;
    table.min_.assign(1, 0);
    table.max_.assign(1, 0);
    return table;
  }
  if (!kernels.native || !detail::fits_native(top)) {
    throw ResourceError("length table needs scaled values below 2^62");
  }
  const auto& kernel = *kernels.native;
  const std::uint64_t step = kernel.gcd();
  const std::uint64_t cells = detail::to_native(top) / step + 1;
  if (cells > limits.grid_limit) {
    throw ResourceError("length table of " + std::to_string(cells) + " cells exceeds grid limit " +
                        std::to_string(limits.grid_limit));
  }
  table.step_ = detail::to_mpz(step);
  constexpr auto none = LengthExtremesTable::kUnreachable;
  table.min_.assign(cells, none);
  table.max_.assign(cells, 0);
  table.min_[0] = 0;
  std::vector<std::uint64_t> strides;
  for (const std::uint64_t g : kernel.gens()) strides.push_back(g / step);
  for (std::uint64_t v = 1; v < cells; ++v) {
    std::uint32_t lo = none;
    std::uint32_t hi = 0;
    for (const std::uint64_t s : strides) {
      if (s > v) continue;
      const std::uint32_t prev = table.min_[v - s];
      if (prev == none) continue;
      lo = std::min(lo, prev + 1);
      hi = std::max(hi, table.max_[v - s] + 1);
    }
    table.min_[v] = lo;
    table.max_[v] = hi;
  }
  return table;
}

}  // namespace puiseux
