#include "puiseux/invariants.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "knapsack.hpp"
#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

bool is_multiple_of(const PosRational& x, const PosRational& a) { return (x / a).is_integer(); }

PosRational ratio(const mpz_class& num, const mpz_class& den) { return canonical(num, den); }

TruncatedMonoid submonoid(const TruncatedMonoid& tm, const std::map<PosRational, Stability>& cls,
                          Stability which) {
  std::vector<PosRational> gens;
  for (const auto& [atom, s] : cls) {
    if (s == which) gens.push_back(atom);
  }
  return TruncatedMonoid::from_generators(std::move(gens), tm.origin());
}

}  // namespace

const char* to_string(ElasticityMode m) {
  return m == ElasticityMode::symbolic ? "symbolic" : "truncated-exact";
}

const char* to_string(Acceptance a) {
  switch (a) {
    case Acceptance::accepted:
      return "true";
    case Acceptance::not_accepted:
      return "false";
    case Acceptance::unknown:
      return "unknown";
    case Acceptance::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

std::string to_json(const ElasticityReport& report) {
  nlohmann::ordered_json out;
  out["mode"] = to_string(report.mode);
  out["value"] = report.value.str();
  out["accepted"] = to_string(report.accepted);
  out["witness_rule"] = report.witness_rule;
  out["metadata_used"] = report.metadata_used;
  return out.dump(2);
}

Acceptance is_accepted(const MonoidSpec& spec) {
  if (spec.finitely_generated()) return Acceptance::accepted;
  const auto& md = spec.metadata;
  if (md.zero_limit_point.value_or(false)) return Acceptance::inapplicable;
  if (md.atom_sup && md.atom_sup->is_infinite()) return Acceptance::inapplicable;
  if (md.inf_attained == false || md.sup_attained == false) return Acceptance::not_accepted;
  if (md.inf_attained && md.sup_attained) return Acceptance::accepted;
  return Acceptance::unknown;
}

ElasticityReport monoid_elasticity(const MonoidSpec& spec, const TruncatedMonoid& tm,
                                   ElasticityMode mode) {
  ElasticityReport report;
  report.mode = mode;
  if (mode == ElasticityMode::truncated_exact) {
    if (tm.trivial()) throw DomainError("the trivial monoid has no elasticity");
    const PosRational& lo = tm.min_atom();
    const PosRational& hi = tm.max_atom();
    report.value = hi / lo;
    report.accepted = Acceptance::accepted;
    report.witness_rule = "common integer multiples of min atom " + lo.str() + " and max atom " +
                          hi.str() + " (least: " + rational_lcm(lo, hi).str() + ")";
    return report;
  }

  const auto& md = spec.metadata;
  if (!md.zero_limit_point) {
    throw InsufficientMetadataError("symbolic elasticity needs metadata.zero_limit_point");
  }
  report.metadata_used.push_back("zero_limit_point");
  if (*md.zero_limit_point) {
    report.value = ExtendedRational::infinity();
    report.accepted = Acceptance::inapplicable;
    report.witness_rule = "x_n = n(a_n) n(a_1) along atoms a_n decreasing to 0";
    return report;
  }
  if (!md.atom_inf || !md.atom_sup) {
    throw InsufficientMetadataError("symbolic elasticity needs metadata.atom_inf and atom_sup");
  }
  report.metadata_used.push_back("atom_inf");
  report.metadata_used.push_back("atom_sup");
  if (md.atom_inf->is_zero()) {
    throw DomainError("atom_inf = 0 contradicts zero_limit_point = false");
  }
  if (md.atom_sup->is_infinite()) {
    report.value = ExtendedRational::infinity();
    report.accepted = Acceptance::inapplicable;
    report.witness_rule = "atoms are unbounded above";
    return report;
  }
  const PosRational& lo = *md.atom_inf;
  const PosRational& hi = md.atom_sup->finite();
  report.value = hi / lo;
  report.accepted = is_accepted(spec);
  if (md.inf_attained) report.metadata_used.push_back("inf_attained");
  if (md.sup_attained) report.metadata_used.push_back("sup_attained");
  if (report.accepted == Acceptance::accepted) {
    report.witness_rule = "common integer multiples of " + lo.str() + " and " + hi.str() +
                          ", e.g. n(inf) n(sup) = " +
                          mpz_class(lo.numerator() * hi.numerator()).get_str();
  } else {
    report.witness_rule = "approached by x_n = n(b_n) n(c_n) with atoms b_n -> inf, c_n -> sup";
  }
  return report;
}

std::vector<PosRational> elasticity_witnesses(const TruncatedMonoid& tm, const PosRational& bound,
                                              const EnumerationLimits& limits) {
  if (tm.trivial()) return {};
  const PosRational& lo = tm.min_atom();
  const PosRational& hi = tm.max_atom();
  const PosRational rho = hi / lo;
  std::vector<PosRational> out;
  for (const auto& x : elements_up_to(tm, bound, limits)) {
    if (x.is_zero()) continue;
    if (element_elasticity(tm, x, limits) != rho) continue;
    if (!is_multiple_of(x, lo) || !is_multiple_of(x, hi)) {
      throw Error("witness " + x.str() + " is not a common multiple of " + lo.str() + " and " +
                  hi.str());
    }
    out.push_back(x);
  }
  return out;
}

std::vector<PosRational> elasticity_set(const TruncatedMonoid& tm, const PosRational& bound,
                                        const EnumerationLimits& limits) {
  std::set<PosRational> values;
  for (const auto& x : elements_up_to(tm, bound, limits)) {
    if (!x.is_zero()) values.insert(element_elasticity(tm, x, limits));
  }
  return {values.begin(), values.end()};
}

Decomposition decompose_stable_unstable(const MonoidSpec& spec, const TruncatedMonoid& tm,
                                        const PosRational& x, const EnumerationLimits& limits) {
  if (const auto primary = is_primary(tm); !primary.is_primary) {
    throw DomainError("decomposition needs a primary monoid: " + primary.reason);
  }
  if (!contains(tm, x)) throw NotMemberError(x.str() + " is not an element of the monoid");
  const auto cls = classify_atoms(spec, tm);
  const TruncatedMonoid stable = submonoid(tm, cls, Stability::stable);
  const TruncatedMonoid unstable = submonoid(tm, cls, Stability::unstable);

  Decomposition result;
  for (const auto& s : elements_up_to(stable, x, limits)) {
    const PosRational u = x.minus(s);
    if (!contains(unstable, u)) continue;
    if (count_factorizations(tm, s, 2) != 1) continue;
    if (result.candidates == 0) {
      result.stable_part = s;
      result.unstable_part = u;
    }
    ++result.candidates;
  }
  if (result.candidates == 0) {
    throw DomainError(x.str() + " has no stable + unstable splitting with a uniquely factorable "
                      "stable part");
  }
  result.unique = result.candidates == 1;
  return result;
}

ShiftReport shifted_lengths(const TruncatedMonoid& tm, const PosRational& x, const PosRational& a,
                            const EnumerationLimits& limits) {
  ShiftReport report;
  const auto primary = is_primary(tm);
  if (!primary.is_primary) {
    report.reason = "monoid is not primary: " + primary.reason;
    return report;
  }
  if (!tm.atom_index(a)) {
    report.reason = a.str() + " is not an atom";
    return report;
  }
  const mpz_class& p = a.denominator();
  for (const auto& other : tm.atoms()) {
    if (other != a && mpz_divisible_p(other.denominator().get_mpz_t(), p.get_mpz_t())) {
      report.reason = "prime " + p.get_str() + " also divides the denominator of " + other.str();
      return report;
    }
  }
  if (mpz_divisible_p(x.denominator().get_mpz_t(), p.get_mpz_t())) {
    report.reason = "prime " + p.get_str() + " divides d(" + x.str() + ")";
    return report;
  }
  if (!contains(tm, x)) {
    report.reason = x.str() + " is not an element of the monoid";
    return report;
  }
  report.base = length_set(tm, x, limits);
  report.shifted = length_set(tm, x + a, limits);
  report.status = report.shifted == report.base.shifted(1) ? CheckStatus::pass : CheckStatus::fail;
  return report;
}

std::vector<PosRational> predicted_elasticities_finite_unstable(std::span<const LengthBounds> base,
                                                                std::uint64_t k_max) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  std::set<PosRational> values;
  for (const auto& b : base) {
    if (b.min_length > b.max_length) throw DomainError("min length exceeds max length");
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      values.insert(ratio(detail::to_mpz(b.max_length + k), detail::to_mpz(b.min_length + k)));
    }
  }
  return {values.begin(), values.end()};
}

std::vector<AbsolutelyUnstable> absolutely_unstable_up_to(const MonoidSpec& spec,
                                                          const TruncatedMonoid& tm,
                                                          const PosRational& bound,
                                                          const EnumerationLimits& limits) {
  const auto cls = classify_atoms(spec, tm);
  const TruncatedMonoid stable = submonoid(tm, cls, Stability::stable);
  const auto stable_elements = elements_up_to(stable, bound, limits);
  std::vector<AbsolutelyUnstable> out;
  for (const auto& x : elements_up_to(tm, bound, limits)) {
    if (x.is_zero()) continue;
    bool divisible = false;
    for (const auto& s : stable_elements) {
      if (s.is_zero()) continue;
      if (x < s) break;
      if (contains(tm, x.minus(s))) {
        divisible = true;
        break;
      }
    }
    if (divisible) continue;
    const LengthSet ls = length_set(tm, x, limits);
    out.push_back({x, {ls.min(), ls.max()}});
  }
  return out;
}

SequenceDescriptor SequenceDescriptor::parse(std::string_view expr, std::string_view prime_filter) {
  return SequenceDescriptor{Expr::parse(expr), parse_prime_filter(prime_filter)};
}

DensityResult density_witness(const SequenceDescriptor& a, const SequenceDescriptor& b,
                              const PosRational& target, const PosRational& epsilon,
                              const DensityBudget& budget) {
  if (target < PosRational(1)) throw DomainError("density target must be >= 1");
  if (epsilon.is_zero()) throw DomainError("epsilon must be positive");
  PrimeSequence primes_a(a.primes);
  PrimeSequence primes_b(b.primes);
  const mpq_class t = target.value();
  const mpq_class eps = epsilon.value();

  for (std::uint64_t n = 1; n <= budget.max_n; ++n) {
    const mpz_class idx = detail::to_mpz(n);
    const mpz_class an = a.expr.evaluate(idx, a.expr.uses_prime() ? primes_a.at(n) : mpz_class(0));
    const mpz_class bn = b.expr.evaluate(idx, b.expr.uses_prime() ? primes_b.at(n) : mpz_class(0));
    if (sgn(bn) <= 0 || an < bn) continue;
    const mpz_class c = an - bn;

    // (a + k)/(b + k) = 1 + c/(b + k); solve 1 + c/(b + k) = t for k.
    std::vector<mpz_class> ks;
    if (sgn(c) == 0) {
      ks.emplace_back(1);
    } else if (t == 1) {
      mpz_class k;
      const mpq_class need = mpq_class(c) / eps - mpq_class(bn);
      mpz_fdiv_q(k.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
      ks.push_back(k + 1);
    } else {
      const mpq_class exact = mpq_class(c) / (t - 1) - mpq_class(bn);
      mpz_class lo;
      mpz_fdiv_q(lo.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
      ks.push_back(lo);
      ks.push_back(lo + 1);
    }
    for (mpz_class k : ks) {
      if (k < 1) k = 1;
      if (k > detail::to_mpz(budget.max_k)) continue;
      const mpq_class r(mpz_class(an + k), mpz_class(bn + k));
      const mpq_class err = abs(mpq_class(r - t));
      if (err < eps) {
        DensityResult found;
        found.found = true;
        found.n = n;
        found.k = detail::to_native(k);
        found.ratio = PosRational::from_mpq(r);
        found.error = PosRational::from_mpq(err);
        return found;
      }
    }
  }
  DensityResult miss;
  miss.diagnostics = "no (n, k) with n <= " + std::to_string(budget.max_n) + ", k <= " +
                     std::to_string(budget.max_k) + " within " + epsilon.str() + " of " +
                     target.str();
  return miss;
}

const char* to_string(FactorizationClass c) {
  switch (c) {
    case FactorizationClass::ff:
      return "FF";
    case FactorizationClass::bf:
      return "BF";
    case FactorizationClass::bf_not_ff:
      return "BF-not-FF";
    case FactorizationClass::not_bf:
      return "not-BF";
    case FactorizationClass::unknown:
      return "unknown";
  }
  return "unknown";
}

StatusReport bf_ff_status(const MonoidSpec& spec, std::uint64_t depth,
                          const std::optional<PosRational>& non_ff_witness,
                          const EnumerationLimits& limits) {
  StatusReport report;
  if (spec.finitely_generated()) {
    report.status = FactorizationClass::ff;
    report.reasons.push_back("finitely generated: every element has finitely many factorizations");
    return report;
  }
  const TruncatedMonoid tm = truncate(spec, depth);
  const auto primary = is_primary(tm);
  if (primary.is_primary) {
    report.reasons.push_back("primary (checked on the depth-" + std::to_string(depth) +
                             " truncation)");
    const auto cls = classify_atoms(spec, tm);
    const auto stable = std::find_if(cls.begin(), cls.end(),
                                     [](const auto& kv) { return kv.second == Stability::stable; });
    if (stable == cls.end()) {
      report.status = FactorizationClass::ff;
      report.reasons.push_back("every atom is unstable");
    } else {
      report.status = FactorizationClass::not_bf;
      report.reasons.push_back("stable atom " + stable->first.str() + ": L(" +
                               stable->first.numerator().get_str() + ") is infinite");
    }
    return report;
  }
  report.reasons.push_back("not primary: " + primary.reason);
  if (spec.metadata.zero_limit_point != false) {
    report.reasons.push_back(spec.metadata.zero_limit_point
                                 ? "0 is a limit point; no criterion applies"
                                 : "metadata.zero_limit_point not declared");
    return report;
  }
  report.status = FactorizationClass::bf;
  report.reasons.push_back("0 is not a limit point, so every length set is finite");
  if (!non_ff_witness) return report;

  std::vector<std::uint64_t> counts;
  for (std::uint64_t d = depth; counts.size() < 3; d *= 2) {
    const TruncatedMonoid deeper = truncate(spec, d);
    counts.push_back(count_factorizations(deeper, *non_ff_witness, limits.factorization_cap));
  }
  const bool growing = counts[0] > 0 && counts[0] < counts[1] && counts[1] < counts[2];
  std::string trail = std::to_string(counts[0]) + ", " + std::to_string(counts[1]) + ", " +
                      std::to_string(counts[2]);
  if (growing) {
    report.status = FactorizationClass::bf_not_ff;
    report.reasons.push_back("|Z(" + non_ff_witness->str() + ")| grows with depth: " + trail);
  } else {
    report.reasons.push_back("witness " + non_ff_witness->str() +
                             " did not show growing |Z|: " + trail);
  }
  return report;
}

}  // namespace puiseux
