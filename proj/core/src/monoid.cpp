#include "puiseux/monoid.hpp"

#include <algorithm>
#include <set>

#include "knapsack.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

mpz_class lcm_of_denominators(const std::vector<PosRational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
  }
  return l;
}

std::vector<mpz_class> scale_all(const std::vector<PosRational>& values, const mpz_class& l) {
  std::vector<mpz_class> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(mpz_class(v.numerator() * (l / v.denominator())));
  return out;
}

std::vector<PosRational> sorted_unique_positive(std::vector<PosRational> values) {
  std::erase_if(values, [](const PosRational& v) { return v.is_zero(); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// A generator is an atom iff it is not a combination of the strictly smaller
// generators already accepted; scanning in ascending order reaches the same
// fixed point as repeated removal.
template <class Int>
std::vector<std::size_t> atom_positions(const std::vector<Int>& scaled) {
  std::vector<std::size_t> keep;
  std::vector<Int> accepted;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const detail::Knapsack<Int> kernel(accepted);
    if (accepted.empty() || !kernel.representable(scaled[i])) {
      keep.push_back(i);
      accepted.push_back(scaled[i]);
    }
  }
  return keep;
}

}  // namespace

TruncatedMonoid::TruncatedMonoid()
    : kernels_(std::make_shared<const detail::Kernels>(std::vector<mpz_class>{})) {}

TruncatedMonoid TruncatedMonoid::from_generators(std::vector<PosRational> generators,
                                                 TruncationOrigin origin) {
  TruncatedMonoid tm;
  tm.atoms_ = detect_atoms(std::move(generators));
  tm.denom_lcm_ = lcm_of_denominators(tm.atoms_);
  tm.scaled_ = scale_all(tm.atoms_, tm.denom_lcm_);
  tm.origin_ = std::move(origin);
  tm.kernels_ = std::make_shared<const detail::Kernels>(tm.scaled_);
  return tm;
}

std::optional<std::size_t> TruncatedMonoid::atom_index(const PosRational& a) const {
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::optional<mpz_class> TruncatedMonoid::scale(const PosRational& x) const {
  const mpz_class prod = x.numerator() * denom_lcm_;
  if (!mpz_divisible_p(prod.get_mpz_t(), x.denominator().get_mpz_t())) return std::nullopt;
  return mpz_class(prod / x.denominator());
}

PosRational TruncatedMonoid::unscale(const mpz_class& v) const { return canonical(v, denom_lcm_); }

std::vector<PosRational> detect_atoms(std::vector<PosRational> generators) {
  std::vector<PosRational> gens = sorted_unique_positive(std::move(generators));
  const std::vector<mpz_class> scaled = scale_all(gens, lcm_of_denominators(gens));
  std::vector<std::size_t> keep;
  if (std::all_of(scaled.begin(), scaled.end(), detail::fits_native)) {
    std::vector<std::uint64_t> native;
    for (const auto& s : scaled) native.push_back(detail::to_native(s));
    keep = atom_positions(native);
  } else {
    keep = atom_positions(scaled);
  }
  std::vector<PosRational> out;
  out.reserve(keep.size());
  for (const std::size_t i : keep) out.push_back(gens[i]);
  return out;
}

std::vector<PosRational> atoms(const TruncatedMonoid& tm) { return detect_atoms(tm.atoms()); }

TruncatedMonoid truncate(const MonoidSpec& spec, std::uint64_t depth) {
  if (depth < 1) throw DomainError("truncation depth must be >= 1");
  validate_spec(spec);
  std::vector<PosRational> gens;
  for (std::size_t f = 0; f < spec.families.size(); ++f) {
    const auto& family = spec.families[f];
    if (const auto* ex = std::get_if<ExplicitFamily>(&family)) {
      gens.insert(gens.end(), ex->generators.begin(), ex->generators.end());
      continue;
    }
    const auto& sym = std::get<SymbolicFamily>(family);
    std::uint64_t last = sym.index_start + depth - 1;
    if (sym.index_end) last = std::min(last, *sym.index_end);
    PrimeSequence primes(sym.prime_filter);
    for (std::uint64_t n = sym.index_start; n <= last; ++n) {
      const mpz_class& p = primes.at(n);
      const mpz_class numer = sym.numerator.evaluate(mpz_class(static_cast<unsigned long>(n)), p);
      const std::string ctx = "families[" + std::to_string(f) + "] at index " + std::to_string(n);
      if (sgn(numer) <= 0) {
        throw SemanticError(ctx + ": numerator '" + sym.numerator.str() + "' evaluates to " +
                            numer.get_str() + " (must be positive)");
      }
      if (sym.primary && mpz_divisible_p(numer.get_mpz_t(), p.get_mpz_t())) {
        throw SemanticError(ctx + ": prime " + p.get_str() + " divides numerator " +
                            numer.get_str());
      }
      gens.push_back(canonical(numer, p));
    }
  }
  auto tm = TruncatedMonoid::from_generators(
      std::move(gens), TruncationOrigin{std::make_shared<const MonoidSpec>(spec), depth});

  const auto& md = spec.metadata;
  for (const auto& a : tm.atoms()) {
    if (md.atom_inf && a < *md.atom_inf) {
      throw SemanticError("atom " + a.str() + " is below declared atom_inf " + md.atom_inf->str());
    }
    if (md.atom_sup && !md.atom_sup->is_infinite() && md.atom_sup->finite() < a) {
      throw SemanticError("atom " + a.str() + " exceeds declared atom_sup " + md.atom_sup->str());
    }
  }
  return tm;
}

bool contains(const TruncatedMonoid& tm, const PosRational& x) {
  if (x.is_zero()) return true;
  const auto scaled = tm.scale(x);
  if (!scaled || tm.trivial()) return false;
  return detail::dispatch(tm.kernels(), *scaled,
                          [](const auto& kernel, const auto& target) {
                            return kernel.representable(target);
                          });
}

std::vector<PosRational> elements_up_to(const TruncatedMonoid& tm, const PosRational& bound,
                                        const EnumerationLimits& limits) {
  if (tm.trivial()) return {PosRational{}};
  const mpz_class top = (bound.numerator() * tm.denom_lcm()) / bound.denominator();
  const auto& kernels = tm.kernels();

  if (kernels.native && detail::fits_native(top)) {
    const auto& kernel = *kernels.native;
    const std::uint64_t step = kernel.gcd();
    const std::uint64_t cells = detail::to_native(top) / step + 1;
    if (cells <= limits.grid_limit) {
      std::vector<std::uint8_t> reach(cells, 0);
      reach[0] = 1;
      for (const std::uint64_t g : kernel.gens()) {
        const std::uint64_t s = g / step;
        for (std::uint64_t v = s; v < cells; ++v) reach[v] |= reach[v - s];
      }
      std::vector<PosRational> out;
      for (std::uint64_t v = 0; v < cells; ++v) {
        if (reach[v]) out.push_back(tm.unscale(detail::to_mpz(v * step)));
      }
      return out;
    }
  }

  return detail::dispatch(kernels, top, [&](const auto& kernel, const auto& limit) {
    using Int = std::decay_t<decltype(limit)>;
    std::set<Int> sums;
    kernel.sums_up_to(limit, limits.combination_budget, [&](const Int& s) { sums.insert(s); });
    std::vector<PosRational> out;
    out.reserve(sums.size());
    for (const auto& s : sums) {
      if constexpr (std::is_same_v<Int, std::uint64_t>) {
        out.push_back(tm.unscale(detail::to_mpz(s)));
      } else {
        out.push_back(tm.unscale(s));
      }
    }
    return out;
  });
}

PrimaryReport is_primary(const TruncatedMonoid& tm) {
  PrimaryReport report;
  std::map<mpz_class, PosRational> owner;
  for (const auto& a : tm.atoms()) {
    const mpz_class& d = a.denominator();
    if (!is_prime(d)) {
      report.reason = "denominator of " + a.str() + " is not prime";
      return report;
    }
    if (auto [it, inserted] = owner.emplace(d, a); !inserted) {
      report.reason = "atoms " + it->second.str() + " and " + a.str() + " share prime " + d.get_str();
      return report;
    }
  }
  report.is_primary = true;
  for (const auto& [p, a] : owner) report.prime_of_atom.emplace(a, p);
  return report;
}

const char* to_string(Stability s) { return s == Stability::stable ? "stable" : "unstable"; }

std::map<PosRational, Stability> classify_atoms(const MonoidSpec& spec, const TruncatedMonoid& tm) {
  validate_spec(spec);
  std::set<mpz_class> repeating;
  for (const auto& family : spec.families) {
    const auto* sym = std::get_if<SymbolicFamily>(&family);
    if (sym == nullptr || !sym->unbounded() || !sym->numerator.is_constant()) continue;
    const mpz_class c = sym->numerator.evaluate(0, 0);
    if (sgn(c) > 0) repeating.insert(c);
  }
  std::map<PosRational, Stability> out;
  for (const auto& a : tm.atoms()) {
    out.emplace(a, repeating.contains(a.numerator()) ? Stability::stable : Stability::unstable);
  }
  return out;
}

std::map<PosRational, Stability> classify_stability(const MonoidSpec& spec, std::uint64_t depth) {
  return classify_atoms(spec, truncate(spec, depth));
}

}  // namespace puiseux
