#include "puiseux/constructions.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

namespace {

SymbolicFamily family(std::string_view numerator, std::string_view filter,
                      std::uint64_t start = 1) {
  SymbolicFamily f;
  f.numerator = Expr::parse(numerator);
  f.prime_filter = parse_prime_filter(filter);
  f.index_start = start;
  return f;
}

PosRational q(std::string_view text) { return PosRational::parse(text); }

bool has_length_two(const PosRational& x, const std::set<PosRational>& atoms) {
  for (const auto& a : atoms) {
    if (x < a) break;
    if (atoms.contains(x.minus(a))) return true;
  }
  return false;
}

std::vector<PosRational> stage_zero() { return {q("1/3"), q("1/2")}; }

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "bfplot",       "factorial",     "bfnotff",         "unstablenotbf",
      "primarydense", "primarystable", "infiniteunstable"};
  return names;
}

MonoidSpec catalog(std::string_view name) {
  MonoidSpec spec;
  spec.name = std::string(name);
  auto& md = spec.metadata;
  if (name == "bfplot") {
    spec.families.emplace_back(ExplicitFamily{{q("1/2")}});
    spec.families.emplace_back(family("p+1", "all", 2));
    md.zero_limit_point = false;
    md.atom_inf = q("1/2");
    md.inf_attained = true;
    md.atom_sup = ExtendedRational(q("4/3"));
    md.sup_attained = true;
  } else if (name == "factorial") {
    auto f = family("1", "all");
    f.declared_stable = true;
    spec.families.emplace_back(std::move(f));
    md.zero_limit_point = true;
    md.atom_inf = q("0");
    md.inf_attained = false;
    md.atom_sup = ExtendedRational(q("1/2"));
    md.sup_attained = true;
  } else if (name == "bfnotff") {
    spec.families.emplace_back(family("p//2", "odd"));
    spec.families.emplace_back(family("p-p//2", "odd"));
    md.zero_limit_point = false;
    md.atom_inf = q("1/3");
    md.inf_attained = true;
    md.atom_sup = ExtendedRational(q("3/5"));
    md.sup_attained = true;
  } else if (name == "unstablenotbf") {
    spec.families.emplace_back(family("n", "above:(n+1)*(n+1)"));
    spec.families.emplace_back(family("n+1", "above:(n+1)*(n+1)"));
    md.zero_limit_point = true;
    md.atom_inf = q("0");
    md.inf_attained = false;
    md.atom_sup = ExtendedRational(q("3/11"));
    md.sup_attained = true;
  } else if (name == "primarydense") {
    auto f = family("n", "all");
    f.primary = true;
    spec.families.emplace_back(std::move(f));
    md.zero_limit_point = true;
    md.atom_inf = q("0");
    md.inf_attained = false;
    md.atom_sup = ExtendedRational(q("2/3"));
    md.sup_attained = true;
  } else if (name == "primarystable") {
    auto head = family("n", "all");
    head.index_end = 12;
    head.primary = true;
    auto tail = family("30", "all", 13);
    tail.declared_stable = true;
    tail.primary = true;
    spec.families.emplace_back(std::move(head));
    spec.families.emplace_back(std::move(tail));
    md.zero_limit_point = true;
    md.atom_inf = q("0");
    md.inf_attained = false;
    md.atom_sup = ExtendedRational(q("30/41"));
    md.sup_attained = true;
  } else if (name == "infiniteunstable") {
    auto f = family("n", "exclude:[3]");
    f.primary = true;
    spec.families.emplace_back(std::move(f));
    md.zero_limit_point = true;
    md.atom_inf = q("0");
    md.inf_attained = false;
    md.atom_sup = ExtendedRational(q("1/2"));
    md.sup_attained = true;
  } else {
    throw DomainError("unknown catalog monoid '" + std::string(name) + "'");
  }
  validate_spec(spec);
  return spec;
}

TruncatedMonoid StagedMonoid::stage_monoid(std::size_t j) const {
  if (j >= stages.size()) throw DomainError("stage " + std::to_string(j) + " was not built");
  return TruncatedMonoid::from_generators(stages[j].generators);
}

StagedMonoid bifurcus_build(std::size_t num_stages, const PosRational& value_bound,
                            const EnumerationLimits& limits) {
  if (num_stages < 1) throw DomainError("need at least one stage");
  StagedMonoid sm;
  sm.value_bound = value_bound;
  sm.stages.push_back(Stage{stage_zero(), {}});
  std::set<mpz_class> used;

  for (std::size_t j = 1; j <= num_stages; ++j) {
    const Stage& prev = sm.stages.back();
    const TruncatedMonoid monoid = TruncatedMonoid::from_generators(prev.generators);
    const std::set<PosRational> atom_set(monoid.atoms().begin(), monoid.atoms().end());

    mpz_class floor_prime = 13;
    if (j < 64) {
      const mpz_class power = mpz_class(1) << static_cast<mp_bitcnt_t>(j);
      floor_prime = std::max(floor_prime, power);
    } else {
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), 2, j);
      floor_prime = std::max(floor_prime, power);
    }
    mpz_class candidate = floor_prime - 1;

    Stage next{prev.generators, {}};
    for (const auto& x : elements_up_to(monoid, value_bound, limits)) {
      if (x.is_zero() || atom_set.contains(x) || has_length_two(x, atom_set)) continue;
      mpz_class p;
      do {
        candidate = next_prime(candidate);
      } while (used.contains(candidate));
      p = candidate;
      used.insert(p);
      const PosRational half = x / PosRational(2);
      const PosRational step = canonical(1, p);
      AddedPair pair{x, p, half.minus(step), half + step};
      next.generators.push_back(pair.lower);
      next.generators.push_back(pair.upper);
      next.added.push_back(std::move(pair));
    }
    if (next.added.empty()) {
      sm.warnings.push_back("stage " + std::to_string(j) +
                            ": no reducible without a length-2 factorization up to " +
                            value_bound.str());
    }
    std::sort(next.generators.begin(), next.generators.end());
    sm.stages.push_back(std::move(next));
  }
  return sm;
}

BifurcusReport bifurcus_verify(const StagedMonoid& sm, const PosRational& bound,
                               const EnumerationLimits& limits) {
  BifurcusReport report;
  if (sm.stages.empty()) {
    report.failures.push_back("no stages");
    return report;
  }
  if (sm.value_bound < bound) {
    report.failures.push_back("bound " + bound.str() + " exceeds the build's value bound " +
                              sm.value_bound.str());
  }
  std::vector<TruncatedMonoid> monoids;
  for (std::size_t j = 0; j < sm.stages.size(); ++j) monoids.push_back(sm.stage_monoid(j));
  const TruncatedMonoid& last = monoids.back();

  report.min_nonzero = last.min_atom();
  report.min_is_one_third = report.min_nonzero == q("1/3");
  if (!report.min_is_one_third) {
    report.failures.push_back("least nonzero element is " + report.min_nonzero.str());
  }

  report.atoms_preserved = true;
  for (std::size_t j = 0; j < sm.stages.size(); ++j) {
    for (const auto& g : sm.stages[j].generators) {
      if (!last.atom_index(g)) {
        report.atoms_preserved = false;
        report.failures.push_back("stage " + std::to_string(j) + " generator " + g.str() +
                                  " is not an atom of the final stage");
      }
    }
  }

  report.length_two_everywhere = true;
  for (std::size_t j = 1; j < monoids.size(); ++j) {
    const auto& prev = monoids[j - 1];
    const std::set<PosRational> prev_atoms(prev.atoms().begin(), prev.atoms().end());
    const std::set<PosRational> atoms(monoids[j].atoms().begin(), monoids[j].atoms().end());
    for (const auto& x : elements_up_to(prev, bound, limits)) {
      if (x.is_zero() || prev_atoms.contains(x)) continue;
      if (!has_length_two(x, atoms)) {
        report.length_two_everywhere = false;
        report.failures.push_back("stage " + std::to_string(j - 1) + " reducible " + x.str() +
                                  " has no length-2 factorization in stage " + std::to_string(j));
      }
    }
  }
  return report;
}

std::string staged_to_json(const StagedMonoid& sm) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["value_bound"] = sm.value_bound.str();
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < sm.stages.size(); ++j) {
    nlohmann::ordered_json s;
    s["stage"] = j;
    nlohmann::ordered_json added = nlohmann::ordered_json::array();
    for (const auto& pair : sm.stages[j].added) {
      nlohmann::ordered_json a;
      a["reducible"] = pair.reducible.str();
      a["prime"] = pair.prime.get_str();
      a["atoms"] = {pair.lower.str(), pair.upper.str()};
      added.push_back(a);
    }
    s["added"] = added;
    std::vector<std::string> gens;
    for (const auto& g : sm.stages[j].generators) gens.push_back(g.str());
    s["generators"] = gens;
    stages.push_back(s);
  }
  doc["stages"] = stages;
  doc["warnings"] = sm.warnings;
  return doc.dump(2) + "\n";
}

StagedMonoid staged_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError("invalid staged-monoid JSON: " + std::string(e.what()), 1, e.byte);
  }
  try {
    if (doc.at("schema").get<int>() != 1) throw SemanticError("staged monoid: unsupported schema");
    StagedMonoid sm;
    sm.value_bound = q(doc.at("value_bound").get<std::string>());
    for (const auto& s : doc.at("stages")) {
      Stage stage;
      for (const auto& g : s.at("generators")) stage.generators.push_back(q(g.get<std::string>()));
      for (const auto& a : s.at("added")) {
        AddedPair pair;
        pair.reducible = q(a.at("reducible").get<std::string>());
        pair.prime = mpz_class(a.at("prime").get<std::string>(), 10);
        pair.lower = q(a.at("atoms").at(0).get<std::string>());
        pair.upper = q(a.at("atoms").at(1).get<std::string>());
        if (pair.lower + pair.upper != pair.reducible) {
          throw SemanticError("staged monoid: pair for " + pair.reducible.str() +
                              " does not sum to it");
        }
        stage.added.push_back(std::move(pair));
      }
      sm.stages.push_back(std::move(stage));
    }
    if (doc.contains("warnings")) {
      for (const auto& w : doc.at("warnings")) sm.warnings.push_back(w.get<std::string>());
    }
    return sm;
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(std::string("staged monoid: ") + e.what());
  }
}

}  // namespace puiseux
