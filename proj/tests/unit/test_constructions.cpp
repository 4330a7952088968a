#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "printers.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/errors.hpp"

using namespace puiseux;

namespace {

PosRational q(const char* s) { return PosRational::parse(s); }

std::vector<PosRational> qs(std::initializer_list<const char*> xs) {
  std::vector<PosRational> out;
  for (const char* x : xs) out.push_back(q(x));
  return out;
}

const SymbolicFamily& sym(const MonoidSpec& spec, std::size_t i) {
  return std::get<SymbolicFamily>(spec.families.at(i));
}

// Reducibles of the monoid generated by `gens`, up to `bound`, that are not a
// sum of two atoms, ascending.
std::vector<PosRational> lacking_length_two(const std::vector<PosRational>& gens,
                                            const PosRational& bound) {
  const auto atoms = oracle::atoms_of(gens);
  const std::set<PosRational> atom_set(atoms.begin(), atoms.end());
  std::vector<PosRational> out;
  for (const auto& x : oracle::elements_up_to(atoms, bound)) {
    if (x.is_zero() || atom_set.contains(x)) continue;
    bool two = false;
    for (const auto& a : atoms) {
      if (a < x && atom_set.contains(x.minus(a))) two = true;
    }
    if (!two) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Catalog, NamedFamilies) {
  const auto dense = catalog("primarydense");
  EXPECT_EQ(sym(dense, 0).numerator.str(), "n");
  EXPECT_EQ(sym(dense, 0).prime_filter.str(), "all");

  const auto unstable = catalog("infiniteunstable");
  EXPECT_EQ(sym(unstable, 0).numerator.str(), "n");
  EXPECT_EQ(sym(unstable, 0).prime_filter.str(), "exclude:[3]");

  const auto bf = catalog("bfnotff");
  ASSERT_EQ(bf.families.size(), 2u);
  EXPECT_EQ(sym(bf, 0).numerator.str(), "p//2");
  EXPECT_EQ(sym(bf, 1).numerator.str(), "p-p//2");
  EXPECT_EQ(sym(bf, 0).prime_filter.str(), "odd");

  EXPECT_THROW(catalog("nosuch"), DomainError);
  EXPECT_EQ(catalog_names().size(), 7u);
}

TEST(Catalog, TruncationsReproduceAtomValues) {
  // p = 3 contributes 1/3 and 2/3 = 2 * (1/3).
  EXPECT_EQ(truncate(catalog("bfnotff"), 3).atoms(), qs({"1/3", "2/5", "3/7", "4/7", "3/5"}));
  EXPECT_EQ(truncate(catalog("factorial"), 3).atoms(), qs({"1/5", "1/3", "1/2"}));
  EXPECT_EQ(truncate(catalog("infiniteunstable"), 5).atoms(),
            qs({"4/11", "5/13", "2/5", "3/7", "1/2"}));
  EXPECT_EQ(truncate(catalog("primarydense"), 4).atoms(), qs({"1/2", "4/7", "3/5", "2/3"}));
}

TEST(Catalog, DeclaredMetadataMatchesTruncations) {
  for (const auto& name : catalog_names()) {
    const auto spec = catalog(name);
    EXPECT_NO_THROW(truncate(spec, 12)) << name;
  }
  const auto bf = catalog("bfplot");
  EXPECT_EQ(*bf.metadata.atom_inf, q("1/2"));
  EXPECT_EQ(bf.metadata.atom_sup->finite(), q("4/3"));
}

TEST(Bifurcus, FirstStage) {
  const auto sm = bifurcus_build(1, q("3/2"));
  ASSERT_EQ(sm.stages.size(), 2u);
  EXPECT_EQ(sm.stages[0].generators, qs({"1/3", "1/2"}));
  const auto& added = sm.stages[1].added;
  ASSERT_EQ(added.size(), 3u);
  EXPECT_EQ(added[0].reducible, q("7/6"));
  EXPECT_EQ(added[0].prime, 13);
  EXPECT_EQ(added[0].lower, q("79/156"));
  EXPECT_EQ(added[0].upper, q("103/156"));
  EXPECT_EQ(q("7/12").minus(canonical(1, 13)), q("79/156"));
  EXPECT_EQ(added[1].reducible, q("4/3"));
  EXPECT_EQ(added[1].prime, 17);
  EXPECT_EQ(added[2].reducible, q("3/2"));
  EXPECT_EQ(added[2].prime, 19);
  for (const auto& p : added) EXPECT_GT(p.lower, q("1/2"));
  EXPECT_TRUE(sm.warnings.empty());
}

TEST(Bifurcus, ReduciblesMatchIndependentSearch) {
  const auto sm = bifurcus_build(2, q("3/2"));
  for (std::size_t j = 1; j < sm.stages.size(); ++j) {
    std::vector<PosRational> recorded;
    for (const auto& p : sm.stages[j].added) recorded.push_back(p.reducible);
    EXPECT_EQ(recorded, lacking_length_two(sm.stages[j - 1].generators, q("3/2"))) << j;
  }
}

TEST(Bifurcus, PrimeAndPairInvariants) {
  const auto sm = bifurcus_build(3, q("3/2"));
  std::set<mpz_class> primes;
  for (std::size_t j = 1; j < sm.stages.size(); ++j) {
    for (const auto& p : sm.stages[j].added) {
      EXPECT_EQ(p.lower + p.upper, p.reducible);
      EXPECT_GT(p.upper + p.upper, p.reducible);
      EXPECT_LT(p.lower + p.lower, p.reducible);
      EXPECT_GE(p.prime, 13);
      EXPECT_GE(p.prime, mpz_class(1) << j);
      EXPECT_TRUE(oracle::trial_division_prime(p.prime.get_ui()));
      EXPECT_TRUE(primes.insert(p.prime).second) << "reused " << p.prime.get_str();
    }
  }
}

TEST(Bifurcus, LowBoundWarns) {
  const auto sm = bifurcus_build(1, q("1"));
  EXPECT_TRUE(sm.stages[1].added.empty());
  EXPECT_EQ(sm.warnings.size(), 1u);
}

TEST(BifurcusVerify, TwoStagesPass) {
  const auto sm = bifurcus_build(2, q("3/2"));
  const auto r = bifurcus_verify(sm, q("3/2"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.min_nonzero, q("1/3"));
  EXPECT_TRUE(r.failures.empty());
  const auto stage1 = sm.stage_monoid(1);
  EXPECT_EQ(count_factorizations(stage1, q("7/6"), 100), 2u);
  const auto zs = factorizations(stage1, q("7/6"));
  EXPECT_NE(std::find(zs.begin(), zs.end(),
                      Factorization({{q("79/156"), 1}, {q("103/156"), 1}})),
            zs.end());
}

TEST(BifurcusVerify, EveryBoundUpToTheBuildBound) {
  const auto sm = bifurcus_build(3, q("3/2"));
  for (const char* b : {"1/2", "1", "7/6", "4/3", "3/2"}) {
    EXPECT_TRUE(bifurcus_verify(sm, q(b)).ok()) << b;
  }
  EXPECT_FALSE(bifurcus_verify(sm, q("2")).failures.empty());
}

TEST(BifurcusVerify, DetectsTamperedBuild) {
  auto sm = bifurcus_build(1, q("3/2"));
  sm.stages[1].generators.push_back(q("5/6"));
  const auto r = bifurcus_verify(sm, q("3/2"));
  EXPECT_FALSE(r.atoms_preserved);
  EXPECT_FALSE(r.ok());
}

TEST(StagedJson, RoundTrip) {
  const auto sm = bifurcus_build(2, q("3/2"));
  const std::string text = staged_to_json(sm);
  const auto back = staged_from_json(text);
  EXPECT_EQ(staged_to_json(back), text);
  EXPECT_TRUE(bifurcus_verify(back, q("3/2")).ok());
}

TEST(StagedJson, RejectsBadPairs) {
  auto text = staged_to_json(bifurcus_build(1, q("3/2")));
  const auto pos = text.find("103/156");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 7, "104/156");
  EXPECT_THROW(staged_from_json(text), SemanticError);
  EXPECT_THROW(staged_from_json("{"), SyntaxError);
}
