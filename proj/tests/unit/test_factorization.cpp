#include <gtest/gtest.h>

#include "printers.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/factorization.hpp"

using namespace puiseux;

namespace {

PosRational q(const char* s) { return PosRational::parse(s); }

TruncatedMonoid gen(std::initializer_list<const char*> xs) {
  std::vector<PosRational> g;
  for (const char* x : xs) g.push_back(q(x));
  return TruncatedMonoid::from_generators(g);
}

std::vector<std::string> strs(const std::vector<Factorization>& zs) {
  std::vector<std::string> out;
  for (const auto& z : zs) out.push_back(z.str());
  return out;
}

LengthSet ls(std::vector<std::uint64_t> v) { return LengthSet(std::move(v)); }

}  // namespace

TEST(Factorizations, HalfThirdOfOne) {
  EXPECT_EQ(strs(factorizations(gen({"1/2", "1/3"}), q("1"))),
            (std::vector<std::string>{"2 x 1/2", "3 x 1/3"}));
}

TEST(Factorizations, AtomIsItsOwnFactorization) {
  EXPECT_EQ(strs(factorizations(gen({"1/2", "1/3"}), q("1/2"))),
            (std::vector<std::string>{"1 x 1/2"}));
}

TEST(Factorizations, CanonicalOrderAndSerialization) {
  const auto zs = factorizations(gen({"1/2", "1/3"}), q("2"));
  EXPECT_EQ(strs(zs), (std::vector<std::string>{"2 x 1/2 + 3 x 1/3", "4 x 1/2", "6 x 1/3"}));
  EXPECT_EQ(zs[0].serialize(), (std::vector<std::string>{"2 x 1/2", "3 x 1/3"}));
  for (const auto& z : zs) EXPECT_EQ(z.value(), q("2"));
}

TEST(Factorizations, BfplotFour) {
  const auto tm = truncate(catalog("bfplot"), 10);
  const auto zs = factorizations(tm, q("4"));
  const Factorization halves({{q("1/2"), 8}});
  const Factorization thirds({{q("4/3"), 3}});
  EXPECT_NE(std::find(zs.begin(), zs.end(), halves), zs.end());
  EXPECT_NE(std::find(zs.begin(), zs.end(), thirds), zs.end());
}

TEST(Factorizations, ZeroAndNonMembers) {
  const auto tm = gen({"1/2", "1/3"});
  const auto z0 = factorizations(tm, PosRational(0));
  ASSERT_EQ(z0.size(), 1u);
  EXPECT_EQ(z0[0].length(), 0u);
  EXPECT_EQ(z0[0].str(), "0");
  EXPECT_EQ(length_set(tm, PosRational(0)), ls({0}));
  EXPECT_THROW(factorizations(tm, q("1/6")), NotMemberError);
  EXPECT_THROW(factorizations(tm, q("1/7")), NotMemberError);
  EXPECT_THROW(length_set(tm, q("1/6")), NotMemberError);
  EXPECT_THROW(element_elasticity(tm, PosRational(0)), DomainError);
}

TEST(Factorizations, CapRaisesResourceError) {
  EnumerationLimits small;
  small.factorization_cap = 3;
  const auto tm = gen({"1/2", "1/3"});
  EXPECT_EQ(factorizations(tm, q("2"), small).size(), 3u);
  EXPECT_THROW(factorizations(tm, q("3"), small), ResourceError);
}

TEST(Factorization, MergesTermsAndCountsLength) {
  const Factorization z({{q("1/3"), 2}, {q("1/2"), 1}, {q("1/3"), 1}, {q("1/5"), 0}});
  EXPECT_EQ(z.terms().size(), 2u);
  EXPECT_EQ(z.length(), 4u);
  EXPECT_EQ(z.multiplicity(q("1/3")), 3u);
  EXPECT_EQ(z.value(), q("3/2"));
  EXPECT_EQ(z.str(), "1 x 1/2 + 3 x 1/3");
}

TEST(LengthSetOp, Examples) {
  EXPECT_EQ(length_set(gen({"1/2", "1/3", "1/5"}), q("1")), ls({2, 3, 5}));
  EXPECT_EQ(length_set(gen({"1/2", "1/3"}), q("2")), ls({4, 5, 6}));
  EXPECT_EQ(length_set(gen({"1/2"}), q("3/2")), ls({3}));
  EXPECT_EQ(ls({2, 3, 5}).str(), "{2, 3, 5}");
  EXPECT_EQ(ls({2, 3}).shifted(1), ls({3, 4}));
}

TEST(ElementElasticity, Examples) {
  EXPECT_EQ(element_elasticity(gen({"1/2", "1/3"}), q("1")), q("3/2"));
  const auto bf = truncate(catalog("bfplot"), 10);
  // Only 3 x 4/3 and 8 x 1/2: any (p+1)/p with p >= 5 needs p copies.
  EXPECT_EQ(length_set(bf, q("4")), ls({3, 8}));
  EXPECT_EQ(element_elasticity(bf, q("4")), q("8/3"));
  for (const auto& a : bf.atoms()) EXPECT_EQ(element_elasticity(bf, a), PosRational(1));
}

TEST(CountFactorizations, StopsEarly) {
  const auto tm = gen({"1/2", "1/3"});
  EXPECT_EQ(count_factorizations(tm, q("2"), 100), 3u);
  EXPECT_EQ(count_factorizations(tm, q("2"), 2), 2u);
  EXPECT_EQ(count_factorizations(tm, q("1/6"), 5), 0u);
  EXPECT_EQ(count_factorizations(tm, PosRational(0), 5), 1u);
}

TEST(ValuationCheck, InfiniteUnstableExamples) {
  const auto tm = truncate(catalog("infiniteunstable"), 5);
  const auto five = valuation_coefficient_check(tm, q("2"), Factorization({{q("2/5"), 5}}));
  EXPECT_EQ(five.status, CheckStatus::pass);
  ASSERT_EQ(five.entries.size(), 1u);
  EXPECT_EQ(five.entries[0].prime, 5);
  EXPECT_TRUE(five.entries[0].divides);
  const auto four = valuation_coefficient_check(tm, q("2"), Factorization({{q("1/2"), 4}}));
  EXPECT_EQ(four.status, CheckStatus::pass);
  EXPECT_EQ(four.entries[0].prime, 2);
}

TEST(ValuationCheck, PreconditionsGiveInapplicable) {
  const auto tm = truncate(catalog("infiniteunstable"), 5);
  const Factorization z({{q("1/2"), 1}, {q("2/3"), 1}});
  EXPECT_EQ(valuation_coefficient_check(tm, q("7/6"), z).status, CheckStatus::inapplicable);
  EXPECT_EQ(valuation_coefficient_check(tm, q("2"), Factorization({{q("1/2"), 2}})).status,
            CheckStatus::inapplicable);
  const auto bfnotff = truncate(catalog("bfnotff"), 3);
  EXPECT_EQ(valuation_coefficient_check(bfnotff, q("1"), Factorization({{q("1/3"), 1}, {q("2/3"), 1}}))
                .status,
            CheckStatus::inapplicable);
}

TEST(LengthExtremes, MatchesEnumeration) {
  const auto tm = gen({"1/2", "2/5", "3/7"});
  const auto table = length_extremes_up_to(tm, q("4"));
  std::size_t members = 0;
  for (std::size_t cell = 1; cell < table.cells(); ++cell) {
    const PosRational x = table.element(cell);
    ASSERT_EQ(table.member(cell), contains(tm, x)) << x.str();
    if (!table.member(cell)) continue;
    ++members;
    const LengthSet l = length_set(tm, x);
    EXPECT_EQ(table.min_length(cell), l.min()) << x.str();
    EXPECT_EQ(table.max_length(cell), l.max()) << x.str();
  }
  EXPECT_EQ(members + 1, elements_up_to(tm, q("4")).size());
}

TEST(LengthExtremes, GridLimit) {
  EnumerationLimits tiny;
  tiny.grid_limit = 10;
  EXPECT_THROW(length_extremes_up_to(gen({"1/2", "1/3"}), q("5"), tiny), ResourceError);
}
