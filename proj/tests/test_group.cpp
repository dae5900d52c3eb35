#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fjh;

namespace {

Subgroup generated_by(const FiniteGroup& g, const std::string& gens) {
  std::vector<Element> el;
  for (const auto& p : parse_generators(gens, g.degree())) el.push_back(*g.find_permutation(p));
  return generated_subgroup(g, el);
}

}  // namespace

TEST(GroupKernel, NamedConstructors) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  auto c2c4 = direct_product(cyclic(2), cyclic(4));
  EXPECT_EQ(c2c4.order(), 8u);
  EXPECT_TRUE(c2c4.is_abelian());
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(alternating(5).order(), 60u);
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_FALSE(dihedral(4).is_abelian());
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(parse_group_spec("C2xC4").order(), 8u);
  EXPECT_EQ(parse_group_spec("C2^3").order(), 8u);
  EXPECT_THROW(parse_group_spec("Z9"), Error);
}

TEST(GroupKernel, RejectsNonGroupTables) {
  // Latin square with identity 0 but not associative
  std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup{t}, Error);
  EXPECT_THROW(FiniteGroup(std::vector<Element>{0, 1, 1, 1}), Error);
}

TEST(GroupKernel, CatalogIsPairwiseNonIsomorphic) {
  auto cat = order16_catalog();
  ASSERT_EQ(cat.size(), 42u);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& n : cat) ++by_order[n.group.order()];
  const std::map<std::size_t, std::size_t> known{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2},  {7, 1},  {8, 5},
                                                 {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  EXPECT_EQ(by_order, known);
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = a + 1; b < cat.size(); ++b)
      if (cat[a].group.order() == cat[b].group.order()) {
        EXPECT_FALSE(is_isomorphic(cat[a].group, cat[b].group)) << cat[a].name << " vs " << cat[b].name;
      }
}

TEST(GroupKernel, LargerCatalogIsPairwiseNonIsomorphic) {
  auto cat = order32_catalog();
  for (std::size_t a = 42; a < cat.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (cat[a].group.order() == cat[b].group.order()) {
        EXPECT_FALSE(is_isomorphic(cat[a].group, cat[b].group)) << cat[a].name << " vs " << cat[b].name;
      }
}

TEST(GroupKernel, IsomorphismFindsRelabelings) {
  EXPECT_TRUE(is_isomorphic(dihedral(3), symmetric(3)));
  EXPECT_TRUE(is_isomorphic(parse_group_spec("C2xC3"), cyclic(6)));
  EXPECT_TRUE(is_isomorphic(parse_group_spec("Dic2"), quaternion8()));
  EXPECT_FALSE(is_isomorphic(dihedral(4), quaternion8()));
  auto iso = find_isomorphism(parse_group_spec("C3xC5"), cyclic(15));
  ASSERT_TRUE(iso.has_value());
  auto a = parse_group_spec("C3xC5");
  auto b = cyclic(15);
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y) EXPECT_EQ((*iso)[a.mul(x, y)], b.mul((*iso)[x], (*iso)[y]));
}

TEST(GroupKernel, MaximalNormalSubgroupsMatchBruteForce) {
  auto cat = order16_catalog();
  cat.push_back({"S4", symmetric(4)});
  cat.push_back({"C2xA4", parse_group_spec("C2xA4")});
  for (const auto& n : cat) {
    auto all = oracle::subgroups(n.group);
    oracle::Mask whole = oracle::bit(n.group.order()) - 1;
    std::set<oracle::Mask> expect;
    if (n.group.order() > 1)
      for (auto k : oracle::maximal_normal_in(n.group, whole, all)) expect.insert(k);
    std::set<oracle::Mask> got;
    for (const auto& h : maximal_normal_subgroups(n.group)) {
      oracle::Mask m = 0;
      for (Element x : h.members) m |= oracle::bit(x);
      got.insert(m);
    }
    EXPECT_EQ(got, expect) << n.name;
  }
}

TEST(GroupKernel, NormalSubgroupsMatchBruteForce) {
  for (const char* name : {"S4", "D4", "Q8", "C2^3", "A4", "C4oD4"}) {
    auto g = parse_group_spec(name);
    oracle::Mask whole = oracle::bit(g.order()) - 1;
    std::size_t expect = 0;
    for (auto k : oracle::subgroups(g)) expect += oracle::normal_in(g, k, whole);
    EXPECT_EQ(normal_subgroups(g).size(), expect) << name;
  }
}

TEST(GroupKernel, CompositionFactorsMatchBruteForce) {
  auto cat = order32_catalog();
  for (const auto& n : cat) {
    auto f = composition_factors_group(n.group);
    EXPECT_EQ(oracle::orders_of(f), oracle::composition_factor_orders(n.group)) << n.name;
    for (const auto& [d, k] : f.entries()) EXPECT_TRUE(d.is_simple());
  }
}

TEST(GroupKernel, SimpleGroupsAreNamedFromTheCatalog) {
  EXPECT_EQ(describe(alternating(5)).name, "A5");
  EXPECT_EQ(describe(alternating(6)).name, "A6");
  EXPECT_EQ(describe(cyclic(7)).name, "C7");
  auto psl27 = from_generators(7, parse_generators("(1 2 3 4 5 6 7),(1 2)(3 6)", 7));
  EXPECT_EQ(psl27.order(), 168u);
  EXPECT_EQ(describe(psl27).name, "PSL(2,7)");
  EXPECT_EQ(describe(symmetric(4)).kind, DescriptorKind::composite);
  auto a5 = composition_factors_group(symmetric(5));
  EXPECT_EQ(a5.to_string(), "C2 · A5");
}

TEST(GroupKernel, CompositionSeriesIsAChainOfMaximalNormalSubgroups) {
  auto g = symmetric(4);
  auto cs = composition_series_group(g);
  ASSERT_EQ(cs.length(), 4u);
  EXPECT_EQ(cs.chain.front().size(), 1u);
  EXPECT_EQ(cs.chain.back().size(), 24u);
  for (std::size_t i = 1; i < cs.chain.size(); ++i) {
    FiniteGroup top = induced_group(g, cs.chain[i]);
    Subgroup below;
    for (std::size_t t = 0; t < cs.chain[i].size(); ++t)
      if (cs.chain[i - 1].contains(cs.chain[i].members[t])) below.members.push_back(static_cast<Element>(t));
    EXPECT_TRUE(is_normal(top, below));
    EXPECT_TRUE(is_simple(quotient(top, below)));
  }
}

TEST(GroupKernel, CharacterTablesAreOrthonormal) {
  for (const auto& n : order16_catalog()) {
    auto t = character_table(n.group);
    std::size_t sum = 0;
    for (auto d : t.degrees) sum += d * d;
    EXPECT_EQ(sum, n.group.order()) << n.name;
    EXPECT_EQ(t.size(), conjugacy_classes(n.group).size()) << n.name;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b)
        EXPECT_NEAR(std::abs(t.inner(t.values[a], t.values[b]) - Complex(a == b, 0)), 0.0, 1e-8) << n.name;
  }
  auto s4 = character_table(symmetric(4));
  EXPECT_EQ(s4.degrees, (std::vector<std::size_t>{1, 1, 2, 3, 3}));
}

TEST(GroupKernel, CharacterTableIsDeterministicForAFixedSeed) {
  auto a = character_table(symmetric(4), {.seed = 7});
  auto b = character_table(symmetric(4), {.seed = 7});
  EXPECT_EQ(a.degrees, b.degrees);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a.classes.size(); ++c) EXPECT_EQ(a.values[i][c], b.values[i][c]);
}

TEST(GroupKernel, PermutationParsing) {
  auto p = parse_permutation("(1 2 3)(4,5)", 5);
  EXPECT_EQ(p, (Permutation{1, 2, 0, 4, 3}));
  EXPECT_EQ(perm::to_cycles(p), "(1 2 3)(4 5)");
  EXPECT_EQ(parse_generators("(1 2),(1 2 3 4)", 5).size(), 2u);
  EXPECT_THROW(parse_permutation("(1 7)", 5), Error);
  EXPECT_THROW(parse_permutation("(1 2 1)", 5), Error);
  EXPECT_THROW(parse_generators("(1 2", 5), Error);
}

TEST(MatchedPair, SymmetricGroupFactorizations) {
  for (std::size_t n : {5u, 6u}) {
    auto g = symmetric(n);
    std::string full;
    for (std::size_t i = 1; i <= n; ++i) full += (i > 1 ? " " : "") + std::to_string(i);
    std::string cyc;
    for (std::size_t i = 1; i < n; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
    Subgroup f = generated_by(g, "(1 2),(" + cyc + ")");
    Subgroup c = generated_by(g, "(" + full + ")");
    EXPECT_EQ(f.size() * c.size(), g.order());
    auto mp = matched_pair_from_factorization(g, f, c);
    EXPECT_TRUE(is_matched_pair(mp));
    auto zs = zappa_szep(mp);
    EXPECT_TRUE(is_isomorphic(zs, g));
    auto factors = morita_factors_bicrossed(mp);
    EXPECT_EQ(factors.length(), 2u);
    EXPECT_EQ(factors.to_string(), "C2 · A" + std::to_string(n));
  }
}

TEST(MatchedPair, DirectProductActionsGiveTheDirectProduct) {
  auto mp = trivial_matched_pair(cyclic(3), cyclic(4));
  EXPECT_TRUE(is_isomorphic(zappa_szep(mp), cyclic(12)));
}

TEST(MatchedPair, RejectsBadInput) {
  auto g = symmetric(4);
  Subgroup a4 = generated_by(g, "(1 2 3),(2 3 4)");
  Subgroup v4 = generated_by(g, "(1 2)(3 4),(1 3)(2 4)");
  try {
    matched_pair_from_factorization(g, a4, v4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_exact_factorization);
  }
  auto mp = trivial_matched_pair(cyclic(3), cyclic(2));
  mp.act_right[1 * 3 + 1] = 2;  // s ▷ y not an automorphism of C3 alone
  mp.act_right[1 * 3 + 2] = 2;
  try {
    zappa_szep(mp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_matched_pair);
  }
}

TEST(MatchedPair, NonTrivialActionsGiveSemidirectProducts) {
  // S3 = C3 ⋈ C2 from its factorization
  auto g = symmetric(3);
  auto mp = matched_pair_from_factorization(g, generated_by(g, "(1 2 3)"), generated_by(g, "(1 2)"));
  EXPECT_TRUE(is_isomorphic(zappa_szep(mp), g));
  EXPECT_FALSE(zappa_szep(mp).is_abelian());
}
