#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rings.hpp"

using namespace fjh;

namespace {

std::size_t finest_brute_grading(const FusionRing& r) {
  std::vector<Index> all(r.rank());
  std::iota(all.begin(), all.end(), Index{0});
  std::size_t best = 0;
  for (const auto& g : oracle::faithful_gradings(r, all)) best = std::max(best, g.classes);
  return best;
}

}  // namespace

TEST(Grading, AdjointSubrings) {
  EXPECT_EQ(adjoint(pointed_ring(symmetric(3))).size(), 1u);
  auto ty = tambara_yamagami(cyclic(3));
  EXPECT_EQ(adjoint(ty), (Subring{{0, 1, 2}}));
  auto fib = rings::fibonacci();
  EXPECT_EQ(adjoint(fib), full_subring(fib));
}

TEST(Grading, UniversalGradingOfPointedRingIsTheGroup) {
  for (const char* name : {"S3", "D4", "Q8", "C2xC4", "A4"}) {
    auto g = parse_group_spec(name);
    auto u = universal_grading(pointed_ring(g));
    EXPECT_TRUE(is_isomorphic(u.group, g)) << name;
    EXPECT_TRUE(is_grading(pointed_ring(g), u.group, u.degree));
  }
}

TEST(Grading, UniversalGradingMatchesFinestBruteGrading) {
  std::vector<std::pair<std::string, FusionRing>> corpus{
      {"fib", rings::fibonacci()},
      {"TY(C3)", tambara_yamagami(cyclic(3))},
      {"TY(C2^2)", tambara_yamagami(parse_group_spec("C2^2"))},
      {"Rep(S3)", rep_ring(symmetric(3))},
      {"Rep(S4)", rep_ring(symmetric(4))},
      {"Rep(D4)", rep_ring(dihedral(4))},
      {"Rep(Q8)", rep_ring(quaternion8())},
      {"pointed(S3)", pointed_ring(symmetric(3))},
      {"pointed(C2xC4)", pointed_ring(parse_group_spec("C2xC4"))}};
  for (const auto& [name, r] : corpus) {
    auto u = universal_grading(r);
    EXPECT_EQ(u.group.order(), finest_brute_grading(r)) << name;
    EXPECT_EQ(u.neutral_component(), adjoint(r)) << name;
  }
  // Rep G is graded by the dual of the center of G
  EXPECT_EQ(universal_grading(rep_ring(symmetric(3))).group.order(), 1u);
  EXPECT_EQ(universal_grading(rep_ring(symmetric(4))).group.order(), 1u);
  EXPECT_EQ(universal_grading(rep_ring(dihedral(4))).group.order(), 2u);
  EXPECT_EQ(universal_grading(tambara_yamagami(cyclic(3))).group.order(), 2u);
}

TEST(Grading, EveryBruteGradingIsAQuotientOfTheUniversalOne) {
  for (const auto& r : {tambara_yamagami(parse_group_spec("C2^2")), pointed_ring(symmetric(3)), rep_ring(dihedral(4))}) {
    std::vector<Index> all(r.rank());
    std::iota(all.begin(), all.end(), Index{0});
    auto u = universal_grading(r);
    std::set<std::vector<std::size_t>> brute;
    for (const auto& g : oracle::faithful_gradings(r, all)) brute.insert(g.block);
    std::set<std::vector<std::size_t>> ours;
    for (const auto& q : quotient_gradings(r, u)) {
      // relabel blocks by first appearance to compare partitions
      std::map<Element, std::size_t> seen;
      std::vector<std::size_t> block;
      for (Element d : q.grading.degree) block.push_back(seen.emplace(d, seen.size()).first->second);
      ours.insert(block);
    }
    EXPECT_EQ(ours, brute);
  }
}

TEST(Grading, SubringsMatchBruteForce) {
  for (const auto& r : {pointed_ring(dihedral(4)), tambara_yamagami(parse_group_spec("C2^2")), rep_ring(symmetric(4)),
                        double_ring(cyclic(3)), rep_ring(quaternion8()), rings::fibonacci()}) {
    auto brute = oracle::subrings(r);
    auto ours = all_subrings(r);
    std::set<std::vector<Index>> a(brute.begin(), brute.end()), b;
    for (const auto& s : ours) b.insert(s.members);
    EXPECT_EQ(a, b);
    for (const auto& s : ours) EXPECT_TRUE(is_subring(r, s));
  }
  EXPECT_THROW(all_subrings(pointed_ring(cyclic(21))), Error);
}

TEST(Grading, ClosureAndComponents) {
  auto r = pointed_ring(cyclic(6));
  std::vector<Index> seed{2};
  EXPECT_EQ(closure(r, seed).size(), 3u);
  auto u = universal_grading(r);
  auto maximal = maximal_normal_subgroups(u.group);
  for (const auto& h : maximal) {
    auto s = component_subring(u, h);
    EXPECT_EQ(s.size(), h.size());
    EXPECT_TRUE(is_subring(r, s));
  }
}

TEST(Grading, RestrictionKeepsTheAxioms) {
  auto r = double_ring(cyclic(2));
  for (const auto& s : all_subrings(r)) {
    auto sub = restrict_to(r, s);
    EXPECT_TRUE(validate(sub.ring).ok);
    EXPECT_EQ(sub.to_parent, s.members);
  }
}

TEST(Grading, IsGradingRejectsBadDegreeMaps) {
  auto r = pointed_ring(cyclic(4));
  auto u = universal_grading(r);
  std::vector<Element> bad = u.degree;
  std::swap(bad[1], bad[2]);
  EXPECT_FALSE(is_grading(r, u.group, bad));
  EXPECT_TRUE(is_grading(r, u.group, u.degree));
}
