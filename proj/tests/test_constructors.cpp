#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rings.hpp"

using namespace fjh;

namespace {

/// Ring isomorphism between pointed rings: the groups of invertibles agree.
FiniteGroup invertible_group(const FusionRing& r) {
  auto inv = invertibles(r);
  std::vector<Index> local(r.rank(), 0);
  for (std::size_t a = 0; a < inv.size(); ++a) local[inv[a]] = static_cast<Index>(a);
  std::vector<Element> table;
  for (Index a : inv)
    for (Index b : inv) table.push_back(local[r.product(a, b)[0].k]);
  return FiniteGroup(std::move(table));
}

}  // namespace

TEST(Constructors, PointedRings) {
  auto t = pointed_ring(FiniteGroup{});
  EXPECT_EQ(t.rank(), 1u);
  EXPECT_TRUE(validate(t).ok);
  auto s4 = pointed_ring(symmetric(4));
  EXPECT_TRUE(validate(s4).ok);
  FactorMultiset expect;
  expect.add(cyclic_descriptor(2), 3);
  expect.add(cyclic_descriptor(3));
  EXPECT_EQ(composition_factors(s4), expect);
}

TEST(Constructors, RepresentationRings) {
  auto s3 = rep_ring(symmetric(3));
  ASSERT_EQ(s3.rank(), 3u);
  // basis 1a (trivial), 1b (sign), 2a (standard)
  EXPECT_EQ(s3.label(2), "2a");
  EXPECT_EQ(s3.coeff(2, 2, 0), 1u);
  EXPECT_EQ(s3.coeff(2, 2, 1), 1u);
  EXPECT_EQ(s3.coeff(2, 2, 2), 1u);
  EXPECT_EQ(s3.coeff(1, 2, 2), 1u);

  for (const char* name : {"C4", "C2^2", "C3xC3"}) {
    auto g = parse_group_spec(name);
    auto r = rep_ring(g);
    EXPECT_TRUE(is_pointed(r)) << name;
    EXPECT_EQ(r.rank(), g.order());
    EXPECT_TRUE(is_isomorphic(invertible_group(r), g)) << name;  // a finite abelian group is isomorphic to its dual
  }

  auto d4 = rep_ring(dihedral(4));
  EXPECT_TRUE(is_nilpotent(d4));
  EXPECT_EQ(composition_factors(d4).to_string(), "C2^3");
}

TEST(Constructors, RepRingDegreesAreCharacterDegrees) {
  for (const char* name : {"S4", "Q8", "Dic3", "A4", "C4oD4"}) {
    auto g = parse_group_spec(name);
    auto t = character_table(g);
    auto fp = fpdim(rep_ring(g));
    EXPECT_NEAR(fp.total, static_cast<double>(g.order()), 1e-9);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(std::llround(fp.dims[i]), static_cast<long long>(t.degrees[i]));
  }
}

TEST(Constructors, DrinfeldDoubles) {
  auto z2 = double_ring(cyclic(2));
  EXPECT_TRUE(is_pointed(z2));
  EXPECT_TRUE(is_isomorphic(invertible_group(z2), parse_group_spec("C2^2")));
  EXPECT_EQ(composition_factors(z2).to_string(), "C2^2");
  auto z3 = double_ring(cyclic(3));
  EXPECT_TRUE(is_isomorphic(invertible_group(z3), parse_group_spec("C3^2")));
  EXPECT_EQ(composition_factors(z3).to_string(), "C3^2");

  auto q8 = double_ring(quaternion8());
  EXPECT_EQ(q8.rank(), 22u);
  EXPECT_TRUE(validate(q8).ok);
  EXPECT_TRUE(is_nilpotent(q8));
  EXPECT_EQ(composition_factors(q8).to_string(), "C2^6");
  EXPECT_EQ(composition_factors(q8), morita_factors_double(quaternion8()));

  for (const char* name : {"S3", "D4", "A4", "Dic3"}) {
    auto g = parse_group_spec(name);
    auto d = double_ring(g);
    EXPECT_TRUE(validate(d).ok) << name;
    EXPECT_NEAR(fpdim(d).total, static_cast<double>(g.order() * g.order()), 1e-6) << name;
  }
  // rank = Σ over classes of the number of centralizer irreducibles
  EXPECT_EQ(double_ring(symmetric(3)).rank(), 8u);
}

TEST(Constructors, DeligneProducts) {
  auto r = tambara_yamagami(cyclic(3));
  auto ru = deligne_product(r, unit_ring());
  EXPECT_EQ(ru.rank(), r.rank());
  for (Index i = 0; i < r.rank(); ++i)
    for (Index j = 0; j < r.rank(); ++j)
      for (Index k = 0; k < r.rank(); ++k) EXPECT_EQ(ru.coeff(i, j, k), r.coeff(i, j, k));
  auto p = deligne_product(pointed_ring(cyclic(2)), pointed_ring(cyclic(3)));
  EXPECT_TRUE(validate(p).ok);
  EXPECT_TRUE(is_isomorphic(invertible_group(p), cyclic(6)));
  auto tt = deligne_product(tambara_yamagami(cyclic(2)), tambara_yamagami(cyclic(2)));
  EXPECT_EQ(composition_factors(tt).to_string(), "C2^4");
}

TEST(Constructors, TambaraYamagami) {
  auto t2 = tambara_yamagami(cyclic(2));
  EXPECT_EQ(t2.rank(), 3u);
  EXPECT_NEAR(fpdim(t2).total, 4.0, 1e-9);
  EXPECT_EQ(composition_factors(tambara_yamagami(cyclic(3))).to_string(), "C2 · C3");
  auto t1 = tambara_yamagami(FiniteGroup{});
  EXPECT_EQ(t1.rank(), 2u);
  EXPECT_EQ(t1.coeff(1, 1, 0), 1u);
  EXPECT_TRUE(is_pointed(t1));
  try {
    tambara_yamagami(symmetric(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_abelian);
  }
}

TEST(Constructors, OppositeRings) {
  auto c = rep_ring(symmetric(4));
  auto co = opposite_ring(c);
  EXPECT_EQ(co.coefficients(), c.coefficients());
  auto s3 = pointed_ring(symmetric(3));
  auto op = opposite_ring(s3);
  EXPECT_TRUE(validate(op).ok);
  // g -> g^-1 identifies the opposite with the original
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b)
      for (Index k = 0; k < 6; ++k) EXPECT_EQ(op.coeff(s3.dual(a), s3.dual(b), s3.dual(k)), s3.coeff(a, b, k));
  EXPECT_NEAR(fpdim(op).total, fpdim(s3).total, 1e-12);
  for (const auto& r : {s3, tambara_yamagami(cyclic(4)), double_ring(dihedral(4))})
    EXPECT_EQ(composition_factors(opposite_ring(r)), composition_factors(r));
}

TEST(Constructors, GroupLevelEvaluators) {
  auto s5 = symmetric(5);
  EXPECT_EQ(extension_factors(FactorMultiset{}, s5), composition_factors_group(s5));
  EXPECT_EQ(morita_factors_rep(dihedral(4)), composition_factors(rep_ring(dihedral(4))));
  EXPECT_EQ(morita_factors_double(cyclic(6)).length(), 4u);
  auto f = composition_factors_group(cyclic(2));
  EXPECT_EQ(extension_factors(f, cyclic(3)).to_string(), "C2 · C3");
}

TEST(Constructors, CharacterTableFailureIsReported) {
  // a zero-attempt budget cannot separate the classes
  try {
    rep_ring(symmetric(3), {.max_attempts = 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_combination);
    EXPECT_EQ(e.exit_code(), 4);
  }
}
