#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rings.hpp"

using namespace fjh;

TEST(FusionRingCore, StructuralChecks) {
  std::vector<Coefficient> one{{0, 0, 0, 1}};
  EXPECT_THROW(FusionRing(1, {}, 1, {0}, one), Error);                           // unit out of range
  EXPECT_THROW(FusionRing(2, {"a", "a"}, 0, {0, 1}, one), Error);                // repeated label
  EXPECT_THROW(FusionRing(3, {}, 0, {0, 2, 2}, one), Error);                     // dual not involutive
  std::vector<Coefficient> dup{{0, 0, 0, 1}, {0, 0, 0, 2}};
  EXPECT_THROW(FusionRing(1, {}, 0, {0}, dup), Error);
  std::vector<Coefficient> zero{{0, 0, 0, 0}};
  EXPECT_THROW(FusionRing(1, {}, 0, {0}, zero), Error);
  std::vector<Coefficient> range{{0, 0, 3, 1}};
  EXPECT_THROW(FusionRing(1, {}, 0, {0}, range), Error);
}

TEST(FusionRingCore, ValidRingsPass) {
  EXPECT_TRUE(validate(unit_ring()).ok);
  // τ² = 1 + τ is associative: (ττ)τ = τ(ττ) = 1 + 2τ
  auto fib = rings::fibonacci();
  EXPECT_TRUE(validate(fib).ok);
  EXPECT_TRUE(oracle::axioms(fib).ok());
  auto ty = tambara_yamagami(cyclic(3));
  EXPECT_EQ(ty.rank(), 4u);
  EXPECT_TRUE(validate(ty).ok);
  EXPECT_TRUE(oracle::axioms(ty).ok());
  EXPECT_TRUE(validate(pointed_ring(symmetric(3))).ok);
}

TEST(FusionRingCore, MutantsNameTheirViolation) {
  struct Case {
    FusionRing ring;
    Axiom axiom;
  };
  std::vector<Case> cases{{rings::broken_unit(), Axiom::unit},
                          {rings::broken_associativity(), Axiom::associativity},
                          {rings::broken_duality(), Axiom::duality},
                          {rings::broken_reciprocity(), Axiom::reciprocity}};
  for (const auto& c : cases) {
    auto report = validate(c.ring);
    EXPECT_FALSE(report.ok) << to_string(c.axiom);
    EXPECT_TRUE(report.violates(c.axiom)) << to_string(c.axiom);
    auto brute = oracle::axioms(c.ring);
    EXPECT_EQ(report.violates(Axiom::unit), !brute.unit);
    EXPECT_EQ(report.violates(Axiom::associativity), !brute.associativity);
    EXPECT_EQ(report.violates(Axiom::duality), !brute.duality);
    EXPECT_EQ(report.violates(Axiom::reciprocity), !brute.reciprocity);
  }
  // associativity and reciprocity can fail alone; unit and duality cannot,
  // since each is implied by reciprocity together with the other
  EXPECT_EQ(validate(rings::broken_associativity()).violations.size(), 1u);
  EXPECT_EQ(validate(rings::broken_reciprocity()).violations.size(), 1u);
}

TEST(FusionRingCore, ValidateAgreesWithBruteForceOnCorpus) {
  std::vector<FusionRing> corpus{pointed_ring(dihedral(4)), tambara_yamagami(parse_group_spec("C2^2")),
                                 rep_ring(symmetric(4)), double_ring(symmetric(3)), opposite_ring(pointed_ring(symmetric(3)))};
  for (const auto& r : corpus) {
    EXPECT_TRUE(validate(r).ok);
    EXPECT_TRUE(oracle::axioms(r).ok());
  }
}

TEST(FusionRingCore, FrobeniusPerronDimensions) {
  auto fib = fpdim(rings::fibonacci());
  EXPECT_NEAR(fib.dims[1], (1 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_NEAR(fib.total, 1 + fib.dims[1] * fib.dims[1], 1e-12);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u}) {
    auto fp = fpdim(tambara_yamagami(cyclic(n)));
    EXPECT_NEAR(fp.dims.back(), std::sqrt(static_cast<double>(n)), 1e-9);
    EXPECT_NEAR(fp.total, 2.0 * n, 1e-9);
  }
  auto rs4 = fpdim(rep_ring(symmetric(4)));
  EXPECT_NEAR(rs4.total, 24.0, 1e-9);
}

TEST(FusionRingCore, PerronVectorSatisfiesTheEigenEquation) {
  for (const auto& r : {double_ring(quaternion8()), rep_ring(symmetric(4)), rings::fibonacci()}) {
    auto fp = fpdim(r);
    for (Index i = 0; i < r.rank(); ++i)
      for (Index j = 0; j < r.rank(); ++j) {
        double s = 0;
        for (const auto& t : r.product(i, j)) s += t.n * fp.dims[t.k];
        EXPECT_NEAR(s, fp.dims[i] * fp.dims[j], 1e-9);
      }
  }
}

TEST(FusionRingCore, Invertibles) {
  EXPECT_TRUE(is_pointed(pointed_ring(quaternion8())));
  auto ty = tambara_yamagami(cyclic(3));
  EXPECT_EQ(invertibles(ty).size(), 3u);
  EXPECT_FALSE(is_pointed(ty));
}
