#include <gtest/gtest.h>

#include "shg/algebra.hpp"
#include "shg/constructors.hpp"
#include "shg/errors.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace shg;
using shgtest::Rng;

namespace {

Measure m3(Rational e, Rational a, Rational b) { return Measure(Vector{e, a, b}); }

Semihypergroup unchecked_two_point(Measure ab) {
  ConvolutionTable t(2);
  t.set(0, 0, Measure::point_mass(2, 0));
  t.set(0, 1, Measure::point_mass(2, 1));
  t.set(1, 0, Measure::point_mass(2, 1));
  t.set(1, 1, std::move(ab));
  return Semihypergroup("bad", PointSpace({"e", "x"}), std::move(t));
}

}  // namespace

TEST(PointSpace, RejectsDuplicatesAndUnknownLabels) {
  EXPECT_THROW(PointSpace({"a", "a"}), InvalidStructure);
  EXPECT_THROW(PointSpace(std::vector<std::string>{}), InvalidStructure);
  const PointSpace sp({"a", "b"});
  EXPECT_EQ(sp.index_of("b"), 1u);
  EXPECT_THROW(sp.index_of("c"), UnknownLabel);
  EXPECT_FALSE(sp.find("c"));
}

TEST(Convolve, GroupLaw) {
  const auto z2 = from_semigroup(cyclic_group(2));
  EXPECT_EQ(convolve(Measure::point_mass(2, 1), Measure::point_mass(2, 1), z2),
            Measure::point_mass(2, 0));
}

TEST(Convolve, ThreePointProducts) {
  const auto t = shgtest::t3();
  const Rational h(1, 2);
  EXPECT_EQ(convolve(Measure::point_mass(3, 1), Measure::point_mass(3, 2), t), m3(0, h, h));
  EXPECT_EQ(convolve(m3(h, h, 0), Measure::point_mass(3, 0), t), m3(h, h, 0));
}

TEST(Convolve, DimensionMismatch) {
  const auto t = shgtest::t3();
  EXPECT_THROW(convolve(Measure(2), Measure(3), t), DimensionMismatch);
}

TEST(ConvolveSets, Supports) {
  const auto t = shgtest::t3();
  EXPECT_EQ(convolve_sets(PointSet{1}, PointSet{2}, t), (PointSet{1, 2}));
  EXPECT_TRUE(convolve_sets(PointSet{}, PointSet{0, 1}, t).empty());
  EXPECT_EQ(convolve_sets(std::vector<std::string>{"a"}, {"b"}, t),
            (std::vector<std::string>{"a", "b"}));
}

TEST(ConvolveSets, CosetProduct) {
  const auto g = shgtest::s3_cycles();
  const auto k = coset_space(g, shgtest::s3_h(g));
  // (123)H = {(123),(13)}; brute force over the table in the python oracle
  EXPECT_EQ(convolve_sets(std::vector<std::string>{"{(123),(13)}"}, {"{(123),(13)}"}, k),
            (std::vector<std::string>{"{(12),e}", "{(132),(23)}"}));
}

TEST(ConvolveSets, SupportLaw) {
  for (const auto& f : shgtest::named_corpus())
    for (Index x = 0; x < f.k.size(); ++x)
      for (Index y = 0; y < f.k.size(); ++y)
        EXPECT_EQ(f.k.product(x, y).support(), convolve_sets(PointSet{x}, PointSet{y}, f.k))
            << f.name;
}

TEST(Associativity, Fixtures) {
  EXPECT_TRUE(check_associativity(shgtest::t3()).passed);
  EXPECT_TRUE(check_associativity(from_semigroup(left_zero_semigroup(2))).passed);
  const auto bad = check_associativity(shgtest::t3_corrupted());
  ASSERT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_NE(bad.lhs, bad.rhs);
  EXPECT_FALSE(shgtest::oracle::associative(shgtest::t3_corrupted()));
}

TEST(Associativity, AgreesWithOracleOnCorpus) {
  for (const auto& f : shgtest::corpus(10))
    EXPECT_EQ(check_associativity(f.k).passed, shgtest::oracle::associative(f.k)) << f.name;
}

TEST(Probability, DetectsBadRows) {
  const Rational h(1, 2);
  auto heavy = unchecked_two_point(Measure(Vector{Rational(1), h}));
  const auto r = check_probability(heavy);
  ASSERT_FALSE(r.passed);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].x, 1u);
  EXPECT_EQ(r.violations[0].y, 1u);
  EXPECT_EQ(r.violations[0].reason, "total mass 3/2 != 1");

  auto negative = unchecked_two_point(Measure(Vector{Rational(3, 2), -h}));
  const auto n = check_probability(negative);
  ASSERT_FALSE(n.passed);
  EXPECT_EQ(n.violations[0].x, 1u);
  EXPECT_NE(n.violations[0].reason.find("negative weight"), std::string::npos);

  for (const auto& f : shgtest::corpus()) EXPECT_TRUE(check_probability(f.k).passed) << f.name;
}

TEST(Identity, Examples) {
  EXPECT_EQ(find_identity(shgtest::t3()), Index{0});
  EXPECT_EQ(find_identity(from_semigroup(cyclic_group(2))), Index{0});
  EXPECT_FALSE(find_identity(from_semigroup(left_zero_semigroup(2))));
}

TEST(Commutative, Examples) {
  EXPECT_TRUE(check_commutative(shgtest::t3()));
  EXPECT_TRUE(check_commutative(from_semigroup(cyclic_group(2))));
  EXPECT_FALSE(check_commutative(from_semigroup(left_zero_semigroup(2))));
}

TEST(Verify, FlagsResetOnMutation) {
  auto t = shgtest::t3();
  ASSERT_TRUE(t.verified());
  EXPECT_EQ(t.identity(), Index{0});
  t.set_product(1, 1, Measure::point_mass(3, 0));
  EXPECT_FALSE(t.verified());
  EXPECT_FALSE(t.checked());
  EXPECT_THROW(t.require_verified("test"), PreconditionError);
  const auto summary = verify(t);
  EXPECT_EQ(summary.passed(), t.verified());
}

TEST(ConvolutionProperties, BilinearityAndMass) {
  Rng rng(21);
  for (const auto& f : shgtest::named_corpus()) {
    const std::size_t n = f.k.size();
    for (int i = 0; i < 20; ++i) {
      const Measure m1 = shgtest::random_measure(rng, n), m2 = shgtest::random_measure(rng, n);
      const Measure nu = shgtest::random_measure(rng, n);
      const Rational a = shgtest::random_rational(rng, -2, 2), b = shgtest::random_rational(rng, -2, 2);
      EXPECT_EQ(convolve(a * m1 + b * m2, nu, f.k), a * convolve(m1, nu, f.k) + b * convolve(m2, nu, f.k));
      EXPECT_EQ(convolve(nu, a * m1 + b * m2, f.k), a * convolve(nu, m1, f.k) + b * convolve(nu, m2, f.k));
      EXPECT_EQ(convolve(m1, nu, f.k).total(), m1.total() * nu.total());
      const auto ref = shgtest::oracle::convolve(m1.weights(), nu.weights(), f.k);
      EXPECT_EQ(convolve(m1, nu, f.k).weights(), ref);
    }
  }
}

TEST(ConvolutionProperties, AssociativityExtendsToMeasures) {
  Rng rng(22);
  for (const auto& f : shgtest::corpus(10)) {
    const std::size_t n = f.k.size();
    for (int i = 0; i < 100; ++i) {
      const Measure a = shgtest::random_measure(rng, n), b = shgtest::random_measure(rng, n),
                    c = shgtest::random_measure(rng, n);
      ASSERT_EQ(convolve(convolve(a, b, f.k), c, f.k), convolve(a, convolve(b, c, f.k), f.k)) << f.name;
    }
  }
}
