#include <gtest/gtest.h>

#include "shg/amenability.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace shg;

namespace {

Vector v(std::initializer_list<Rational> x) { return Vector(x); }

}  // namespace

TEST(Mean, Validation) {
  EXPECT_THROW(Mean(Measure(Vector{Rational(1, 2), Rational(1, 4)})), std::invalid_argument);
  EXPECT_THROW(Mean(Measure(Vector{Rational(3, 2), Rational(-1, 2)})), std::invalid_argument);
  const Mean m = Mean::uniform(4);
  EXPECT_EQ(m(KFunction(Vector{4, 0, 0, 0})), 1);
}

TEST(FindLIM, Examples) {
  const Rational h(1, 2);
  auto z2 = find_LIM(from_semigroup(cyclic_group(2)));
  ASSERT_TRUE(z2);
  EXPECT_EQ(z2->weights().weights(), v({h, h}));
  EXPECT_FALSE(find_LIM(from_semigroup(left_zero_semigroup(2))));
  auto t3 = find_LIM(shgtest::t3());
  ASSERT_TRUE(t3);
  EXPECT_EQ(t3->weights().weights(), v({Rational(1, 9), Rational(4, 9), Rational(4, 9)}));
  EXPECT_TRUE(is_left_amenable_AP(shgtest::t3()));
  EXPECT_FALSE(is_left_amenable_AP(from_semigroup(left_zero_semigroup(2))));
}

TEST(FindLIM, NonUniqueTakesLexicographicMinimum) {
  // right-zero: every mean is left invariant
  auto m = find_LIM(from_semigroup(right_zero_semigroup(2)));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->weights().weights(), v({0, 1}));
}

TEST(FindLIM, InfeasibilityCertificate) {
  const auto k = from_semigroup(left_zero_semigroup(3));
  const auto s = search_invariant_mean(k);
  EXPECT_FALSE(s.mean);
  EXPECT_TRUE(is_farkas_certificate(invariant_mean_problem(k), s.lp.certificate));
}

TEST(FindLIM, RequiresVerifiedStructure) {
  EXPECT_THROW(find_LIM(shgtest::t3_corrupted()), PreconditionError);
}

TEST(FindRIM, LeftZeroHasRightInvariantMeans) {
  // left-zero semigroups are right amenable
  EXPECT_TRUE(find_RIM(from_semigroup(left_zero_semigroup(3))));
  EXPECT_FALSE(find_RIM(from_semigroup(right_zero_semigroup(3))));
}

TEST(VerifyLIM, Examples) {
  const auto z2 = from_semigroup(cyclic_group(2));
  EXPECT_TRUE(verify_LIM(Mean::uniform(2), z2).passed);
  const auto bad = verify_LIM(Mean(Measure::point_mass(2, 0)), z2);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.s, Index{1});
  EXPECT_TRUE(verify_LIM(Mean::uniform(1), from_semigroup(cyclic_group(1))).passed);
}

TEST(FindLIM, AgreesWithVertexEnumeration) {
  for (const auto& f : shgtest::corpus(10)) {
    const auto vertices = shgtest::oracle::lim_vertices(f.k);
    const auto m = find_LIM(f.k);
    ASSERT_EQ(m.has_value(), !vertices.empty()) << f.name;
    if (!m) continue;
    EXPECT_EQ(m->weights().weights(), vertices.front()) << f.name;
    EXPECT_TRUE(verify_LIM(*m, f.k).passed) << f.name;
    EXPECT_TRUE(shgtest::oracle::is_lim(m->weights().weights(), f.k)) << f.name;
  }
}

TEST(FindLIM, GroupsHaveTheUniformMean) {
  for (const auto& g : {cyclic_group(3), cyclic_group(4), shgtest::s3_cycles(), symmetric_group(4)}) {
    const auto k = from_semigroup(g);
    EXPECT_TRUE(verify_LIM(Mean::uniform(k.size()), k).passed);
    EXPECT_EQ(find_LIM(k), Mean::uniform(k.size()));
  }
}

TEST(FindLIM, CommutativeCorpusIsAmenable) {
  for (const auto& f : shgtest::corpus())
    if (f.k.commutative()) EXPECT_TRUE(is_left_amenable_AP(f.k)) << f.name;
}
