#include <gtest/gtest.h>

#include "shg/linalg.hpp"
#include "shg/rational.hpp"
#include "corpus.hpp"

using namespace shg;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", "1/", "/2", " 1/2"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("4/8")), "1/2");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(join({Rational(1, 2), Rational(1, 2)}), "1/2, 1/2");
}

TEST(Rational, RoundTripsRandomValues) {
  shgtest::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational q = shgtest::random_rational(rng, -10, 10, 50);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Linalg, MatrixProductAndTranspose) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Matrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), Matrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a * Matrix::identity(2), a);
  const Vector x = {Rational(1), Rational(-1)};
  EXPECT_EQ(a * x, (Vector{-1, -1}));
}

TEST(Linalg, RankAndNullspace) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dot(m.row(i), ns[0]), 0);
  EXPECT_TRUE(nullspace(Matrix::identity(3)).empty());
}

TEST(Linalg, IndependentSubsetKeepsOrder) {
  const std::vector<Vector> v = {{1, 0}, {2, 0}, {0, 1}, {1, 1}};
  const auto s = independent_subset(v);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], v[0]);
  EXPECT_EQ(s[1], v[2]);
}

TEST(Linalg, SolveLinearReportsSolutionSet) {
  const Matrix a = Matrix::from_rows({{1, 1}, {1, -1}});
  const auto s = solve_linear(a, Vector{2, 0});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, (Vector{1, 1}));
  EXPECT_TRUE(s.nullspace.empty());

  const auto under = solve_linear(Matrix::from_rows({{1, 1}}), Vector{1});
  ASSERT_TRUE(under.consistent);
  EXPECT_EQ(under.nullspace.size(), 1u);
  EXPECT_EQ(sum(under.particular), 1);

  EXPECT_FALSE(solve_linear(Matrix::from_rows({{1, 1}, {1, 1}}), Vector{1, 2}).consistent);
}

TEST(Linalg, SolveLinearOnRandomSystems) {
  shgtest::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(shgtest::random_vector(rng, 4));
    const Matrix a = Matrix::from_rows(rows);
    const Vector x = shgtest::random_vector(rng, 4);
    const Vector b = a * x;
    const auto s = solve_linear(a, b);
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(a * s.particular, b);
    for (const auto& d : s.nullspace) EXPECT_EQ(a * d, zeros(3));
  }
}

TEST(Linalg, Norms) {
  const Vector v = {Rational(-1, 2), Rational(3), Rational(0)};
  EXPECT_EQ(norm_l1(v), Rational(7, 2));
  EXPECT_EQ(norm_linf(v), 3);
  EXPECT_EQ(sum(v), Rational(5, 2));
}
