#include <gtest/gtest.h>

#include "shg/actions.hpp"
#include "shg/errors.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace shg;
using shgtest::Rng;

namespace {

const Rational half(1, 2);

Semihypergroup z2() { return from_semigroup(cyclic_group(2), "Z2"); }
Semihypergroup lz2() { return from_semigroup(left_zero_semigroup(2), "LZ2"); }

AffineAction verified(AffineAction act) {
  verify(act);
  return act;
}

// Every point of k acts by the same map.
AffineAction uniform_action(const Semihypergroup& k, ConvexCarrier c, const AffineMap& t) {
  return AffineAction(k, std::move(c), std::vector<AffineMap>(k.size(), t));
}

ConvexCarrier triangle() {
  return ConvexCarrier::hull({{0, 0}, {1, 0}, {0, 1}});
}

}  // namespace

TEST(Carrier, SimplexAndHull) {
  const auto s = ConvexCarrier::simplex(3);
  EXPECT_TRUE(s.contains(Vector{half, half, 0}));
  EXPECT_FALSE(s.contains(Vector{1, 1, -1}));
  EXPECT_FALSE(s.contains(Vector{half, half}));
  EXPECT_EQ(s.barycenter(), (Vector{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(s.difference_basis().size(), 2u);

  const auto t = triangle();
  EXPECT_TRUE(t.contains(Vector{Rational(1, 4), Rational(1, 4)}));
  EXPECT_FALSE(t.contains(Vector{1, 1}));
  const auto seg = ConvexCarrier::hull({{0, 0}, {1, 1}, {2, 2}});
  EXPECT_EQ(seg.difference_basis().size(), 1u);
  EXPECT_THROW(ConvexCarrier::hull({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(ConvexCarrier::hull({{0, 0}, {0}}), DimensionMismatch);
}

TEST(Action, ConstructorValidation) {
  EXPECT_THROW(AffineAction(z2(), ConvexCarrier::simplex(2), {AffineMap::identity(2)}),
               DimensionMismatch);
  EXPECT_THROW(uniform_action(z2(), ConvexCarrier::simplex(2), AffineMap::identity(3)),
               DimensionMismatch);
  EXPECT_THROW(uniform_action(shgtest::t3_corrupted(), ConvexCarrier::simplex(2), AffineMap::identity(2)),
               PreconditionError);
}

TEST(ActionAxiom, CanonicalMeansActionPasses) {
  for (const auto& f : shgtest::corpus(10)) {
    const auto act = canonical_means_action(f.k);
    EXPECT_TRUE(check_action_axiom(act).passed) << f.name;
    EXPECT_TRUE(check_invariance(act).passed) << f.name;
  }
}

TEST(ActionAxiom, ConstantActionPasses) {
  const auto constant = AffineMap::constant({Rational(1, 3), Rational(2, 3)});
  EXPECT_TRUE(check_action_axiom(uniform_action(lz2(), ConvexCarrier::simplex(2), constant)).passed);
  // with an identity present, e must act trivially
  const auto rep = check_action_axiom(uniform_action(shgtest::t3(), ConvexCarrier::simplex(2), constant));
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.reason, "identity acts non-trivially");
}

TEST(ActionAxiom, NonInvolutionFailsAtOneOne) {
  AffineMap t1{Matrix::from_rows({{1, 1}, {0, 1}}), Vector(2)};
  AffineAction act(z2(), triangle(), {AffineMap::identity(2), t1});
  const auto r = check_action_axiom(act);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (std::pair<Index, Index>{1, 1}));
  EXPECT_EQ(r.reason, "linear part");
}

TEST(ActionAxiom, IdentityMustActTrivially) {
  // T_0 = T_1 = constant satisfies the product law but not T_e = id
  const auto act = uniform_action(z2(), ConvexCarrier::simplex(2), AffineMap::constant({half, half}));
  const auto r = check_action_axiom(act);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.reason, "identity acts non-trivially");
}

TEST(ActionAxiom, PointwiseClosure) {
  Rng rng(31);
  for (const auto& f : shgtest::corpus(10)) {
    const auto act = canonical_means_action(f.k);
    const std::size_t n = f.k.size();
    for (int i = 0; i < 5; ++i) {
      const Vector x = shgtest::random_probability(rng, n).weights();
      for (Index s = 0; s < n; ++s)
        for (Index t = 0; t < n; ++t) {
          Vector rhs(n);
          for (Index z = 0; z < n; ++z) axpy(rhs, f.k.product(s, t)[z], act.apply(z, x));
          EXPECT_EQ(act.apply(s, act.apply(t, x)), rhs);
        }
    }
  }
}

TEST(Invariance, Examples) {
  const auto ident = uniform_action(shgtest::t3(), ConvexCarrier::simplex(3), AffineMap::identity(3));
  EXPECT_TRUE(check_invariance(ident).passed);
  AffineMap doubling{Matrix::from_rows({{2, 0}, {0, 1}}), Vector(2)};
  const auto act = uniform_action(from_semigroup(cyclic_group(1)), ConvexCarrier::simplex(2), doubling);
  const auto r = check_invariance(act);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.generator, Index{0});
  EXPECT_EQ(r.image, (Vector{2, 0}));
}

TEST(Equicontinuity, Bounds) {
  const auto spec1 = SeminormSpec{{Seminorm::l1(2)}};
  EXPECT_EQ(equicontinuity_bound(canonical_means_action(z2()), spec1), Rational(1));
  EXPECT_EQ(equicontinuity_bound(canonical_means_action(shgtest::t3()), SeminormSpec{{Seminorm::l1(3)}}),
            Rational(1));
  const auto ident = uniform_action(z2(), triangle(), AffineMap::identity(2));
  EXPECT_EQ(equicontinuity_bound(ident, SeminormSpec::standard(2)), Rational(1));
  const AffineMap twice{2 * Matrix::identity(2), Vector(2)};
  EXPECT_EQ(equicontinuity_bound(uniform_action(z2(), triangle(), twice), SeminormSpec::standard(2)),
            Rational(2));
}

TEST(Nonexpansive, Examples) {
  for (const auto& f : shgtest::corpus(10)) {
    const auto act = canonical_means_action(f.k);
    const SeminormSpec l1{{Seminorm::l1(f.k.size())}};
    const auto r = check_nonexpansive(act, l1);
    EXPECT_TRUE(r.passed) << f.name;
    for (const auto& e : r.norms) EXPECT_EQ(e.ambient, Rational(1)) << f.name;
  }
  // x -> (x + c)/2
  const AffineMap contraction{half * Matrix::identity(2), Vector{Rational(1, 4), Rational(1, 4)}};
  EXPECT_TRUE(check_nonexpansive(uniform_action(z2(), triangle(), contraction), SeminormSpec::standard(2)).passed);

  const AffineMap wide{Matrix::from_rows({{1, 0}, {half, 1}}), Vector(2)};
  const auto bad = check_nonexpansive(uniform_action(z2(), triangle(), wide), SeminormSpec{{Seminorm::l1(2)}});
  ASSERT_FALSE(bad.passed);
  ASSERT_TRUE(bad.offending);
  EXPECT_EQ(bad.offending->s, Index{0});
  EXPECT_EQ(bad.offending->seminorm, 0u);
  EXPECT_EQ(bad.offending->restricted, Rational(3, 2));
}

TEST(FixedPoint, Examples) {
  EXPECT_EQ(find_common_fixed_point(canonical_means_action(z2())), (Vector{half, half}));
  EXPECT_FALSE(find_common_fixed_point(canonical_means_action(lz2())));
  // identity action: all of C is fixed, so the lexicographic minimum is returned
  auto ident = verified(uniform_action(z2(), triangle(), AffineMap::identity(2)));
  EXPECT_EQ(find_common_fixed_point(ident), (Vector{0, 0}));
  auto simplex_ident = verified(uniform_action(z2(), ConvexCarrier::simplex(3), AffineMap::identity(3)));
  EXPECT_EQ(find_common_fixed_point(simplex_ident), (Vector{0, 0, 1}));
}

TEST(FixedPoint, RequiresVerifiedAction) {
  AffineAction act(z2(), ConvexCarrier::simplex(2), {AffineMap::identity(2), AffineMap::identity(2)});
  EXPECT_THROW(find_common_fixed_point(act), PreconditionError);
  verify(act);
  EXPECT_NO_THROW(find_common_fixed_point(act));
}

TEST(FixedPoint, CertificateWhenNone) {
  const auto act = canonical_means_action(from_semigroup(left_zero_semigroup(4)));
  const auto s = search_common_fixed_point(act);
  EXPECT_FALSE(s.point);
  EXPECT_EQ(s.lp.status, LPStatus::infeasible);
  EXPECT_FALSE(s.lp.certificate.empty());
}

TEST(FixedPoint, DistanceToFixedSet) {
  const auto act = canonical_means_action(z2());
  EXPECT_EQ(distance_to_fixed_points(act, Vector{1, 0}), half);
  EXPECT_EQ(distance_to_fixed_points(act, Vector{half, half}), Rational(0));
  EXPECT_FALSE(distance_to_fixed_points(canonical_means_action(lz2()), Vector{1, 0}));
  // the fixed set of the identity is the whole triangle
  auto ident = verified(uniform_action(z2(), triangle(), AffineMap::identity(2)));
  EXPECT_EQ(distance_to_fixed_points(ident, Vector{1, 1}), half);
}

TEST(CanonicalAction, Shapes) {
  const auto z = canonical_means_action(z2());
  EXPECT_EQ(z.map(1).a, Matrix::from_rows({{0, 1}, {1, 0}}));
  const auto l = canonical_means_action(lz2());
  EXPECT_EQ(l.map(0).a, Matrix::from_rows({{1, 1}, {0, 0}}));
  EXPECT_EQ(l.apply(1, Vector{Rational(1, 3), Rational(2, 3)}), (Vector{0, 1}));
}

TEST(CanonicalAction, FixedPointsAreTheLimPolytope) {
  for (const auto& f : shgtest::corpus(10)) {
    const auto act = canonical_means_action(f.k);
    const auto x = find_common_fixed_point(act);
    const auto m = find_LIM(f.k);
    ASSERT_EQ(x.has_value(), m.has_value()) << f.name;
    if (x) {
      EXPECT_EQ(*x, m->weights().weights()) << f.name;
      EXPECT_TRUE(verify_LIM(Mean(Measure(*x)), f.k).passed) << f.name;
    }
    for (const auto& vtx : shgtest::oracle::lim_vertices(f.k))
      EXPECT_EQ(distance_to_fixed_points(act, vtx), Rational(0)) << f.name;
  }
}

TEST(InducedFunction, Examples) {
  const AffineFunctional f{{2, 3}, 1};
  const Vector y = {Rational(1, 4), Rational(3, 4)};
  const auto ident = uniform_action(z2(), ConvexCarrier::simplex(2), AffineMap::identity(2));
  EXPECT_EQ(induced_function(ident, y, f), KFunction::constant(2, f(y)));
  const Vector c = {half, half};
  EXPECT_EQ(induced_function(uniform_action(z2(), ConvexCarrier::simplex(2), AffineMap::constant(c)), y, f),
            KFunction::constant(2, f(c)));
  EXPECT_THROW(induced_function(ident, Vector{2, -1}, f), NotInCarrier);

  // coordinate functional at z, y = vertex x: s -> (p_s*p_x)(z)
  const auto t = shgtest::t3();
  const auto act = canonical_means_action(t);
  for (Index x = 0; x < 3; ++x)
    for (Index z = 0; z < 3; ++z) {
      const auto g = induced_function(act, unit(3, x), AffineFunctional{unit(3, z), 0});
      for (Index s = 0; s < 3; ++s) EXPECT_EQ(g[s], t.product(s, x)[z]);
    }
}

TEST(InducedFunction, TranslationLaw) {
  Rng rng(41);
  for (const auto& fx : shgtest::corpus(10)) {
    const auto act = canonical_means_action(fx.k);
    const std::size_t n = fx.k.size();
    for (int i = 0; i < 5; ++i) {
      const AffineFunctional f{shgtest::random_vector(rng, n), shgtest::random_rational(rng, -2, 2)};
      const Vector y = shgtest::random_probability(rng, n).weights();
      const auto ty = induced_function(act, y, f);
      for (Index s = 0; s < n; ++s)
        EXPECT_EQ(induced_function(act, y, compose(f, act.map(s))), left_translate(s, ty, fx.k))
            << fx.name;
    }
  }
}

TEST(DualAction, Z2) {
  const auto d = dual_banach_action(z2(), 0);
  EXPECT_TRUE(check_dual_action_identity(d).passed);
  const auto s = search_lim_via_dual_action(z2(), 0);
  ASSERT_TRUE(s.mean);
  EXPECT_EQ(s.w0, (Vector{-half, half}));
  EXPECT_EQ(s.mean->weights().weights(), (Vector{half, half}));
  EXPECT_EQ(d.apply(1, s.w0), s.w0);
}

TEST(DualAction, IdentityElementActsTrivially) {
  Rng rng(43);
  const auto d = dual_banach_action(shgtest::t3(), 1);
  Vector u = shgtest::random_vector(rng, 3);
  u[2] = -u[0] - u[1];
  EXPECT_EQ(d.apply(0, u), u);
}

TEST(DualAction, OrbitBound) {
  Rng rng(47);
  for (const auto& f : shgtest::corpus(10)) {
    const auto d = dual_banach_action(f.k);
    for (int i = 0; i < 20; ++i) {
      Vector u = shgtest::random_vector(rng, f.k.size());
      u.back() -= sum(u);
      EXPECT_TRUE(orbit_bound(d, u).holds()) << f.name;
    }
  }
  EXPECT_THROW(orbit_bound(dual_banach_action(z2()), Vector{1, 0}), std::invalid_argument);
}

TEST(DualAction, AgreesWithDirectSearch) {
  EXPECT_FALSE(lim_via_dual_action(lz2()));
  for (const auto& f : shgtest::corpus(10))
    for (Index base = 0; base < f.k.size(); ++base) {
      const auto dual = lim_via_dual_action(f.k, base);
      const auto direct = find_LIM(f.k);
      ASSERT_EQ(dual.has_value(), direct.has_value()) << f.name;
      if (dual) {
        EXPECT_EQ(*dual, *direct) << f.name;
        EXPECT_TRUE(shgtest::oracle::is_lim(dual->weights().weights(), f.k));
      }
    }
}
