#pragma once

// Affine representations of a finite semihypergroup on compact convex
// polytopes, and the two canonical constructions built from translations:
//
//  * the means action  phi -> L_s^* phi = M_s^T phi  on the probability simplex,
//    whose common fixed points are exactly the left-invariant means;
//  * the dual action  u -> M_s^T (u + v0) - v0  on the trace-zero subspace,
//    whose fixed points w0 give the LIM m0 = w0 + v0.
//
// For affine maps x -> A x + b the action axiom
//   T_s(T_t x) = sum_z (p_s*p_t)(z) T_z(x)
// holds for all x iff  A_s A_t = sum_z c_z A_z  and  A_s b_t + b_s = sum_z c_z b_z,
// so every check here is an exact matrix identity.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/algebra.hpp"
#include "shg/amenability.hpp"
#include "shg/function_space.hpp"
#include "shg/lp.hpp"
#include "shg/seminorm.hpp"

namespace shg {

class ConvexCarrier {
 public:
  enum class Kind { simplex, hull };

  /// The standard simplex {x >= 0, sum x = 1} in dimension d >= 1.
  static ConvexCarrier simplex(std::size_t d);
  /// Convex hull of finitely many distinct points of equal dimension.
  static ConvexCarrier hull(std::vector<Vector> points);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dim_; }
  /// Vertices of the simplex, or the hull's generating points.
  const std::vector<Vector>& generators() const noexcept { return gen_; }

  bool contains(std::span<const Rational> x) const;
  Vector barycenter() const;
  /// Independent vectors spanning span(C - C).
  std::vector<Vector> difference_basis() const;

  /// Feasibility system of the carrier in its own variables (x itself for
  /// the simplex, barycentric weights for a hull) with x = to_point * vars.
  LPProblem membership_system() const;
  const Matrix& to_point() const noexcept { return to_point_; }

 private:
  ConvexCarrier(Kind kind, std::size_t dim, std::vector<Vector> gen);

  Kind kind_;
  std::size_t dim_;
  std::vector<Vector> gen_;
  Matrix to_point_;
};

struct AffineMap {
  Matrix a;
  Vector b;

  static AffineMap identity(std::size_t d);
  static AffineMap constant(Vector c);
  std::size_t dimension() const noexcept { return b.size(); }
  Vector operator()(std::span<const Rational> x) const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

class AffineAction;

struct ActionVerification;

class AffineAction {
 public:
  /// One map per point of k, each of the carrier's dimension. k must be
  /// verified. Throws DimensionMismatch / PreconditionError.
  AffineAction(Semihypergroup k, ConvexCarrier carrier, std::vector<AffineMap> maps);

  const Semihypergroup& structure() const noexcept { return k_; }
  const ConvexCarrier& carrier() const noexcept { return carrier_; }
  const AffineMap& map(Index s) const { return maps_.at(s); }
  const std::vector<AffineMap>& maps() const noexcept { return maps_; }
  std::size_t dimension() const noexcept { return carrier_.dimension(); }
  Vector apply(Index s, std::span<const Rational> x) const { return maps_.at(s)(x); }

  bool axiom_verified() const noexcept { return axiom_verified_; }
  bool invariance_verified() const noexcept { return invariance_verified_; }

  friend ActionVerification verify(AffineAction& act);

 private:
  Semihypergroup k_;
  ConvexCarrier carrier_;
  std::vector<AffineMap> maps_;
  bool axiom_verified_ = false;
  bool invariance_verified_ = false;
};

struct ActionAxiomReport {
  bool passed = true;
  std::optional<std::pair<Index, Index>> witness;  ///< (s, t)
  std::string reason;  ///< "linear part", "offset part", "identity acts non-trivially"
  explicit operator bool() const noexcept { return passed; }
};

ActionAxiomReport check_action_axiom(const AffineAction& act);

struct CarrierInvarianceReport {
  bool passed = true;
  std::optional<Index> s;
  std::optional<Index> generator;  ///< index into carrier().generators()
  Vector image;                    ///< T_s(generator), outside the carrier
  explicit operator bool() const noexcept { return passed; }
};

/// T_s maps every generator of C into C (sufficient by affinity).
CarrierInvarianceReport check_invariance(const AffineAction& act);

struct ActionVerification {
  ActionAxiomReport axiom;
  CarrierInvarianceReport invariance;
  bool passed() const noexcept { return axiom.passed && invariance.passed; }
};

/// Runs both checks and records the verdicts on act.
ActionVerification verify(AffineAction& act);

struct OperatorNormEntry {
  std::size_t seminorm;              ///< index into q.seminorms
  Index s;
  std::optional<Rational> restricted;  ///< on span(C - C); empty = unbounded
  std::optional<Rational> ambient;     ///< on the whole space
};

/// Both operator seminorms of every A_s under every seminorm in q.
std::vector<OperatorNormEntry> operator_norms(const AffineAction& act, const SeminormSpec& q);

/// max over s and p of the restricted operator seminorm of A_s; empty when
/// some entry is unbounded. Any finite value certifies equicontinuity.
std::optional<Rational> equicontinuity_bound(const AffineAction& act, const SeminormSpec& q);

struct NonexpansiveReport {
  bool passed = true;
  std::vector<OperatorNormEntry> norms;
  std::optional<OperatorNormEntry> offending;  ///< first entry with restricted norm > 1
  explicit operator bool() const noexcept { return passed; }
};

NonexpansiveReport check_nonexpansive(const AffineAction& act, const SeminormSpec& q);

struct FixedPointSearch {
  std::optional<Vector> point;  ///< lexicographically smallest common fixed point
  LPSolution lp;                ///< certificate when none exists
};

/// Carrier membership plus (A_s - I) x = -b_s for every s, in the carrier's
/// variables (x = carrier().to_point() * vars).
LPProblem fixed_point_problem(const AffineAction& act);

/// Exact common fixed point in C. Requires axiom and invariance verified.
FixedPointSearch search_common_fixed_point(const AffineAction& act);
std::optional<Vector> find_common_fixed_point(const AffineAction& act);

/// Exact l_inf distance from x to the set of common fixed points in C;
/// empty when that set is empty.
std::optional<Rational> distance_to_fixed_points(const AffineAction& act,
                                                 std::span<const Rational> x);

/// phi -> M_s^T phi on the simplex of means.
AffineAction canonical_means_action(const Semihypergroup& k);

/// f(x) = coefficients . x + constant.
struct AffineFunctional {
  Vector coefficients;
  Rational constant;
  Rational operator()(std::span<const Rational> x) const;
};

/// s -> f(T_s y). Throws NotInCarrier when y is outside C.
KFunction induced_function(const AffineAction& act, std::span<const Rational> y,
                           const AffineFunctional& f);

/// f o T_s, again affine.
AffineFunctional compose(const AffineFunctional& f, const AffineMap& t);

/// The dual action on the trace-zero functionals {u : sum u = 0}.
struct DualActionInstance {
  Semihypergroup structure;
  Index base;                    ///< y0; v0 is evaluation at y0
  Vector v0;
  std::vector<AffineMap> maps;   ///< T_s u = M_s^T u + (M_s^T v0 - v0)

  Vector apply(Index s, std::span<const Rational> u) const { return maps.at(s)(u); }
};

/// Builds the instance and checks the action identity exactly (throws
/// std::logic_error if it fails, which cannot happen for a verified k).
DualActionInstance dual_banach_action(const Semihypergroup& k, Index base = 0);

/// The action identity T_s(T_t u) = sum_z (p_s*p_t)(z) T_z(u) as matrices,
/// plus T_e = id when k has an identity.
ActionAxiomReport check_dual_action_identity(const DualActionInstance& d);

struct OrbitBound {
  Rational largest;  ///< max_s ||T_s u0||_1
  Rational bound;    ///< ||u0 + v0||_1 + ||v0||_1
  bool holds() const { return largest <= bound; }
};

/// Throws std::invalid_argument unless u0 has trace zero.
OrbitBound orbit_bound(const DualActionInstance& d, std::span<const Rational> u0);

struct DualMeanSearch {
  bool consistent = false;   ///< the linear system T_s w = w has a trace-zero solution
  LinearSolution fixed;      ///< its solution set
  std::optional<Mean> mean;  ///< m0 = w0 + v0, lexicographically smallest
  Vector w0;
  LPSolution lp;
};

DualMeanSearch search_lim_via_dual_action(const Semihypergroup& k, Index base = 0);
std::optional<Mean> lim_via_dual_action(const Semihypergroup& k, Index base = 0);

}  // namespace shg
