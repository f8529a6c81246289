#pragma once

// Exact two-phase primal simplex over the rationals with Bland's rule.
//
// Problems are in equality form: A x = b, with a per-variable flag marking
// x_j >= 0. Free variables are split internally into a difference of two
// nonnegative columns. Infeasibility is always returned with a Farkas
// certificate y (y^T A >= 0 on nonnegative columns, y^T A = 0 on free
// columns, y^T b < 0) that has been checked exactly.

#include <optional>
#include <span>
#include <vector>

#include "shg/linalg.hpp"

namespace shg {

struct LPProblem {
  Matrix a;
  Vector b;
  std::vector<bool> nonnegative;  ///< one flag per column of a

  std::size_t variables() const noexcept { return a.cols(); }
  std::size_t constraints() const noexcept { return a.rows(); }

  /// All variables nonnegative.
  static LPProblem standard(Matrix a, Vector b);
  /// Appends the equality row . x = rhs.
  void add_equality(std::span<const Rational> row, const Rational& rhs);
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Vector point;        ///< optimal (or, for feasibility runs, feasible) vertex
  Rational value;      ///< objective value at point
  Vector certificate;  ///< Farkas vector when infeasible
  std::size_t pivots = 0;

  bool feasible() const noexcept { return status != LPStatus::infeasible; }
};

/// Throws DimensionMismatch on inconsistent sizes.
void validate(const LPProblem& p);

/// Exact residual test: A x = b and the sign constraints.
bool satisfies(const LPProblem& p, std::span<const Rational> x);

/// Checks y^T A >= 0 (= 0 on free columns) and y^T b < 0 exactly.
bool is_farkas_certificate(const LPProblem& p, std::span<const Rational> y);

/// Phase 1 only. On success point is a basic feasible solution.
LPSolution solve_lp_feasibility(const LPProblem& p);

/// min objective . x. status is unbounded when the objective decreases without
/// limit along a feasible ray (point then holds the last vertex).
LPSolution minimize(const LPProblem& p, std::span<const Rational> objective);

/// Minimises objectives[0], then objectives[1] over the optimal face, and so
/// on. With the coordinate objectives e_0..e_{n-1} this yields the
/// lexicographically smallest feasible point, which is a vertex. Unbounded
/// stages throw std::domain_error.
LPSolution lexicographic_minimum(const LPProblem& p, const std::vector<Vector>& objectives);

/// Objectives e_0, ..., e_{n-1}.
std::vector<Vector> coordinate_objectives(std::size_t n);

}  // namespace shg
