#pragma once

// Floating-point heuristic for common fixed points:
//   x <- (1/2) x + (1/2) sum_s w_s T_s(x)
// run until max_s ||T_s x - x||_inf <= tol. It is a diagnostic only; the exact
// answer comes from find_common_fixed_point.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shg/actions.hpp"

namespace shg {

using PointMap = std::function<std::vector<double>(std::span<const double>)>;

struct IterationResult {
  bool converged = false;
  std::vector<double> point;  ///< last iterate, or the best one seen when not converged
  double residual = 0;        ///< max_s ||T_s x - x||_inf at point
  std::size_t iterations = 0;
};

/// weights default to uniform; they must be nonnegative and sum to 1.
IterationResult iterate_fixed_point(const std::vector<PointMap>& maps, std::vector<double> start,
                                    const std::vector<double>& weights, double tol,
                                    std::size_t max_iter);

/// Starts from the carrier barycenter unless start is given; weights default
/// to uniform over the points of the structure.
IterationResult iterate_fixed_point(const AffineAction& act, double tol, std::size_t max_iter,
                                    const std::optional<Mean>& weights = std::nullopt,
                                    std::optional<std::vector<double>> start = std::nullopt);

/// The double-precision version of an exact affine map.
PointMap to_point_map(const AffineMap& t);

}  // namespace shg
