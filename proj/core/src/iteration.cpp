#include "shg/iteration.hpp"

#include <cmath>
#include <stdexcept>

#include "shg/errors.hpp"

namespace shg {

namespace {

double residual_of(const std::vector<PointMap>& maps, std::span<const double> x) {
  double r = 0;
  for (const auto& t : maps) {
    const auto y = t(x);
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - x[i]));
  }
  return r;
}

}  // namespace

IterationResult iterate_fixed_point(const std::vector<PointMap>& maps, std::vector<double> start,
                                    const std::vector<double>& weights, double tol,
                                    std::size_t max_iter) {
  if (maps.empty()) throw std::invalid_argument("iterate_fixed_point: no maps");
  if (!(tol > 0)) throw std::invalid_argument("iterate_fixed_point: tol must be positive");
  std::vector<double> w = weights;
  if (w.empty()) w.assign(maps.size(), 1.0 / static_cast<double>(maps.size()));
  if (w.size() != maps.size()) throw DimensionMismatch("iterate_fixed_point: one weight per map");
  double total = 0;
  for (double v : w) {
    if (v < 0) throw std::invalid_argument("iterate_fixed_point: negative weight");
    total += v;
  }
  if (std::abs(total - 1) > 1e-12) throw std::invalid_argument("iterate_fixed_point: weights must sum to 1");

  IterationResult best{false, start, residual_of(maps, start), 0};
  std::vector<double> x = std::move(start);
  for (std::size_t it = 0; it < max_iter; ++it) {
    if (best.residual <= tol) break;
    std::vector<double> next(x.size());
    for (std::size_t s = 0; s < maps.size(); ++s) {
      if (w[s] == 0) continue;
      const auto y = maps[s](x);
      for (std::size_t i = 0; i < x.size(); ++i) next[i] += w[s] * y[i];
    }
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5 * x[i] + 0.5 * next[i];
    const double r = residual_of(maps, x);
    if (r < best.residual || r <= tol) best = {false, x, r, it + 1};
    else best.iterations = it + 1;
  }
  best.converged = best.residual <= tol;
  return best;
}

PointMap to_point_map(const AffineMap& t) {
  const std::size_t d = t.dimension();
  std::vector<double> a(d * d), b(d);
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = to_double(t.b[i]);
    for (std::size_t j = 0; j < d; ++j) a[i * d + j] = to_double(t.a(i, j));
  }
  return [a = std::move(a), b = std::move(b), d](std::span<const double> x) {
    std::vector<double> y = b;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) y[i] += a[i * d + j] * x[j];
    return y;
  };
}

IterationResult iterate_fixed_point(const AffineAction& act, double tol, std::size_t max_iter,
                                    const std::optional<Mean>& weights,
                                    std::optional<std::vector<double>> start) {
  std::vector<PointMap> maps;
  for (const auto& t : act.maps()) maps.push_back(to_point_map(t));
  std::vector<double> w;
  if (weights) {
    if (weights->size() != maps.size()) throw DimensionMismatch("iterate_fixed_point: weights size");
    for (Index s = 0; s < weights->size(); ++s) w.push_back(to_double((*weights)[s]));
  }
  std::vector<double> x0;
  if (start) {
    x0 = std::move(*start);
    if (x0.size() != act.dimension()) throw DimensionMismatch("iterate_fixed_point: start size");
  } else {
    for (const auto& v : act.carrier().barycenter()) x0.push_back(to_double(v));
  }
  return iterate_fixed_point(maps, std::move(x0), w, tol, max_iter);
}

}  // namespace shg
