#include "shg/amenability.hpp"

#include <stdexcept>

#include "shg/errors.hpp"

namespace shg {

Mean::Mean(Measure w) : w_(std::move(w)) {
  if (!w_.is_probability()) throw std::invalid_argument("a mean must be a probability vector");
}

Rational Mean::operator()(const KFunction& f) const {
  if (f.size() != w_.size()) throw DimensionMismatch("mean applied to function of wrong length");
  return dot(w_.weights(), f.values());
}

namespace {

Matrix translation(Index s, const Semihypergroup& k, Side side) {
  return side == Side::left ? translation_matrix(s, k).m : right_translation_matrix(s, k).m;
}

InvarianceReport verify_invariance(const Mean& m, const Semihypergroup& k, Side side) {
  if (m.size() != k.size()) throw DimensionMismatch("mean length != number of points");
  InvarianceReport report;
  const std::size_t n = k.size();
  for (Index s = 0; s < n; ++s) {
    for (Index y = 0; y < n; ++y) {
      // m(T_s 1_y) = sum_x m(x) T[x][y]; read from the table so that
      // unverified structures can be checked too
      Rational moved = 0;
      for (Index x = 0; x < n; ++x)
        moved += m[x] * (side == Side::left ? k.product(s, x) : k.product(x, s))[y];
      if (moved != m[y]) {
        report.passed = false;
        report.s = s;
        report.y = y;
        report.translated = moved;
        report.original = m[y];
        return report;
      }
    }
  }
  return report;
}

}  // namespace

LPProblem invariant_mean_problem(const Semihypergroup& k, Side side) {
  k.require_verified("invariant_mean_problem");
  const std::size_t n = k.size();
  Matrix a(n * n + 1, n);
  for (Index s = 0; s < n; ++s) {
    const Matrix t = translation(s, k, side);
    for (Index y = 0; y < n; ++y) {
      // sum_x m(x) T[x][y] - m(y) = 0
      for (Index x = 0; x < n; ++x) a(s * n + y, x) = t(x, y);
      a(s * n + y, y) -= 1;
    }
  }
  for (Index x = 0; x < n; ++x) a(n * n, x) = 1;
  Vector b(n * n + 1);
  b[n * n] = 1;
  return LPProblem::standard(std::move(a), std::move(b));
}

MeanSearch search_invariant_mean(const Semihypergroup& k, Side side) {
  const LPProblem p = invariant_mean_problem(k, side);
  MeanSearch out;
  out.lp = lexicographic_minimum(p, coordinate_objectives(k.size()));
  if (out.lp.feasible()) out.mean = Mean(Measure(out.lp.point));
  return out;
}

std::optional<Mean> find_LIM(const Semihypergroup& k) {
  return search_invariant_mean(k, Side::left).mean;
}

std::optional<Mean> find_RIM(const Semihypergroup& k) {
  return search_invariant_mean(k, Side::right).mean;
}

bool is_left_amenable_AP(const Semihypergroup& k) { return find_LIM(k).has_value(); }

InvarianceReport verify_LIM(const Mean& m, const Semihypergroup& k) {
  return verify_invariance(m, k, Side::left);
}

InvarianceReport verify_RIM(const Mean& m, const Semihypergroup& k) {
  return verify_invariance(m, k, Side::right);
}

}  // namespace shg
