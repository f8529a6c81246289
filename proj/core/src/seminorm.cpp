#include "shg/seminorm.hpp"

#include <functional>
#include <stdexcept>

#include "shg/errors.hpp"
#include "shg/lp.hpp"

namespace shg {

SeminormKind parse_seminorm_kind(std::string_view name) {
  if (name == "l1") return SeminormKind::weighted_l1;
  if (name == "linf") return SeminormKind::weighted_linf;
  throw UnsupportedSeminorm("unsupported seminorm '" + std::string(name) + "' (expected l1 or linf)");
}

std::string to_string(SeminormKind kind) {
  return kind == SeminormKind::weighted_l1 ? "l1" : "linf";
}

Seminorm Seminorm::l1(std::size_t d) { return {SeminormKind::weighted_l1, Vector(d, Rational(1))}; }
Seminorm Seminorm::linf(std::size_t d) { return {SeminormKind::weighted_linf, Vector(d, Rational(1))}; }

Rational Seminorm::operator()(std::span<const Rational> x) const {
  if (x.size() != weights.size()) throw DimensionMismatch("seminorm applied to wrong dimension");
  Rational r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational term = weights[i] * abs(x[i]);
    if (kind == SeminormKind::weighted_l1)
      r += term;
    else if (term > r)
      r = term;
  }
  return r;
}

std::string Seminorm::name() const {
  for (const auto& w : weights)
    if (w != 1) return "weighted-" + to_string(kind);
  return to_string(kind);
}

void SeminormSpec::validate(std::size_t dimension) const {
  for (const auto& p : seminorms) {
    if (p.weights.size() != dimension)
      throw std::invalid_argument("seminorm weight count != carrier dimension");
    for (const auto& w : p.weights)
      if (w < 0) throw std::invalid_argument("seminorm weights must be nonnegative");
  }
}

SeminormSpec SeminormSpec::standard(std::size_t d) {
  return {{Seminorm::l1(d), Seminorm::linf(d)}};
}

namespace {

Matrix columns_to_matrix(const std::vector<Vector>& cols, std::size_t d) {
  Matrix m(d, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != d) throw DimensionMismatch("span basis vector of wrong dimension");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

void for_each_subset(std::size_t m, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == size) {
      visit(pick);
      return;
    }
    for (std::size_t i = from; i + (size - pick.size()) <= m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// Weighted l1: the unit ball of p restricted to the span is a polytope whose
// vertices are the elementary vectors (minimal supports) of the projected
// span, so the supremum is the largest ratio over those vectors.
Rational l1_over_circuits(const Matrix& a, const Matrix& b, const Matrix& bp,
                          const Seminorm& p) {
  const std::size_t m = bp.rows();
  // U = range(bp) = ker(c), with c the annihilator of U
  const std::vector<Vector> ann = nullspace(bp.transpose());
  const std::size_t q = ann.size();
  Matrix c(q, m);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = ann[i][j];

  Rational best = 0;
  for (std::size_t size = 1; size <= std::min(m, q + 1); ++size)
    for_each_subset(m, size, [&](const std::vector<std::size_t>& support) {
      Matrix sub(q, support.size());
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < support.size(); ++k) sub(i, k) = c(i, support[k]);
      const auto ns = nullspace(sub);
      if (ns.size() != 1) return;
      Vector u(m);
      for (std::size_t k = 0; k < support.size(); ++k) {
        if (ns[0][k] == 0) return;
        u[support[k]] = ns[0][k];
      }
      const LinearSolution t = solve_linear(bp, u);
      if (!t.consistent) throw std::logic_error("circuit outside the projected span");
      const Vector x = b * t.particular;
      Rational ratio = p(a * x) / p(x);
      if (ratio > best) best = std::move(ratio);
    });
  return best;
}

// Weighted l_inf: maximise +-w_j (a b t)_j over the section of the p-ball.
std::optional<Rational> linf_by_lp(const Matrix& a, const Matrix& b,
                                   const std::vector<std::size_t>& pos, const Seminorm& p) {
  const std::size_t k = b.cols(), np = pos.size();
  const std::size_t vars = k + 2 * np;
  LPProblem lp;
  lp.a = Matrix(2 * np, vars);
  lp.b = Vector(2 * np, Rational(1));
  lp.nonnegative.assign(vars, true);
  for (std::size_t j = 0; j < k; ++j) lp.nonnegative[j] = false;
  for (std::size_t r = 0; r < np; ++r) {
    const std::size_t i = pos[r];
    for (std::size_t j = 0; j < k; ++j) {
      lp.a(2 * r, j) = p.weights[i] * b(i, j);
      lp.a(2 * r + 1, j) = -p.weights[i] * b(i, j);
    }
    lp.a(2 * r, k + 2 * r) = 1;
    lp.a(2 * r + 1, k + 2 * r + 1) = 1;
  }
  const Matrix ab = a * b;
  Rational best = 0;
  for (std::size_t out = 0; out < ab.rows(); ++out) {
    if (p.weights[out] == 0) continue;
    for (int sign : {1, -1}) {
      Vector obj(vars);
      for (std::size_t j = 0; j < k; ++j) obj[j] = -sign * p.weights[out] * ab(out, j);
      const LPSolution s = minimize(lp, obj);
      if (s.status == LPStatus::unbounded) return std::nullopt;
      if (s.status == LPStatus::infeasible) throw std::logic_error("empty unit-ball section");
      Rational v = -s.value;
      if (v > best) best = std::move(v);
    }
  }
  return best;
}

}  // namespace

std::optional<Rational> restricted_operator_seminorm(const Matrix& a,
                                                     const std::vector<Vector>& basis,
                                                     const Seminorm& p) {
  const std::size_t d = p.weights.size();
  if (a.rows() != d || a.cols() != d) throw DimensionMismatch("operator and seminorm dimensions differ");
  if (basis.empty()) return Rational(0);
  const Matrix b = columns_to_matrix(basis, d);

  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < d; ++i)
    if (p.weights[i] > 0) pos.push_back(i);
  const Matrix bp = select_rows(b, pos);

  // directions of the span on which p vanishes must be mapped into ker p
  for (const auto& t : nullspace(bp))
    if (p(a * (b * t)) != 0) return std::nullopt;
  if (pos.empty()) return Rational(0);

  if (p.kind == SeminormKind::weighted_l1) return l1_over_circuits(a, b, bp, p);
  return linf_by_lp(a, b, pos, p);
}

std::optional<Rational> ambient_operator_seminorm(const Matrix& a, const Seminorm& p) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < a.cols(); ++i) basis.push_back(unit(a.cols(), i));
  return restricted_operator_seminorm(a, basis, p);
}

}  // namespace shg
