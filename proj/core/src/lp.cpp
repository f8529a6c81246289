#include "shg/lp.hpp"

#include <stdexcept>

#include "shg/errors.hpp"

namespace shg {

LPProblem LPProblem::standard(Matrix a, Vector b) {
  LPProblem p{std::move(a), std::move(b), {}};
  p.nonnegative.assign(p.a.cols(), true);
  return p;
}

void LPProblem::add_equality(std::span<const Rational> row, const Rational& rhs) {
  if (row.size() != a.cols()) throw DimensionMismatch("add_equality: row length != variables");
  Matrix grown(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) grown(i, j) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) grown(a.rows(), j) = row[j];
  a = std::move(grown);
  b.push_back(rhs);
}

void validate(const LPProblem& p) {
  if (p.b.size() != p.a.rows()) throw DimensionMismatch("LP: rhs length != constraint rows");
  if (p.nonnegative.size() != p.a.cols())
    throw DimensionMismatch("LP: sign flags length != variables");
}

bool satisfies(const LPProblem& p, std::span<const Rational> x) {
  if (x.size() != p.variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (p.nonnegative[j] && x[j] < 0) return false;
  const Vector ax = p.a * x;
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != p.b[i]) return false;
  return true;
}

bool is_farkas_certificate(const LPProblem& p, std::span<const Rational> y) {
  if (y.size() != p.constraints()) return false;
  for (std::size_t j = 0; j < p.variables(); ++j) {
    Rational c = 0;
    for (std::size_t i = 0; i < p.constraints(); ++i) c += y[i] * p.a(i, j);
    if (p.nonnegative[j] ? c < 0 : c != 0) return false;
  }
  return dot(y, p.b) < 0;
}

namespace {

// Dense tableau for  min c.x  s.t.  A x = b, x >= 0, b >= 0.
//
// Columns 0..n-1 are structural (free variables already split), columns
// n..n+m-1 are the phase-one artificials, column `rhs` holds the basic values.
class Tableau {
 public:
  Tableau(const LPProblem& p) : m_(p.constraints()) {
    // column map: structural column k reads original variable var_[k] with sign sign_[k]
    for (std::size_t j = 0; j < p.variables(); ++j) {
      var_.push_back(j);
      sign_.push_back(1);
      if (!p.nonnegative[j]) {
        var_.push_back(j);
        sign_.push_back(-1);
      }
    }
    n_ = var_.size();
    rhs_ = n_ + m_;
    t_ = Matrix(m_, rhs_ + 1);
    row_sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.b[i] < 0) row_sign_[i] = -1;
      for (std::size_t k = 0; k < n_; ++k) t_(i, k) = row_sign_[i] * sign_[k] * p.a(i, var_[k]);
      t_(i, n_ + i) = 1;
      t_(i, rhs_) = row_sign_[i] * p.b[i];
      basis_.push_back(n_ + i);
    }
    active_.assign(rhs_, true);
  }

  // Phase one: minimise the sum of artificials. Returns the optimal value.
  Rational phase_one() {
    Vector cost(rhs_);
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
    set_objective(cost);
    run();
    return objective_value();
  }

  // Farkas vector in terms of the caller's rows (only meaningful after an
  // infeasible phase one).
  Vector farkas() const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational dual = 1 - reduced_[n_ + i];  // y_i of the sign-normalised system
      y[i] = -dual * row_sign_[i];
    }
    return y;
  }

  // Removes artificials from the basis (or drops redundant rows) and
  // disables every artificial column.
  void drop_artificials() {
    for (std::size_t r = 0; r < m_;) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::size_t enter = n_;
      for (std::size_t k = 0; k < n_; ++k)
        if (t_(r, k) != 0) {
          enter = k;
          break;
        }
      if (enter < n_) {
        pivot(r, enter);
        ++r;
      } else {
        remove_row(r);
      }
    }
    for (std::size_t i = n_; i < rhs_; ++i) active_[i] = false;
  }

  // Returns false when unbounded.
  bool phase_two(std::span<const Rational> objective) {
    Vector cost(rhs_);
    for (std::size_t k = 0; k < n_; ++k) cost[k] = sign_[k] * objective[var_[k]];
    set_objective(cost);
    return run();
  }

  Vector point(std::size_t variables) const {
    Vector x(variables);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[var_[basis_[r]]] += sign_[basis_[r]] * t_(r, rhs_);
    return x;
  }

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  void set_objective(const Vector& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < rhs_; ++k) reduced_[k] -= cb * t_(r, k);
    }
  }

  Rational objective_value() const {
    Rational z = 0;
    for (std::size_t r = 0; r < m_; ++r) z += cost_[basis_[r]] * t_(r, rhs_);
    return z;
  }

  // Bland's rule: lowest-index improving column, lowest-index leaving
  // variable among ratio-test ties.
  bool run() {
    for (;;) {
      std::size_t enter = rhs_;
      for (std::size_t k = 0; k < rhs_; ++k)
        if (active_[k] && reduced_[k] < 0) {
          enter = k;
          break;
        }
      if (enter == rhs_) return true;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (t_(r, enter) <= 0) continue;
        Rational ratio = t_(r, rhs_) / t_(r, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational inv = 1 / t_(r, c);
    for (std::size_t k = 0; k <= rhs_; ++k) t_(r, k) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (std::size_t k = 0; k <= rhs_; ++k) t_(i, k) -= f * t_(r, k);
    }
    if (!reduced_.empty() && reduced_[c] != 0) {
      const Rational f = reduced_[c];
      for (std::size_t k = 0; k < rhs_; ++k) reduced_[k] -= f * t_(r, k);
    }
    basis_[r] = c;
  }

  void remove_row(std::size_t r) {
    Matrix smaller(m_ - 1, rhs_ + 1);
    for (std::size_t i = 0, out = 0; i < m_; ++i) {
      if (i == r) continue;
      for (std::size_t k = 0; k <= rhs_; ++k) smaller(out, k) = t_(i, k);
      ++out;
    }
    t_ = std::move(smaller);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  std::size_t m_;
  std::size_t n_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::size_t> var_;
  std::vector<int> sign_;
  std::vector<int> row_sign_;
  Matrix t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  Vector cost_;
  Vector reduced_;
  std::size_t pivots_ = 0;
};

void check_witness(const LPProblem& p, const Vector& x) {
  if (!satisfies(p, x)) throw std::logic_error("simplex produced a point violating the constraints");
}

// Drops every row of [A | b] that is a combination of earlier rows. The
// reduced system has the same solutions, and a certificate for it becomes a
// certificate for the original by putting zero on the dropped rows. The
// translation-matrix systems repeat rows heavily (n^2 + 1 rows of rank <= n),
// so this keeps the tableau small.
struct Presolved {
  LPProblem p;
  std::vector<std::size_t> kept;
  bool reduced = false;

  Vector lift(const Vector& y, std::size_t rows) const {
    if (!reduced) return y;
    Vector out(rows);
    for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = y[i];
    return out;
  }
};

Presolved presolve(const LPProblem& p) {
  const std::size_t cols = p.variables() + 1;
  std::vector<Vector> echelon;  // reduced rows, each with a distinct leading column
  std::vector<std::size_t> lead;
  Presolved out;
  for (std::size_t i = 0; i < p.constraints(); ++i) {
    Vector r(cols);
    for (std::size_t j = 0; j + 1 < cols; ++j) r[j] = p.a(i, j);
    r[cols - 1] = p.b[i];
    for (std::size_t e = 0; e < echelon.size(); ++e)
      if (r[lead[e]] != 0) axpy(r, -r[lead[e]] / echelon[e][lead[e]], echelon[e]);
    std::size_t c = 0;
    while (c < cols && r[c] == 0) ++c;
    if (c == cols) continue;
    echelon.push_back(std::move(r));
    lead.push_back(c);
    out.kept.push_back(i);
  }
  if (out.kept.size() == p.constraints()) {
    out.p = p;
    return out;
  }
  out.reduced = true;
  out.p.a = Matrix(out.kept.size(), p.variables());
  for (std::size_t i = 0; i < out.kept.size(); ++i) {
    for (std::size_t j = 0; j < p.variables(); ++j) out.p.a(i, j) = p.a(out.kept[i], j);
    out.p.b.push_back(p.b[out.kept[i]]);
  }
  out.p.nonnegative = p.nonnegative;
  return out;
}

LPSolution infeasible(const LPProblem& p, const Presolved& q, const Tableau& t) {
  LPSolution s;
  s.status = LPStatus::infeasible;
  s.certificate = q.lift(t.farkas(), p.constraints());
  s.pivots = t.pivots();
  if (!is_farkas_certificate(p, s.certificate))
    throw std::logic_error("simplex produced an invalid infeasibility certificate");
  return s;
}

}  // namespace

LPSolution solve_lp_feasibility(const LPProblem& p) {
  validate(p);
  const Presolved q = presolve(p);
  Tableau t(q.p);
  if (t.phase_one() != 0) return infeasible(p, q, t);
  LPSolution s;
  s.status = LPStatus::optimal;
  s.point = t.point(p.variables());
  s.value = 0;
  s.pivots = t.pivots();
  check_witness(p, s.point);
  return s;
}

LPSolution minimize(const LPProblem& p, std::span<const Rational> objective) {
  validate(p);
  if (objective.size() != p.variables())
    throw DimensionMismatch("minimize: objective length != variables");
  const Presolved q = presolve(p);
  Tableau t(q.p);
  if (t.phase_one() != 0) return infeasible(p, q, t);
  t.drop_artificials();
  const bool bounded = t.phase_two(objective);
  LPSolution s;
  s.status = bounded ? LPStatus::optimal : LPStatus::unbounded;
  s.point = t.point(p.variables());
  s.value = dot(objective, s.point);
  s.pivots = t.pivots();
  check_witness(p, s.point);
  return s;
}

LPSolution lexicographic_minimum(const LPProblem& p, const std::vector<Vector>& objectives) {
  if (objectives.empty()) return solve_lp_feasibility(p);
  LPProblem stage = p;
  LPSolution s;
  std::size_t pivots = 0;
  for (const auto& c : objectives) {
    s = minimize(stage, c);
    pivots += s.pivots;
    if (s.status == LPStatus::infeasible) {
      // Only the first stage can be infeasible: later stages add a face of a
      // nonempty set. Report the certificate against the caller's problem.
      s.pivots = pivots;
      return s;
    }
    if (s.status == LPStatus::unbounded)
      throw std::domain_error("lexicographic_minimum: objective unbounded below");
    stage.add_equality(c, s.value);
  }
  s.pivots = pivots;
  return s;
}

std::vector<Vector> coordinate_objectives(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit(n, i));
  return out;
}

}  // namespace shg
