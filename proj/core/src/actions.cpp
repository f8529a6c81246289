#include "shg/actions.hpp"

#include <algorithm>
#include <stdexcept>

#include "shg/errors.hpp"

namespace shg {

// ---------------------------------------------------------------------------
// Carrier

ConvexCarrier::ConvexCarrier(Kind kind, std::size_t dim, std::vector<Vector> gen)
    : kind_(kind), dim_(dim), gen_(std::move(gen)) {
  to_point_ = Matrix(dim_, gen_.size());
  for (std::size_t j = 0; j < gen_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) to_point_(i, j) = gen_[j][i];
}

ConvexCarrier ConvexCarrier::simplex(std::size_t d) {
  if (d == 0) throw std::invalid_argument("simplex dimension must be positive");
  std::vector<Vector> vertices;
  for (std::size_t i = 0; i < d; ++i) vertices.push_back(unit(d, i));
  return ConvexCarrier(Kind::simplex, d, std::move(vertices));
}

ConvexCarrier ConvexCarrier::hull(std::vector<Vector> points) {
  if (points.empty()) throw std::invalid_argument("hull carrier needs at least one point");
  const std::size_t d = points.front().size();
  if (d == 0) throw std::invalid_argument("hull points must have positive dimension");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw DimensionMismatch("hull points of different dimension");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("hull points must be distinct");
  }
  return ConvexCarrier(Kind::hull, d, std::move(points));
}

LPProblem ConvexCarrier::membership_system() const {
  // one row: the variables (simplex coordinates or barycentric weights) sum to one
  Matrix a(1, gen_.size());
  for (std::size_t j = 0; j < gen_.size(); ++j) a(0, j) = 1;
  return LPProblem::standard(std::move(a), Vector{Rational(1)});
}

bool ConvexCarrier::contains(std::span<const Rational> x) const {
  if (x.size() != dim_) return false;
  if (kind_ == Kind::simplex)
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; }) &&
           sum(x) == 1;
  LPProblem p = membership_system();
  for (std::size_t i = 0; i < dim_; ++i) p.add_equality(to_point_.row(i), x[i]);
  return solve_lp_feasibility(p).feasible();
}

Vector ConvexCarrier::barycenter() const {
  Vector c(dim_);
  for (const auto& g : gen_) axpy(c, 1, g);
  return scale(c, Rational(1, static_cast<unsigned long>(gen_.size())));
}

std::vector<Vector> ConvexCarrier::difference_basis() const {
  std::vector<Vector> diffs;
  for (std::size_t j = 1; j < gen_.size(); ++j) diffs.push_back(subtract(gen_[j], gen_[0]));
  return independent_subset(diffs);
}

// ---------------------------------------------------------------------------
// Affine maps and actions

AffineMap AffineMap::identity(std::size_t d) { return {Matrix::identity(d), Vector(d)}; }

AffineMap AffineMap::constant(Vector c) {
  const std::size_t d = c.size();
  return {Matrix(d, d), std::move(c)};
}

Vector AffineMap::operator()(std::span<const Rational> x) const { return add(a * x, b); }

AffineAction::AffineAction(Semihypergroup k, ConvexCarrier carrier, std::vector<AffineMap> maps)
    : k_(std::move(k)), carrier_(std::move(carrier)), maps_(std::move(maps)) {
  k_.require_verified("AffineAction");
  if (maps_.size() != k_.size()) throw DimensionMismatch("action needs exactly one map per point");
  const std::size_t d = carrier_.dimension();
  for (const auto& m : maps_)
    if (m.a.rows() != d || m.a.cols() != d || m.b.size() != d)
      throw DimensionMismatch("affine map dimension != carrier dimension");
}

namespace {

// Linear and offset parts of sum_z c(z) T_z.
std::pair<Matrix, Vector> mix(const std::vector<AffineMap>& maps, const Measure& c, std::size_t d) {
  Matrix a(d, d);
  Vector b(d);
  for (Index z = 0; z < c.size(); ++z) {
    if (c[z] == 0) continue;
    a += c[z] * maps[z].a;
    axpy(b, c[z], maps[z].b);
  }
  return {std::move(a), std::move(b)};
}

ActionAxiomReport check_axiom(const Semihypergroup& k, const std::vector<AffineMap>& maps,
                              std::size_t d) {
  ActionAxiomReport r;
  if (auto e = k.identity(); e && !(maps[*e] == AffineMap::identity(d))) {
    r.passed = false;
    r.witness = std::pair{*e, *e};
    r.reason = "identity acts non-trivially";
    return r;
  }
  for (Index s = 0; s < k.size(); ++s)
    for (Index t = 0; t < k.size(); ++t) {
      const auto [a, b] = mix(maps, k.product(s, t), d);
      const char* failure = nullptr;
      if (maps[s].a * maps[t].a != a)
        failure = "linear part";
      else if (add(maps[s].a * maps[t].b, maps[s].b) != b)
        failure = "offset part";
      if (failure) {
        r.passed = false;
        r.witness = std::pair{s, t};
        r.reason = failure;
        return r;
      }
    }
  return r;
}

}  // namespace

ActionAxiomReport check_action_axiom(const AffineAction& act) {
  return check_axiom(act.structure(), act.maps(), act.dimension());
}

CarrierInvarianceReport check_invariance(const AffineAction& act) {
  CarrierInvarianceReport r;
  const auto& gens = act.carrier().generators();
  for (Index s = 0; s < act.structure().size(); ++s)
    for (Index g = 0; g < gens.size(); ++g) {
      Vector image = act.apply(s, gens[g]);
      if (!act.carrier().contains(image)) {
        r.passed = false;
        r.s = s;
        r.generator = g;
        r.image = std::move(image);
        return r;
      }
    }
  return r;
}

ActionVerification verify(AffineAction& act) {
  ActionVerification v{check_action_axiom(act), check_invariance(act)};
  act.axiom_verified_ = v.axiom.passed;
  act.invariance_verified_ = v.invariance.passed;
  return v;
}

// ---------------------------------------------------------------------------
// Norms

std::vector<OperatorNormEntry> operator_norms(const AffineAction& act, const SeminormSpec& q) {
  q.validate(act.dimension());
  const auto basis = act.carrier().difference_basis();
  std::vector<OperatorNormEntry> out;
  for (std::size_t p = 0; p < q.seminorms.size(); ++p)
    for (Index s = 0; s < act.structure().size(); ++s)
      out.push_back({p, s, restricted_operator_seminorm(act.map(s).a, basis, q.seminorms[p]),
                     ambient_operator_seminorm(act.map(s).a, q.seminorms[p])});
  return out;
}

std::optional<Rational> equicontinuity_bound(const AffineAction& act, const SeminormSpec& q) {
  Rational best = 0;
  for (const auto& e : operator_norms(act, q)) {
    if (!e.restricted) return std::nullopt;
    if (*e.restricted > best) best = *e.restricted;
  }
  return best;
}

NonexpansiveReport check_nonexpansive(const AffineAction& act, const SeminormSpec& q) {
  NonexpansiveReport r;
  r.norms = operator_norms(act, q);
  for (const auto& e : r.norms)
    if (!e.restricted || *e.restricted > 1) {
      r.passed = false;
      r.offending = e;
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Fixed points

LPProblem fixed_point_problem(const AffineAction& act) {
  const auto& carrier = act.carrier();
  const Matrix& v = carrier.to_point();
  const std::size_t d = act.dimension();
  LPProblem p = carrier.membership_system();
  for (Index s = 0; s < act.structure().size(); ++s) {
    const Matrix lin = (act.map(s).a - Matrix::identity(d)) * v;
    for (std::size_t i = 0; i < d; ++i) p.add_equality(lin.row(i), -act.map(s).b[i]);
  }
  return p;
}

namespace {

void require_verified_action(const AffineAction& act, const char* op) {
  if (!act.axiom_verified() || !act.invariance_verified())
    throw PreconditionError(std::string(op) +
                            ": action axiom and carrier invariance must be verified first");
}

}  // namespace

FixedPointSearch search_common_fixed_point(const AffineAction& act) {
  require_verified_action(act, "find_common_fixed_point");
  const LPProblem p = fixed_point_problem(act);
  const Matrix& v = act.carrier().to_point();
  std::vector<Vector> objectives;
  for (std::size_t i = 0; i < v.rows(); ++i) objectives.push_back(v.row_vector(i));
  FixedPointSearch out;
  out.lp = lexicographic_minimum(p, objectives);
  if (out.lp.feasible()) out.point = v * out.lp.point;
  return out;
}

std::optional<Vector> find_common_fixed_point(const AffineAction& act) {
  return search_common_fixed_point(act).point;
}

std::optional<Rational> distance_to_fixed_points(const AffineAction& act,
                                                 std::span<const Rational> x) {
  require_verified_action(act, "distance_to_fixed_points");
  const std::size_t d = act.dimension();
  if (x.size() != d) throw DimensionMismatch("distance_to_fixed_points: wrong dimension");
  const LPProblem base = fixed_point_problem(act);
  const Matrix& v = act.carrier().to_point();
  const std::size_t nv = base.variables();

  // variables: carrier vars | t | 2d slacks;  for each i:
  //   (V vars)_i + t - s1_i = x_i   and   -(V vars)_i + t - s2_i = -x_i
  const std::size_t vars = nv + 1 + 2 * d;
  LPProblem p;
  p.a = Matrix(base.constraints() + 2 * d, vars);
  p.b = Vector(base.constraints() + 2 * d);
  p.nonnegative = std::vector<bool>(vars, true);
  for (std::size_t j = 0; j < nv; ++j) p.nonnegative[j] = base.nonnegative[j];
  for (std::size_t r = 0; r < base.constraints(); ++r) {
    for (std::size_t j = 0; j < nv; ++j) p.a(r, j) = base.a(r, j);
    p.b[r] = base.b[r];
  }
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t r1 = base.constraints() + 2 * i, r2 = r1 + 1;
    for (std::size_t j = 0; j < nv; ++j) {
      p.a(r1, j) = v(i, j);
      p.a(r2, j) = -v(i, j);
    }
    p.a(r1, nv) = 1;
    p.a(r2, nv) = 1;
    p.a(r1, nv + 1 + 2 * i) = -1;
    p.a(r2, nv + 2 + 2 * i) = -1;
    p.b[r1] = x[i];
    p.b[r2] = -x[i];
  }
  const LPSolution s = minimize(p, unit(vars, nv));
  if (!s.feasible()) return std::nullopt;
  return s.value;
}

AffineAction canonical_means_action(const Semihypergroup& k) {
  k.require_verified("canonical_means_action");
  std::vector<AffineMap> maps;
  for (Index s = 0; s < k.size(); ++s)
    maps.push_back({translation_matrix(s, k).m.transpose(), Vector(k.size())});
  AffineAction act(k, ConvexCarrier::simplex(k.size()), std::move(maps));
  if (!verify(act).passed()) throw std::logic_error("canonical means action failed verification");
  return act;
}

Rational AffineFunctional::operator()(std::span<const Rational> x) const {
  return dot(coefficients, x) + constant;
}

KFunction induced_function(const AffineAction& act, std::span<const Rational> y,
                           const AffineFunctional& f) {
  if (!act.carrier().contains(y)) throw NotInCarrier("induced_function: y is not in the carrier");
  if (f.coefficients.size() != act.dimension())
    throw DimensionMismatch("induced_function: functional dimension != carrier dimension");
  KFunction out(act.structure().size());
  for (Index s = 0; s < act.structure().size(); ++s) out[s] = f(act.apply(s, y));
  return out;
}

AffineFunctional compose(const AffineFunctional& f, const AffineMap& t) {
  // f(A x + b) = (A^T c) . x + (c . b + k)
  return {t.a.transpose() * f.coefficients, dot(f.coefficients, t.b) + f.constant};
}

// ---------------------------------------------------------------------------
// Dual action

ActionAxiomReport check_dual_action_identity(const DualActionInstance& d) {
  return check_axiom(d.structure, d.maps, d.structure.size());
}

DualActionInstance dual_banach_action(const Semihypergroup& k, Index base) {
  k.require_verified("dual_banach_action");
  if (base >= k.size()) throw std::out_of_range("dual_banach_action: base point out of range");
  const std::size_t n = k.size();
  DualActionInstance d{k, base, unit(n, base), {}};
  for (Index s = 0; s < n; ++s) {
    Matrix mt = translation_matrix(s, k).m.transpose();
    Vector offset = subtract(mt * d.v0, d.v0);
    d.maps.push_back({std::move(mt), std::move(offset)});
  }
  if (!check_dual_action_identity(d)) throw std::logic_error("dual action identity failed");
  return d;
}

OrbitBound orbit_bound(const DualActionInstance& d, std::span<const Rational> u0) {
  if (u0.size() != d.structure.size()) throw DimensionMismatch("orbit_bound: wrong dimension");
  if (sum(u0) != 0) throw std::invalid_argument("orbit_bound: u0 must annihilate constants");
  OrbitBound ob{Rational(0), norm_l1(add(u0, d.v0)) + norm_l1(d.v0)};
  for (Index s = 0; s < d.structure.size(); ++s) {
    Rational v = norm_l1(d.apply(s, u0));
    if (v > ob.largest) ob.largest = std::move(v);
  }
  return ob;
}

DualMeanSearch search_lim_via_dual_action(const Semihypergroup& k, Index base) {
  const DualActionInstance d = dual_banach_action(k, base);
  const std::size_t n = k.size();

  // (A_s - I) w = -b_s for every s, and sum w = 0
  Matrix sys(n * n + 1, n);
  Vector rhs(n * n + 1);
  for (Index s = 0; s < n; ++s) {
    const Matrix lin = d.maps[s].a - Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sys(s * n + i, j) = lin(i, j);
      rhs[s * n + i] = -d.maps[s].b[i];
    }
  }
  for (std::size_t j = 0; j < n; ++j) sys(n * n, j) = 1;

  DualMeanSearch out;
  out.fixed = solve_linear(sys, rhs);
  out.consistent = out.fixed.consistent;
  if (!out.consistent) return out;

  // m = v0 + w_p + N t >= 0 with t free:  m - N t = v0 + w_p
  const auto& dirs = out.fixed.nullspace;
  const std::size_t vars = n + dirs.size();
  LPProblem p;
  p.a = Matrix(n, vars);
  p.b = add(d.v0, out.fixed.particular);
  p.nonnegative.assign(vars, true);
  for (std::size_t i = 0; i < n; ++i) {
    p.a(i, i) = 1;
    for (std::size_t j = 0; j < dirs.size(); ++j) p.a(i, n + j) = -dirs[j][i];
  }
  for (std::size_t j = 0; j < dirs.size(); ++j) p.nonnegative[n + j] = false;

  std::vector<Vector> objectives;
  for (std::size_t i = 0; i < n; ++i) objectives.push_back(unit(vars, i));
  out.lp = lexicographic_minimum(p, objectives);
  if (!out.lp.feasible()) return out;

  Vector m(out.lp.point.begin(), out.lp.point.begin() + static_cast<std::ptrdiff_t>(n));
  out.w0 = subtract(m, d.v0);
  out.mean = Mean(Measure(std::move(m)));
  return out;
}

std::optional<Mean> lim_via_dual_action(const Semihypergroup& k, Index base) {
  return search_lim_via_dual_action(k, base).mean;
}

}  // namespace shg
