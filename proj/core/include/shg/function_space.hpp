#pragma once

// Functions on K and the translation operators acting on them.
//
// (L_s f)(y) = sum_z (p_s*p_y)(z) f(z),   (R_t f)(x) = sum_z (p_x*p_t)(z) f(z).
//
// On a finite K every orbit {L_x f} is a finite set, hence relatively compact,
// so every function is almost periodic and AP(K) = C(K) = R^n.

#include <vector>

#include "shg/algebra.hpp"

namespace shg {

class KFunction {
 public:
  KFunction() = default;
  explicit KFunction(std::size_t n) : v_(n) {}
  explicit KFunction(Vector values) : v_(std::move(values)) {}
  static KFunction constant(std::size_t n, const Rational& value);
  static KFunction indicator(std::size_t n, Index x);

  std::size_t size() const noexcept { return v_.size(); }
  const Rational& operator[](Index i) const { return v_[i]; }
  Rational& operator[](Index i) { return v_[i]; }
  const Vector& values() const noexcept { return v_; }

  friend bool operator==(const KFunction& a, const KFunction& b) { return a.v_ == b.v_; }

 private:
  Vector v_;
};

/// Matrix of L_s: M[y][z] = (p_s*p_y)(z). Row-stochastic.
struct TranslationMatrix {
  Index s;
  Matrix m;
};

KFunction left_translate(Index s, const KFunction& f, const Semihypergroup& k);
KFunction right_translate(Index t, const KFunction& f, const Semihypergroup& k);

TranslationMatrix translation_matrix(Index s, const Semihypergroup& k);
/// Matrix of R_t: R[x][z] = (p_x*p_t)(z).
TranslationMatrix right_translation_matrix(Index t, const Semihypergroup& k);

/// Distinct left translates {L_x f : x in K}, in order of first appearance.
std::vector<KFunction> orbit_left(const KFunction& f, const Semihypergroup& k);

/// Always true on a finite point space (the orbit is a finite set).
constexpr bool is_almost_periodic(const KFunction&, const Semihypergroup&) noexcept { return true; }

/// L_mu f = sum_x mu(x) L_x f.
KFunction averaged_translate(const Measure& mu, const KFunction& f, const Semihypergroup& k);

}  // namespace shg
