#include "shg/function_space.hpp"

#include <algorithm>

#include "shg/errors.hpp"

namespace shg {

namespace {

void require_length(const KFunction& f, const Semihypergroup& k, const char* op) {
  if (f.size() != k.size())
    throw DimensionMismatch(std::string(op) + ": function length != number of points");
}

void require_point(Index s, const Semihypergroup& k, const char* op) {
  if (s >= k.size()) throw DimensionMismatch(std::string(op) + ": point index out of range");
}

}  // namespace

KFunction KFunction::constant(std::size_t n, const Rational& value) {
  return KFunction(Vector(n, value));
}

KFunction KFunction::indicator(std::size_t n, Index x) { return KFunction(unit(n, x)); }

KFunction left_translate(Index s, const KFunction& f, const Semihypergroup& k) {
  k.require_verified("left_translate");
  require_length(f, k, "left_translate");
  require_point(s, k, "left_translate");
  KFunction out(k.size());
  for (Index y = 0; y < k.size(); ++y) out[y] = dot(k.product(s, y).weights(), f.values());
  return out;
}

KFunction right_translate(Index t, const KFunction& f, const Semihypergroup& k) {
  k.require_verified("right_translate");
  require_length(f, k, "right_translate");
  require_point(t, k, "right_translate");
  KFunction out(k.size());
  for (Index x = 0; x < k.size(); ++x) out[x] = dot(k.product(x, t).weights(), f.values());
  return out;
}

TranslationMatrix translation_matrix(Index s, const Semihypergroup& k) {
  k.require_verified("translation_matrix");
  require_point(s, k, "translation_matrix");
  const std::size_t n = k.size();
  Matrix m(n, n);
  for (Index y = 0; y < n; ++y)
    for (Index z = 0; z < n; ++z) m(y, z) = k.product(s, y)[z];
  return {s, std::move(m)};
}

TranslationMatrix right_translation_matrix(Index t, const Semihypergroup& k) {
  k.require_verified("right_translation_matrix");
  require_point(t, k, "right_translation_matrix");
  const std::size_t n = k.size();
  Matrix m(n, n);
  for (Index x = 0; x < n; ++x)
    for (Index z = 0; z < n; ++z) m(x, z) = k.product(x, t)[z];
  return {t, std::move(m)};
}

std::vector<KFunction> orbit_left(const KFunction& f, const Semihypergroup& k) {
  std::vector<KFunction> orbit;
  for (Index x = 0; x < k.size(); ++x) {
    KFunction g = left_translate(x, f, k);
    if (std::find(orbit.begin(), orbit.end(), g) == orbit.end()) orbit.push_back(std::move(g));
  }
  return orbit;
}

KFunction averaged_translate(const Measure& mu, const KFunction& f, const Semihypergroup& k) {
  k.require_verified("averaged_translate");
  require_length(f, k, "averaged_translate");
  if (mu.size() != k.size())
    throw DimensionMismatch("averaged_translate: measure length != number of points");
  Vector out(k.size());
  for (Index x = 0; x < k.size(); ++x)
    if (mu[x] != 0) axpy(out, mu[x], left_translate(x, f, k).values());
  return KFunction(std::move(out));
}

}  // namespace shg
