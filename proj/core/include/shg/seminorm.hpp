#pragma once

// Weighted l1 / l_inf seminorms and exact operator seminorms of linear maps
// restricted to a subspace.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shg/linalg.hpp"

namespace shg {

enum class SeminormKind { weighted_l1, weighted_linf };

/// "l1" / "linf"; throws UnsupportedSeminorm for anything else.
SeminormKind parse_seminorm_kind(std::string_view name);
std::string to_string(SeminormKind kind);

struct Seminorm {
  SeminormKind kind;
  Vector weights;  ///< nonnegative, one per coordinate

  static Seminorm l1(std::size_t d);
  static Seminorm linf(std::size_t d);

  Rational operator()(std::span<const Rational> x) const;
  std::string name() const;  ///< "l1", "linf", or "weighted-l1" etc.
};

/// A finite family of seminorms (the defining family of the locally convex
/// topology on the carrier's ambient space).
struct SeminormSpec {
  std::vector<Seminorm> seminorms;

  /// Throws std::invalid_argument on negative weights or mixed dimensions.
  void validate(std::size_t dimension) const;
  static SeminormSpec standard(std::size_t d);  ///< {l1, linf} with unit weights
};

/// sup { p(a x) : x in span(basis), p(x) <= 1 }, exactly. Empty optional when
/// the supremum is infinite (some x in the span has p(x) = 0 but p(a x) > 0).
/// An empty basis (the zero subspace) gives 0.
std::optional<Rational> restricted_operator_seminorm(const Matrix& a,
                                                     const std::vector<Vector>& basis,
                                                     const Seminorm& p);

/// The same supremum over the whole ambient space.
std::optional<Rational> ambient_operator_seminorm(const Matrix& a, const Seminorm& p);

}  // namespace shg
