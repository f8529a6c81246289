#pragma once

// Means on AP(K) and left-invariant means (LIMs).
//
// A mean is a probability vector m acting by m(f) = sum_y m(y) f(y). It is
// left invariant iff m(L_s f) = m(f) for every s and f, i.e. m^T M_s = m^T for
// every translation matrix. LIM existence is therefore the feasibility of
//   { m : (M_s^T - I) m = 0 for all s, sum m = 1, m >= 0 },
// decided exactly by the simplex kernel in lp.hpp.

#include <optional>

#include "shg/algebra.hpp"
#include "shg/function_space.hpp"
#include "shg/lp.hpp"

namespace shg {

class Mean {
 public:
  /// Throws std::invalid_argument unless w is a probability vector.
  explicit Mean(Measure w);
  static Mean uniform(std::size_t n) { return Mean(Measure::uniform(n)); }

  std::size_t size() const noexcept { return w_.size(); }
  const Measure& weights() const noexcept { return w_; }
  const Rational& operator[](Index i) const { return w_[i]; }
  Rational operator()(const KFunction& f) const;

  friend bool operator==(const Mean& a, const Mean& b) { return a.w_ == b.w_; }

 private:
  Measure w_;
};

enum class Side { left, right };

/// The LIM (or RIM) polytope as an LP in the n weights.
LPProblem invariant_mean_problem(const Semihypergroup& k, Side side = Side::left);

struct MeanSearch {
  std::optional<Mean> mean;  ///< lexicographically smallest invariant mean
  LPSolution lp;             ///< carries the Farkas certificate when none exists
};

MeanSearch search_invariant_mean(const Semihypergroup& k, Side side = Side::left);

/// Lexicographically smallest LIM, or none. Requires a verified structure.
std::optional<Mean> find_LIM(const Semihypergroup& k);
std::optional<Mean> find_RIM(const Semihypergroup& k);

bool is_left_amenable_AP(const Semihypergroup& k);

struct InvarianceReport {
  bool passed = true;
  std::optional<Index> s;  ///< translate that moves the mean
  std::optional<Index> y;  ///< indicator 1_y with m(L_s 1_y) != m(1_y)
  Rational translated;     ///< m(L_s 1_y)
  Rational original;       ///< m(1_y)
  explicit operator bool() const noexcept { return passed; }
};

/// Checks m(L_s 1_y) = m(1_y) for every s and y (equivalently m^T M_s = m^T).
InvarianceReport verify_LIM(const Mean& m, const Semihypergroup& k);
InvarianceReport verify_RIM(const Mean& m, const Semihypergroup& k);

}  // namespace shg
