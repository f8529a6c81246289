#pragma once

// Factories for the standard example classes: semigroups and groups, the
// three-point family on {e, a, b}, coset and double-coset spaces G/H and
// G//H, and orbit spaces of a finite group acting on a finite group.
//
// Every factory verifies its output (probability rows and associativity)
// before returning; a structure that fails is never handed out.

#include <optional>
#include <string>
#include <vector>

#include "shg/algebra.hpp"
#include "shg/errors.hpp"

namespace shg {

/// Finite magma given by its multiplication table; product[x][y] = x.y.
class CayleyTable {
 public:
  /// Throws InvalidStructure if the table is not square over the labels or an
  /// entry is out of range.
  CayleyTable(std::vector<std::string> labels, std::vector<std::vector<Index>> product);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  Index index_of(const std::string& label) const;
  Index operator()(Index x, Index y) const { return product_[x][y]; }
  const std::vector<std::vector<Index>>& rows() const noexcept { return product_; }

  std::optional<Triple> associativity_witness() const;
  bool is_associative() const { return !associativity_witness(); }
  std::optional<Index> identity() const;
  /// Associative, has an identity, and every row and column is a permutation.
  bool is_group() const;
  /// Closed under the product and contains the group identity.
  bool is_subgroup(const PointSet& h) const;
  std::optional<Index> inverse(Index x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> product_;
};

/// Z_n with labels "0".."n-1".
CayleyTable cyclic_group(std::size_t n);
/// S_n with permutations in one-line notation ("213" swaps 1 and 2); product (s.t)(i) = s(t(i)).
CayleyTable symmetric_group(std::size_t n);
/// x.y = x on labels "a", "b", ... (n <= 26).
CayleyTable left_zero_semigroup(std::size_t n);
/// x.y = y.
CayleyTable right_zero_semigroup(std::size_t n);

/// Finite group H acting on the points of G: act[h][x] = h.x.
struct GroupAction {
  CayleyTable acting;
  CayleyTable carrier;
  std::vector<std::vector<Index>> act;
};

/// Empty when the action axioms hold, otherwise the first violation.
std::optional<std::string> validate_group_action(const GroupAction& a);

/// Thrown by factories whose candidate table fails the associativity check.
class AssociativityFailure : public InvalidStructure {
 public:
  AssociativityFailure(const std::string& what, AssociativityReport report)
      : InvalidStructure(what), report_(std::move(report)) {}
  const AssociativityReport& report() const noexcept { return report_; }

 private:
  AssociativityReport report_;
};

Semihypergroup from_semigroup(const CayleyTable& t, std::string name = "semigroup");

struct TripleParameters {
  Rational x1, x2, x3;
  Rational y1, y2, y3;
  Rational z1, z2;
};

/// Rejection of a three-point parameter tuple. Lists every violated linear or
/// product constraint and, when the table could be built, the associativity
/// verdict.
class TripleConstraintError : public InvalidStructure {
 public:
  TripleConstraintError(const std::string& what, std::vector<std::string> violated,
                        std::optional<AssociativityReport> associativity)
      : InvalidStructure(what),
        violated_(std::move(violated)),
        associativity_(std::move(associativity)) {}
  const std::vector<std::string>& violated() const noexcept { return violated_; }
  const std::optional<AssociativityReport>& associativity() const noexcept {
    return associativity_;
  }

 private:
  std::vector<std::string> violated_;
  std::optional<AssociativityReport> associativity_;
};

/// Names of the constraints the tuple violates ("x2 < 0", "x1+x2+x3 != 1",
/// "y1*x3 != z1*x1", ...). Empty means the tuple is admissible.
std::vector<std::string> triple_constraint_violations(const TripleParameters& p);

/// The structure on {e, a, b}: e is the identity, p_a*p_b = p_b*p_a =
/// z1 p_a + z2 p_b, p_a*p_a = x1 p_e + x2 p_a + x3 p_b, p_b*p_b = y1 p_e +
/// y2 p_a + y3 p_b. The table is built without any checks.
Semihypergroup triple_table(const TripleParameters& p, std::string name = "T3");

/// Validated triple_table. Throws TripleConstraintError.
Semihypergroup triple_hypergroup(const TripleParameters& p, std::string name = "T3");

/// Left cosets xH with (xH)*(yH) = (1/|H|) sum_{t in H} p_{(x t y)H}.
/// Throws InvalidStructure if g is not a group or h not a subgroup.
Semihypergroup coset_space(const CayleyTable& g, const PointSet& h, std::string name = "G/H");

/// Double cosets HxH with (HxH)*(HyH) = (1/|H|) sum_{t in H} p_{H(x t y)H}.
Semihypergroup double_coset_space(const CayleyTable& g, const PointSet& h,
                                  std::string name = "G//H");

/// Orbits x^H with x^H * y^H = (1/|H|^2) sum_{s,t in H} p_{(s.x t.y)^H}.
Semihypergroup orbit_space(const GroupAction& a, std::string name = "G^H");

/// Label-based subgroup lookup; throws UnknownLabel.
PointSet subgroup_from_labels(const CayleyTable& g, const std::vector<std::string>& labels);

}  // namespace shg
