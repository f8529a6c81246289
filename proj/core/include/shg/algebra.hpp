#pragma once

// Finite semihypergroups: a point space plus the table of point-mass
// convolutions p_x * p_y, extended bilinearly to arbitrary measures.
//
// Continuity axioms are vacuous on a finite discrete space, so the only
// structural checks are the probability condition on every table entry and
// associativity of the bilinear extension.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "shg/linalg.hpp"
#include "shg/rational.hpp"

namespace shg {

using Index = std::size_t;
using PointSet = std::set<Index>;

class PointSpace {
 public:
  /// Throws InvalidStructure on an empty list or duplicate labels.
  explicit PointSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws UnknownLabel.
  Index index_of(const std::string& label) const;
  std::optional<Index> find(const std::string& label) const;

  friend bool operator==(const PointSpace& a, const PointSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

/// Real (rational) measure on a finite point space.
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::size_t n) : w_(n) {}
  explicit Measure(Vector weights) : w_(std::move(weights)) {}

  static Measure point_mass(std::size_t n, Index x);
  static Measure uniform(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](Index i) const { return w_[i]; }
  Rational& operator[](Index i) { return w_[i]; }
  const Vector& weights() const noexcept { return w_; }

  Rational total() const;
  PointSet support() const;
  bool is_probability() const;

  Measure& operator+=(const Measure& other);
  Measure& operator*=(const Rational& s);

  friend bool operator==(const Measure& a, const Measure& b) { return a.w_ == b.w_; }

 private:
  Vector w_;
};

Measure operator+(Measure a, const Measure& b);
Measure operator*(const Rational& s, Measure a);

/// n x n table whose (x, y) entry is p_x * p_y.
class ConvolutionTable {
 public:
  ConvolutionTable() = default;
  /// All entries start as the zero measure.
  explicit ConvolutionTable(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Measure& operator()(Index x, Index y) const { return entries_[x * n_ + y]; }
  void set(Index x, Index y, Measure m);

  friend bool operator==(const ConvolutionTable& a, const ConvolutionTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Measure> entries_;
};

class Semihypergroup;

struct VerificationSummary;

class Semihypergroup {
 public:
  /// Throws DimensionMismatch if table, space and entry lengths disagree.
  Semihypergroup(std::string name, PointSpace space, ConvolutionTable table);

  const std::string& name() const noexcept { return name_; }
  const PointSpace& space() const noexcept { return space_; }
  const ConvolutionTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return space_.size(); }
  const Measure& product(Index x, Index y) const { return table_(x, y); }

  /// Replaces one table entry and drops every cached verification result.
  void set_product(Index x, Index y, Measure m);

  // Verified flags. All are false/empty until verify() has run on the
  // current table.
  bool probability_verified() const noexcept { return flags_.probability; }
  bool associativity_verified() const noexcept { return flags_.associative; }
  bool verified() const noexcept { return flags_.probability && flags_.associative; }
  bool checked() const noexcept { return flags_.checked; }
  std::optional<Index> identity() const noexcept { return flags_.identity; }
  bool commutative() const noexcept { return flags_.commutative; }

  /// Throws PreconditionError unless verify() passed on the current table.
  void require_verified(const char* operation) const;

  friend VerificationSummary verify(Semihypergroup& s);

  friend bool operator==(const Semihypergroup& a, const Semihypergroup& b) {
    return a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  struct Flags {
    bool checked = false;
    bool probability = false;
    bool associative = false;
    bool commutative = false;
    std::optional<Index> identity;
  };

  std::string name_;
  PointSpace space_;
  ConvolutionTable table_;
  Flags flags_;
};

// ---------------------------------------------------------------------------
// Operations

/// sigma(z) = sum_x sum_y mu(x) nu(y) (p_x*p_y)(z). Throws DimensionMismatch.
Measure convolve(const Measure& mu, const Measure& nu, const Semihypergroup& s);

/// Union of supp(p_x*p_y) over x in a, y in b.
PointSet convolve_sets(const PointSet& a, const PointSet& b, const Semihypergroup& s);
/// Label form; throws UnknownLabel.
std::vector<std::string> convolve_sets(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b,
                                       const Semihypergroup& s);

struct Triple {
  Index x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct AssociativityReport {
  bool passed = true;
  std::optional<Triple> witness;  ///< first failing (x, y, z) in lexicographic order
  Measure lhs;                    ///< (p_x*p_y)*p_z at the witness
  Measure rhs;                    ///< p_x*(p_y*p_z) at the witness
  explicit operator bool() const noexcept { return passed; }
};

AssociativityReport check_associativity(const Semihypergroup& s);

struct ProbabilityViolation {
  Index x, y;
  std::string reason;  ///< "negative weight", "total mass p/q != 1"
};

struct ProbabilityReport {
  bool passed = true;
  std::vector<ProbabilityViolation> violations;  ///< every offending entry, row-major
  explicit operator bool() const noexcept { return passed; }
};

ProbabilityReport check_probability(const Semihypergroup& s);

/// The two-sided identity, if any. A two-sided identity is unique; finding two
/// would be a logic error and throws std::logic_error.
std::optional<Index> find_identity(const Semihypergroup& s);

bool check_commutative(const Semihypergroup& s);

struct VerificationSummary {
  ProbabilityReport probability;
  AssociativityReport associativity;
  std::optional<Index> identity;
  bool commutative = false;
  bool passed() const noexcept { return probability.passed && associativity.passed; }
};

/// Runs every structural check and caches the verdicts on s.
VerificationSummary verify(Semihypergroup& s);

}  // namespace shg
