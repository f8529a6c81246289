#include "shg/algebra.hpp"

#include <stdexcept>

#include "shg/errors.hpp"

namespace shg {

PointSpace::PointSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidStructure("point space must contain at least one point");
  for (Index i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw InvalidStructure("duplicate point label '" + labels_[i] + "'");
}

Index PointSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return it->second;
}

std::optional<Index> PointSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Measure Measure::point_mass(std::size_t n, Index x) {
  Measure m(n);
  m.w_.at(x) = 1;
  return m;
}

Measure Measure::uniform(std::size_t n) {
  Measure m(n);
  for (auto& w : m.w_) w = Rational(1, static_cast<unsigned long>(n));
  return m;
}

Rational Measure::total() const { return sum(w_); }

PointSet Measure::support() const {
  PointSet s;
  for (Index i = 0; i < w_.size(); ++i)
    if (w_[i] != 0) s.insert(i);
  return s;
}

bool Measure::is_probability() const {
  for (const auto& w : w_)
    if (w < 0) return false;
  return total() == 1;
}

Measure& Measure::operator+=(const Measure& other) {
  if (other.size() != size()) throw DimensionMismatch("measure sum: lengths differ");
  for (Index i = 0; i < w_.size(); ++i) w_[i] += other.w_[i];
  return *this;
}

Measure& Measure::operator*=(const Rational& s) {
  for (auto& w : w_) w *= s;
  return *this;
}

Measure operator+(Measure a, const Measure& b) { return a += b; }
Measure operator*(const Rational& s, Measure a) { return a *= s; }

ConvolutionTable::ConvolutionTable(std::size_t n) : n_(n), entries_(n * n, Measure(n)) {}

void ConvolutionTable::set(Index x, Index y, Measure m) {
  if (x >= n_ || y >= n_) throw std::out_of_range("ConvolutionTable::set: index out of range");
  if (m.size() != n_) throw DimensionMismatch("table entry length != number of points");
  entries_[x * n_ + y] = std::move(m);
}

Semihypergroup::Semihypergroup(std::string name, PointSpace space, ConvolutionTable table)
    : name_(std::move(name)), space_(std::move(space)), table_(std::move(table)) {
  if (table_.size() != space_.size())
    throw DimensionMismatch("convolution table size != number of points");
}

void Semihypergroup::set_product(Index x, Index y, Measure m) {
  table_.set(x, y, std::move(m));
  flags_ = Flags{};
}

void Semihypergroup::require_verified(const char* operation) const {
  if (!verified())
    throw PreconditionError(std::string(operation) + ": structure '" + name_ +
                            "' has not passed the probability and associativity checks");
}

Measure convolve(const Measure& mu, const Measure& nu, const Semihypergroup& s) {
  const std::size_t n = s.size();
  if (mu.size() != n || nu.size() != n)
    throw DimensionMismatch("convolve: measure length != number of points");
  Measure out(n);
  for (Index x = 0; x < n; ++x) {
    if (mu[x] == 0) continue;
    for (Index y = 0; y < n; ++y) {
      if (nu[y] == 0) continue;
      const Rational c = mu[x] * nu[y];
      const Measure& e = s.product(x, y);
      for (Index z = 0; z < n; ++z)
        if (e[z] != 0) out[z] += c * e[z];
    }
  }
  return out;
}

PointSet convolve_sets(const PointSet& a, const PointSet& b, const Semihypergroup& s) {
  PointSet out;
  for (Index x : a) {
    if (x >= s.size()) throw std::out_of_range("convolve_sets: index out of range");
    for (Index y : b) {
      if (y >= s.size()) throw std::out_of_range("convolve_sets: index out of range");
      out.merge(s.product(x, y).support());
    }
  }
  return out;
}

std::vector<std::string> convolve_sets(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b,
                                       const Semihypergroup& s) {
  PointSet ia, ib;
  for (const auto& l : a) ia.insert(s.space().index_of(l));
  for (const auto& l : b) ib.insert(s.space().index_of(l));
  std::vector<std::string> out;
  for (Index z : convolve_sets(ia, ib, s)) out.push_back(s.space().label(z));
  return out;
}

AssociativityReport check_associativity(const Semihypergroup& s) {
  const std::size_t n = s.size();
  AssociativityReport report;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        Measure lhs = convolve(s.product(x, y), Measure::point_mass(n, z), s);
        Measure rhs = convolve(Measure::point_mass(n, x), s.product(y, z), s);
        if (lhs != rhs) {
          report.passed = false;
          report.witness = Triple{x, y, z};
          report.lhs = std::move(lhs);
          report.rhs = std::move(rhs);
          return report;
        }
      }
  return report;
}

ProbabilityReport check_probability(const Semihypergroup& s) {
  ProbabilityReport report;
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) {
      const Measure& m = s.product(x, y);
      std::string reason;
      for (const auto& w : m.weights())
        if (w < 0) {
          reason = "negative weight " + to_string(w);
          break;
        }
      if (reason.empty() && m.total() != 1) reason = "total mass " + to_string(m.total()) + " != 1";
      if (!reason.empty()) report.violations.push_back({x, y, std::move(reason)});
    }
  report.passed = report.violations.empty();
  return report;
}

std::optional<Index> find_identity(const Semihypergroup& s) {
  const std::size_t n = s.size();
  std::optional<Index> found;
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      const Measure px = Measure::point_mass(n, x);
      ok = s.product(x, e) == px && s.product(e, x) == px;
    }
    if (!ok) continue;
    if (found) throw std::logic_error("find_identity: two distinct two-sided identities");
    found = e;
  }
  return found;
}

bool check_commutative(const Semihypergroup& s) {
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = x + 1; y < s.size(); ++y)
      if (s.product(x, y) != s.product(y, x)) return false;
  return true;
}

VerificationSummary verify(Semihypergroup& s) {
  VerificationSummary summary;
  summary.probability = check_probability(s);
  summary.associativity = check_associativity(s);
  summary.identity = find_identity(s);
  summary.commutative = check_commutative(s);

  s.flags_.checked = true;
  s.flags_.probability = summary.probability.passed;
  s.flags_.associative = summary.associativity.passed;
  s.flags_.identity = summary.identity;
  s.flags_.commutative = summary.commutative;
  return summary;
}

}  // namespace shg
