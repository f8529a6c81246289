#include "shg/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace shg {

CayleyTable::CayleyTable(std::vector<std::string> labels, std::vector<std::vector<Index>> product)
    : labels_(std::move(labels)), product_(std::move(product)) {
  if (labels_.empty()) throw InvalidStructure("Cayley table must have at least one element");
  PointSpace unique_check(labels_);  // rejects duplicate labels
  if (product_.size() != labels_.size())
    throw InvalidStructure("Cayley table must have one row per label");
  for (const auto& row : product_) {
    if (row.size() != labels_.size()) throw InvalidStructure("Cayley table must be square");
    for (Index v : row)
      if (v >= labels_.size())
        throw InvalidStructure("Cayley table entry " + std::to_string(v) + " out of range");
  }
}

Index CayleyTable::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel(label);
  return static_cast<Index>(it - labels_.begin());
}

std::optional<Triple> CayleyTable::associativity_witness() const {
  const std::size_t n = size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (product_[product_[x][y]][z] != product_[x][product_[y][z]]) return Triple{x, y, z};
  return std::nullopt;
}

std::optional<Index> CayleyTable::identity() const {
  for (Index e = 0; e < size(); ++e) {
    bool ok = true;
    for (Index x = 0; x < size() && ok; ++x) ok = product_[e][x] == x && product_[x][e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool CayleyTable::is_group() const {
  if (!is_associative() || !identity()) return false;
  const std::size_t n = size();
  for (Index x = 0; x < n; ++x) {
    std::vector<bool> row(n), col(n);
    for (Index y = 0; y < n; ++y) {
      row[product_[x][y]] = true;
      col[product_[y][x]] = true;
    }
    if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false))
      return false;
  }
  return true;
}

bool CayleyTable::is_subgroup(const PointSet& h) const {
  const auto e = identity();
  if (!e || h.empty() || !h.contains(*e)) return false;
  for (Index x : h) {
    if (x >= size()) return false;
    for (Index y : h)
      if (!h.contains(product_[x][y])) return false;
  }
  return true;  // finite and closed => closed under inverses
}

std::optional<Index> CayleyTable::inverse(Index x) const {
  const auto e = identity();
  if (!e) return std::nullopt;
  for (Index y = 0; y < size(); ++y)
    if (product_[x][y] == *e && product_[y][x] == *e) return y;
  return std::nullopt;
}

CayleyTable cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (Index j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return {std::move(labels), std::move(t)};
}

CayleyTable symmetric_group(std::size_t n) {
  if (n == 0 || n > 9) throw std::invalid_argument("symmetric_group: need 1 <= n <= 9");
  std::vector<std::vector<Index>> perms;
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<Index>, Index> index;
  std::vector<std::string> labels;
  for (Index k = 0; k < perms.size(); ++k) {
    index[perms[k]] = k;
    std::string l;
    for (Index v : perms[k]) l += static_cast<char>('1' + v);
    labels.push_back(std::move(l));
  }
  std::vector<std::vector<Index>> t(perms.size(), std::vector<Index>(perms.size()));
  for (Index a = 0; a < perms.size(); ++a)
    for (Index b = 0; b < perms.size(); ++b) {
      std::vector<Index> c(n);
      for (Index i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(c);
    }
  return {std::move(labels), std::move(t)};
}

namespace {

std::vector<std::string> letter_labels(std::size_t n) {
  if (n == 0 || n > 26) throw std::invalid_argument("semigroup size must be in 1..26");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

std::string set_label(const std::vector<std::string>& member_labels) {
  auto sorted = member_labels;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += sorted[i];
  }
  return out + "}";
}

// Partition of G into classes; classes are ordered by their smallest member.
struct Partition {
  std::vector<PointSet> classes;
  std::vector<Index> class_of;  // per group element
};

template <class ClassOf>
Partition partition_by(std::size_t n, ClassOf&& members_of) {
  Partition p;
  p.class_of.assign(n, static_cast<Index>(-1));
  for (Index x = 0; x < n; ++x) {
    if (p.class_of[x] != static_cast<Index>(-1)) continue;
    PointSet cls = members_of(x);
    for (Index m : cls) p.class_of[m] = p.classes.size();
    p.classes.push_back(std::move(cls));
  }
  return p;
}

PointSpace partition_space(const Partition& p, const CayleyTable& g) {
  std::vector<std::string> labels;
  for (const auto& cls : p.classes) {
    std::vector<std::string> members;
    for (Index m : cls) members.push_back(g.label(m));
    labels.push_back(set_label(members));
  }
  return PointSpace(std::move(labels));
}

std::string describe_witness(const Semihypergroup& s, const AssociativityReport& r) {
  const auto& sp = s.space();
  return "(" + sp.label(r.witness->x) + ", " + sp.label(r.witness->y) + ", " +
         sp.label(r.witness->z) + ")";
}

Semihypergroup finish(Semihypergroup s) {
  auto summary = verify(s);
  if (!summary.probability.passed) {
    const auto& v = summary.probability.violations.front();
    throw InvalidStructure("'" + s.name() + "': entry (" + s.space().label(v.x) + ", " +
                           s.space().label(v.y) + ") is not a probability measure: " + v.reason);
  }
  if (!summary.associativity.passed)
    throw AssociativityFailure("'" + s.name() + "' is not associative; witness " +
                                   describe_witness(s, summary.associativity),
                               summary.associativity);
  return s;
}

void require_group_and_subgroup(const CayleyTable& g, const PointSet& h) {
  if (!g.is_group()) throw InvalidStructure("coset construction needs a group");
  if (!g.is_subgroup(h)) throw InvalidStructure("H is not a subgroup of G");
}

// Table of a quotient whose entry (X, Y) is the uniform average of
// class(sample(x, y, k)) over k, for representatives x in X and y in Y.
// Every choice of representatives is evaluated and must agree.
template <class Sample>
ConvolutionTable averaged_quotient_table(const Partition& p, std::size_t samples, Sample&& sample) {
  const std::size_t n = p.classes.size();
  const Rational weight(1, static_cast<unsigned long>(samples));
  ConvolutionTable table(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::optional<Measure> entry;
      for (Index x : p.classes[i])
        for (Index y : p.classes[j]) {
          Measure m(n);
          for (std::size_t k = 0; k < samples; ++k) m[p.class_of[sample(x, y, k)]] += weight;
          if (!entry)
            entry = std::move(m);
          else if (*entry != m)
            throw std::logic_error("quotient convolution depends on the choice of representatives");
        }
      table.set(i, j, std::move(*entry));
    }
  return table;
}

}  // namespace

CayleyTable left_zero_semigroup(std::size_t n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[i][j] = i;
  return {letter_labels(n), std::move(t)};
}

CayleyTable right_zero_semigroup(std::size_t n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[i][j] = j;
  return {letter_labels(n), std::move(t)};
}

std::optional<std::string> validate_group_action(const GroupAction& a) {
  if (!a.acting.is_group()) return "acting table is not a group";
  if (!a.carrier.is_group()) return "carrier table is not a group";
  const std::size_t nh = a.acting.size(), ng = a.carrier.size();
  if (a.act.size() != nh) return "action table needs one row per element of H";
  for (const auto& row : a.act) {
    if (row.size() != ng) return "action table rows must have one entry per element of G";
    for (Index v : row)
      if (v >= ng) return "action table entry out of range";
  }
  const Index e = *a.acting.identity();
  for (Index x = 0; x < ng; ++x)
    if (a.act[e][x] != x) return "identity of H does not act trivially on " + a.carrier.label(x);
  for (Index h1 = 0; h1 < nh; ++h1)
    for (Index h2 = 0; h2 < nh; ++h2)
      for (Index x = 0; x < ng; ++x)
        if (a.act[h1][a.act[h2][x]] != a.act[a.acting(h1, h2)][x])
          return "compatibility fails for (" + a.acting.label(h1) + ", " + a.acting.label(h2) +
                 ", " + a.carrier.label(x) + ")";
  return std::nullopt;
}

Semihypergroup from_semigroup(const CayleyTable& t, std::string name) {
  if (auto w = t.associativity_witness())
    throw InvalidStructure("Cayley table is not associative at (" + t.label(w->x) + ", " +
                           t.label(w->y) + ", " + t.label(w->z) + ")");
  const std::size_t n = t.size();
  ConvolutionTable table(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) table.set(x, y, Measure::point_mass(n, t(x, y)));
  return finish(Semihypergroup(std::move(name), PointSpace(t.labels()), std::move(table)));
}

std::vector<std::string> triple_constraint_violations(const TripleParameters& p) {
  std::vector<std::string> v;
  const std::pair<const char*, const Rational*> params[] = {
      {"x1", &p.x1}, {"x2", &p.x2}, {"x3", &p.x3}, {"y1", &p.y1},
      {"y2", &p.y2}, {"y3", &p.y3}, {"z1", &p.z1}, {"z2", &p.z2}};
  for (const auto& [name, value] : params)
    if (*value < 0) v.push_back(std::string(name) + " < 0");
  if (p.x1 + p.x2 + p.x3 != 1) v.emplace_back("x1+x2+x3 != 1");
  if (p.y1 + p.y2 + p.y3 != 1) v.emplace_back("y1+y2+y3 != 1");
  if (p.z1 + p.z2 != 1) v.emplace_back("z1+z2 != 1");
  if (p.y1 * p.x3 != p.z1 * p.x1) v.emplace_back("y1*x3 != z1*x1");
  return v;
}

Semihypergroup triple_table(const TripleParameters& p, std::string name) {
  constexpr Index e = 0, a = 1, b = 2;
  ConvolutionTable t(3);
  for (Index i = 0; i < 3; ++i) {
    t.set(e, i, Measure::point_mass(3, i));
    t.set(i, e, Measure::point_mass(3, i));
  }
  const Measure ab(Vector{Rational(0), p.z1, p.z2});
  t.set(a, b, ab);
  t.set(b, a, ab);
  t.set(a, a, Measure(Vector{p.x1, p.x2, p.x3}));
  t.set(b, b, Measure(Vector{p.y1, p.y2, p.y3}));
  return Semihypergroup(std::move(name), PointSpace({"e", "a", "b"}), std::move(t));
}

Semihypergroup triple_hypergroup(const TripleParameters& p, std::string name) {
  auto violated = triple_constraint_violations(p);
  Semihypergroup s = triple_table(p, std::move(name));
  auto summary = verify(s);
  if (violated.empty() && summary.passed()) return s;

  std::string what = "three-point parameters rejected:";
  for (const auto& v : violated) what += " " + v + ";";
  if (!summary.associativity.passed)
    what += " not associative at " + describe_witness(s, summary.associativity) + ";";
  what.pop_back();
  throw TripleConstraintError(what, std::move(violated), summary.associativity);
}

Semihypergroup coset_space(const CayleyTable& g, const PointSet& h, std::string name) {
  require_group_and_subgroup(g, h);
  const std::vector<Index> hs(h.begin(), h.end());
  const auto part = partition_by(g.size(), [&](Index x) {
    PointSet c;
    for (Index t : hs) c.insert(g(x, t));
    return c;
  });
  auto table = averaged_quotient_table(part, hs.size(),
                                       [&](Index x, Index y, std::size_t k) { return g(g(x, hs[k]), y); });
  return finish(Semihypergroup(std::move(name), partition_space(part, g), std::move(table)));
}

Semihypergroup double_coset_space(const CayleyTable& g, const PointSet& h, std::string name) {
  require_group_and_subgroup(g, h);
  const std::vector<Index> hs(h.begin(), h.end());
  const auto part = partition_by(g.size(), [&](Index x) {
    PointSet c;
    for (Index u : hs)
      for (Index v : hs) c.insert(g(g(u, x), v));
    return c;
  });
  auto table = averaged_quotient_table(part, hs.size(),
                                       [&](Index x, Index y, std::size_t k) { return g(g(x, hs[k]), y); });
  Semihypergroup s = finish(Semihypergroup(std::move(name), partition_space(part, g), std::move(table)));
  if (s.identity() != part.class_of[*g.identity()])
    throw std::logic_error("double coset space lacks the identity HeH");
  return s;
}

Semihypergroup orbit_space(const GroupAction& a, std::string name) {
  if (auto err = validate_group_action(a)) throw InvalidStructure("invalid group action: " + *err);
  const std::size_t nh = a.acting.size();
  const auto part = partition_by(a.carrier.size(), [&](Index x) {
    PointSet orbit;
    for (Index h = 0; h < nh; ++h) orbit.insert(a.act[h][x]);
    return orbit;
  });
  auto table = averaged_quotient_table(part, nh * nh, [&](Index x, Index y, std::size_t k) {
    return a.carrier(a.act[k / nh][x], a.act[k % nh][y]);
  });
  return finish(Semihypergroup(std::move(name), partition_space(part, a.carrier), std::move(table)));
}

PointSet subgroup_from_labels(const CayleyTable& g, const std::vector<std::string>& labels) {
  PointSet h;
  for (const auto& l : labels) h.insert(g.index_of(l));
  return h;
}

}  // namespace shg
