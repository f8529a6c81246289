#include "shgtool/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "shg/errors.hpp"
#include "shg/rational.hpp"

namespace shgtool {

using shg::Index;
using shg::Rational;

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return shg::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return shg::parse_rational(j.dump());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string or an integer");
}

json rational_to_json(const Rational& q) { return shg::to_string(q); }

json vector_to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(where + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Index index_in(const shg::PointSpace& space, const std::string& label, const std::string& where) {
  auto i = space.find(label);
  if (!i) throw InputError(where + ": unknown point label '" + label + "'");
  return *i;
}

shg::Vector rational_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  shg::Vector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<Index>> index_table(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<std::vector<Index>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(where + ": expected an array of rows");
    auto& r = out.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw InputError(where + ": entries must be nonnegative integers");
      r.push_back(v.get<Index>());
    }
  }
  return out;
}

}  // namespace

shg::Semihypergroup structure_from_json(const json& j) {
  const std::string where = "structure";
  const json& name = field(j, "name", where);
  if (!name.is_string()) throw InputError(where + ": 'name' must be a string");
  auto labels = string_list(field(j, "points", where), where + ".points");
  for (const auto& l : labels)
    if (l.find('|') != std::string::npos)
      throw InputError(where + ".points: label '" + l + "' contains '|'");

  std::optional<shg::PointSpace> space;
  try {
    space.emplace(labels);
  } catch (const std::exception& e) {
    throw InputError(where + ".points: " + e.what());
  }
  const std::size_t n = space->size();

  const json& conv = field(j, "convolution", where);
  if (!conv.is_object()) throw InputError(where + ".convolution: expected an object");
  shg::ConvolutionTable table(n);
  for (const auto& [key, cell] : conv.items()) {
    const std::string at = where + ".convolution[\"" + key + "\"]";
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw InputError(at + ": key must have the form \"x|y\"");
    const Index x = index_in(*space, key.substr(0, bar), at);
    const Index y = index_in(*space, key.substr(bar + 1), at);
    if (!cell.is_array()) throw InputError(at + ": expected an array of {point, weight}");
    shg::Measure m(n);
    std::vector<bool> seen(n, false);
    for (const auto& entry : cell) {
      const json& p = field(entry, "point", at);
      if (!p.is_string()) throw InputError(at + ": 'point' must be a label");
      const Index z = index_in(*space, p.get<std::string>(), at);
      if (seen[z]) throw InputError(at + ": point '" + p.get<std::string>() + "' listed twice");
      seen[z] = true;
      m[z] = rational_from_json(field(entry, "weight", at), at + ".weight");
    }
    table.set(x, y, std::move(m));
  }
  return shg::Semihypergroup(name.get<std::string>(), std::move(*space), std::move(table));
}

json structure_to_json(const shg::Semihypergroup& k) {
  const auto& sp = k.space();
  json conv = json::object();
  for (Index x = 0; x < k.size(); ++x)
    for (Index y = 0; y < k.size(); ++y) {
      json cell = json::array();
      const auto& m = k.product(x, y);
      for (Index z = 0; z < k.size(); ++z)
        if (m[z] != 0) cell.push_back({{"point", sp.label(z)}, {"weight", rational_to_json(m[z])}});
      conv[sp.label(x) + "|" + sp.label(y)] = std::move(cell);
    }
  return {{"name", k.name()}, {"points", sp.labels()}, {"convolution", std::move(conv)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

shg::CayleyTable cayley_from_json(const json& j) {
  const std::string where = "group";
  auto labels = string_list(field(j, "labels", where), where + ".labels");
  auto table = index_table(field(j, "table", where), where + ".table");
  try {
    return shg::CayleyTable(std::move(labels), std::move(table));
  } catch (const shg::InvalidStructure& e) {
    throw InputError(where + ": " + e.what());
  }
}

ActionData action_from_json(const json& j, const shg::Semihypergroup& k) {
  const std::string where = "action";
  const json& dim = field(j, "dimension", where);
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw InputError(where + ": 'dimension' must be a positive integer");
  const std::size_t d = dim.get<std::size_t>();

  const json& cj = field(j, "carrier", where);
  std::optional<shg::ConvexCarrier> carrier;
  if (cj.is_string() && cj.get<std::string>() == "simplex") {
    carrier = shg::ConvexCarrier::simplex(d);
  } else if (cj.is_object() && cj.contains("hull")) {
    const json& hj = cj["hull"];
    if (!hj.is_array()) throw InputError(where + ".carrier.hull: expected an array of points");
    std::vector<shg::Vector> points;
    for (std::size_t i = 0; i < hj.size(); ++i) {
      auto p = rational_list(hj[i], where + ".carrier.hull[" + std::to_string(i) + "]");
      if (p.size() != d) throw InputError(where + ".carrier.hull: point dimension != " + std::to_string(d));
      points.push_back(std::move(p));
    }
    try {
      carrier = shg::ConvexCarrier::hull(std::move(points));
    } catch (const std::exception& e) {
      throw InputError(where + ".carrier.hull: " + e.what());
    }
  } else {
    throw InputError(where + ": carrier must be \"simplex\" or {\"hull\": [...]}");
  }

  const json& mj = field(j, "maps", where);
  if (!mj.is_object()) throw InputError(where + ".maps: expected an object keyed by point label");
  std::vector<std::optional<shg::AffineMap>> maps(k.size());
  for (const auto& [label, mapj] : mj.items()) {
    const std::string at = where + ".maps[\"" + label + "\"]";
    const Index s = index_in(k.space(), label, at);
    const json& aj = field(mapj, "A", at);
    if (!aj.is_array() || aj.size() != d) throw InputError(at + ".A: expected " + std::to_string(d) + " rows");
    std::vector<shg::Vector> rows;
    for (std::size_t i = 0; i < d; ++i) {
      auto r = rational_list(aj[i], at + ".A[" + std::to_string(i) + "]");
      if (r.size() != d) throw InputError(at + ".A: row length != " + std::to_string(d));
      rows.push_back(std::move(r));
    }
    auto b = rational_list(field(mapj, "b", at), at + ".b");
    if (b.size() != d) throw InputError(at + ".b: length != " + std::to_string(d));
    maps[s] = shg::AffineMap{shg::Matrix::from_rows(rows), std::move(b)};
  }
  ActionData out{std::move(*carrier), {}};
  for (Index s = 0; s < k.size(); ++s) {
    if (!maps[s]) throw InputError(where + ".maps: no map for point '" + k.space().label(s) + "'");
    out.maps.push_back(std::move(*maps[s]));
  }
  return out;
}

json action_to_json(const shg::AffineAction& act) {
  const std::size_t d = act.dimension();
  json maps = json::object();
  for (Index s = 0; s < act.structure().size(); ++s) {
    const auto& t = act.map(s);
    json a = json::array();
    for (std::size_t i = 0; i < d; ++i) a.push_back(vector_to_json(t.a.row(i)));
    maps[act.structure().space().label(s)] = {{"A", std::move(a)}, {"b", vector_to_json(t.b)}};
  }
  json carrier;
  if (act.carrier().kind() == shg::ConvexCarrier::Kind::simplex) {
    carrier = "simplex";
  } else {
    json hull = json::array();
    for (const auto& g : act.carrier().generators()) hull.push_back(vector_to_json(g));
    carrier = {{"hull", std::move(hull)}};
  }
  return {{"dimension", d}, {"carrier", std::move(carrier)}, {"maps", std::move(maps)}};
}

std::vector<std::vector<Index>> act_table_from_json(const json& j) {
  return index_table(field(j, "table", "act"), "act.table");
}

}  // namespace shgtool
