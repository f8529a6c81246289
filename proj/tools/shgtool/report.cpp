#include "shgtool/report.hpp"

#include <cstdio>

#include "shg/rational.hpp"

namespace shgtool {

void Report::line(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, value);
}

void Report::write(std::ostream& out, Format format) const {
  if (format == Format::json) {
    json d = doc;
    if (timing_ms_) d["timing"] = {{"elapsed_ms", *timing_ms_}};
    out << dump(d);
    return;
  }
  for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
  if (timing_ms_) out << "time: " << format_double(*timing_ms_) << " ms\n";
}

std::string join_rationals(std::span<const shg::Rational> v) {
  return shg::join(shg::Vector(v.begin(), v.end()));
}

std::string format_measure(const shg::Measure& m, const shg::PointSpace& space) {
  std::string out;
  for (shg::Index z = 0; z < m.size(); ++z) {
    if (m[z] == 0) continue;
    if (!out.empty()) out += " + ";
    out += shg::to_string(m[z]) + " " + space.label(z);
  }
  return out.empty() ? "0" : out;
}

json measure_to_json(const shg::Measure& m, const shg::PointSpace& space) {
  json out = json::object();
  for (shg::Index z = 0; z < m.size(); ++z)
    if (m[z] != 0) out[space.label(z)] = rational_to_json(m[z]);
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace shgtool
