#pragma once

// A report carries two parallel renderings of the same result: a JSON
// document (keys sorted, rationals as strings) and "key: value" text lines in
// the order they were added.

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "shgtool/io.hpp"

namespace shgtool {

enum class Format { text, json };

class Report {
 public:
  json doc = json::object();

  void line(const std::string& key, const std::string& value);
  void set_timing(double elapsed_ms) { timing_ms_ = elapsed_ms; }
  void write(std::ostream& out, Format format) const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  std::optional<double> timing_ms_;
};

/// "1/2, 1/2"
std::string join_rationals(std::span<const shg::Rational> v);
/// Labelled measure or mean, zero weights omitted: "1/2 a + 1/2 b".
std::string format_measure(const shg::Measure& m, const shg::PointSpace& space);
json measure_to_json(const shg::Measure& m, const shg::PointSpace& space);
std::string format_double(double x);

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace shgtool
