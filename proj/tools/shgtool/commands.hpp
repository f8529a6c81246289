#pragma once

// The four subcommands. Each writes its report to out and any error message
// to err, and returns the process exit code:
//   0 success, 1 a verified negative answer (axiom failure, no LIM, no fixed
//   point, rejected construction), 2 input or usage error, 3 disagreement
//   between two independent oracles.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shgtool/report.hpp"

namespace shgtool {

enum Exit : int { ok = 0, negative = 1, input_error = 2, oracle_disagreement = 3 };

struct CommonOptions {
  Format format = Format::text;
  bool timing = true;
};

int cmd_check(const std::filesystem::path& structure, const CommonOptions& opt, std::ostream& out,
              std::ostream& err);

enum class LimMethod { direct, dual, both };

struct LimOptions {
  LimMethod method = LimMethod::direct;
  std::optional<std::string> base;  ///< base point label of the dual action
};

int cmd_lim(const std::filesystem::path& structure, const LimOptions& lim,
            const CommonOptions& opt, std::ostream& out, std::ostream& err);

struct FixpointOptions {
  bool iterate = false;
  double tol = 1e-8;
  std::size_t max_iter = 10000;
};

int cmd_fixpoint(const std::filesystem::path& structure, const std::filesystem::path& action,
                 const FixpointOptions& fp, const CommonOptions& opt, std::ostream& out,
                 std::ostream& err);

struct ConstructInputs {
  std::string kind;                      ///< semigroup | triple | coset | doublecoset | orbit
  std::optional<std::filesystem::path> table;   ///< semigroup: Cayley table file
  std::vector<std::string> parameters;   ///< triple: x1 x2 x3 y1 y2 y3 z1 z2
  std::optional<std::filesystem::path> group;   ///< coset, doublecoset, orbit
  std::vector<std::string> subgroup;     ///< coset, doublecoset: member labels
  std::optional<std::filesystem::path> acting;  ///< orbit: acting group
  std::optional<std::filesystem::path> act;     ///< orbit: act table
  std::optional<std::string> name;
  std::filesystem::path out;
};

int cmd_construct(const ConstructInputs& in, const CommonOptions& opt, std::ostream& out,
                  std::ostream& err);

/// Splits "e,(12)" at commas that are not inside parentheses or braces.
std::vector<std::string> split_labels(const std::string& list);

}  // namespace shgtool
