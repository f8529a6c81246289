#pragma once

// JSON file formats of the command-line tool. Every parser throws
// shgtool::InputError with a message naming the offending field; the writers
// produce the canonical form (sorted keys, lowest-terms rational strings).

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "shg/actions.hpp"
#include "shg/algebra.hpp"
#include "shg/constructors.hpp"

namespace shgtool {

using json = nlohmann::json;

/// Unreadable file, malformed JSON, or a document that does not match its format.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// A rational from a JSON string ("p/q", "n") or integer.
shg::Rational rational_from_json(const json& j, const std::string& where);
json rational_to_json(const shg::Rational& q);
json vector_to_json(std::span<const shg::Rational> v);

/// { "name", "points", "convolution": { "x|y": [ {"point", "weight"} ] } }.
/// Missing cells are the zero measure, so an incomplete table fails the
/// probability check rather than the parse. The result is not verified.
shg::Semihypergroup structure_from_json(const json& j);
json structure_to_json(const shg::Semihypergroup& k);
/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const json& j);

/// { "labels": [...], "table": [[indices]] }.
shg::CayleyTable cayley_from_json(const json& j);

/// { "dimension", "carrier": "simplex" | {"hull": [[...]]}, "maps": {label: {"A", "b"}} }.
/// Map labels must be exactly the points of k.
struct ActionData {
  shg::ConvexCarrier carrier;
  std::vector<shg::AffineMap> maps;  ///< in structure index order
};
ActionData action_from_json(const json& j, const shg::Semihypergroup& k);
json action_to_json(const shg::AffineAction& act);

/// { "table": [[...]] } with table[h][x] = index of h.x in the carrier group.
std::vector<std::vector<shg::Index>> act_table_from_json(const json& j);

}  // namespace shgtool
