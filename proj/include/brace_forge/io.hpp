#ifndef BRACE_FORGE_IO_HPP_
#define BRACE_FORGE_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "brace_forge/brace.hpp"

namespace brace_forge::io {

using json = nlohmann::json;

/// {"order": n, "table": [[...]]} or, for permutation groups,
/// {"degree": d, "generators": [[...]]}.
json group_to_json(FiniteGroup const& g);
FiniteGroup group_from_json(json const& j, Limits const& limits = default_limits());

/// A JSON file path (anything ending in .json) or a group expression.
FiniteGroup load_group(std::string const& arg, Limits const& limits = default_limits());

/// Replays a construction record:
///   {"kind": "triv" | "a_triv", "group": G}
///   {"kind": "factorization", "group": G, "left": [...], "right": [...]}
///   {"kind": "diagonal", "simple": G}
///   {"kind": "regular", "additive": G, "by_point": [...]}
///   {"kind": "opposite", "of": R}
///   {"kind": "product", "factors": [R, ...]}
/// where G is a group expression or a group JSON object.
SkewBrace build_brace(json const& construction, Limits const& limits = default_limits());

/// {"order", "add_table", "mul_table", "provenance"}; above table_cap the
/// tables are replaced by {"construction": ...}, which must then be given.
json brace_to_json(SkewBrace const& b, json const& construction = nullptr,
                   std::size_t table_cap = 2048);
SkewBrace brace_from_json(json const& j, Limits const& limits = default_limits());

struct Config {
  Limits limits;
  double search_budget_sec = 120;
};

/// JSON object or flat "key = value" lines (TOML subset). Unknown keys are
/// rejected.
Config parse_config(std::string const& text);
Config load_config(std::string const& path);

json read_json_file(std::string const& path);
void write_json_file(std::string const& path, json const& j);

}  // namespace brace_forge::io

#endif  // BRACE_FORGE_IO_HPP_
