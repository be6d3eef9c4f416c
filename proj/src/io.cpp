#include "brace_forge/io.hpp"

#include <fstream>
#include <sstream>

#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/holomorph.hpp"

namespace brace_forge::io {

namespace {

json table_rows(FiniteGroup const& g) {
  json rows = json::array();
  for (Index a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Index b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Index>> rows_from(json const& j) {
  if (!j.is_array()) throw InvalidArgument("table must be an array of rows");
  return j.get<std::vector<std::vector<Index>>>();
}

FiniteGroup group_arg(json const& j, Limits const& limits) {
  if (j.is_string()) return parse_group(j.get<std::string>(), limits);
  return group_from_json(j, limits);
}

std::vector<Index> index_list(json const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidArgument(std::string("construction needs an index list '") + key + "'");
  return j[key].get<std::vector<Index>>();
}

void set_key(Config& c, std::string const& key, std::string const& value) {
  auto as_size = [&] {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(value, &pos, 0);
    if (pos != value.size()) throw InvalidArgument("bad value for " + key + ": " + value);
    return static_cast<std::size_t>(v);
  };
  Limits& l = c.limits;
  if (key == "full_check_cap") l.full_check_cap = as_size();
  else if (key == "pair_check_cap") l.pair_check_cap = as_size();
  else if (key == "table_cap") l.table_cap = as_size();
  else if (key == "subgroup_cap") l.subgroup_cap = as_size();
  else if (key == "aut_cap") l.aut_cap = as_size();
  else if (key == "iso_cap") l.iso_cap = as_size();
  else if (key == "supersolvable_cap") l.supersolvable_cap = as_size();
  else if (key == "element_cap") l.element_cap = as_size();
  else if (key == "sample_count") l.sample_count = as_size();
  else if (key == "group_sample_count") l.group_sample_count = as_size();
  else if (key == "seed") l.seed = as_size();
  else if (key == "search_budget_sec") c.search_budget_sec = std::stod(value);
  else throw InvalidArgument("unknown config key: " + key);
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

json group_to_json(FiniteGroup const& g) {
  if (g.permutation_degree() > 0) {
    json gens = json::array();
    for (Index s : g.generators()) {
      auto p = g.permutation(s);
      gens.push_back(std::vector<Index>(p.begin(), p.end()));
    }
    return {{"degree", g.permutation_degree()}, {"generators", gens}};
  }
  if (g.order() > 2048)
    throw InvalidArgument("group of order " + std::to_string(g.order()) +
                          " is too large for a table export");
  return {{"order", g.order()}, {"table", table_rows(g)}};
}

FiniteGroup group_from_json(json const& j, Limits const& limits) {
  if (!j.is_object()) throw InvalidArgument("group JSON must be an object");
  if (j.contains("table")) {
    auto rows = rows_from(j["table"]);
    if (j.contains("order") && j["order"].get<std::size_t>() != rows.size())
      throw InvalidArgument("order does not match the table size");
    return FiniteGroup::from_rows(rows, {}, limits);
  }
  if (j.contains("generators")) {
    if (!j.contains("degree")) throw InvalidArgument("permutation group needs 'degree'");
    return FiniteGroup::from_permutations(
        j["degree"].get<std::size_t>(), j["generators"].get<std::vector<std::vector<Index>>>(),
        limits);
  }
  throw InvalidArgument("group JSON needs 'table' or 'generators'");
}

FiniteGroup load_group(std::string const& arg, Limits const& limits) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
    return group_from_json(read_json_file(arg), limits);
  return parse_group(arg, limits);
}

SkewBrace build_brace(json const& c, Limits const& limits) {
  if (!c.is_object() || !c.contains("kind")) throw InvalidArgument("construction needs 'kind'");
  std::string kind = c["kind"].get<std::string>();
  if (kind == "triv") return triv(group_arg(c.at("group"), limits), limits);
  if (kind == "a_triv") return a_triv(group_arg(c.at("group"), limits), limits);
  if (kind == "factorization") {
    FiniteGroup g = group_arg(c.at("group"), limits);
    auto left = generate_subgroup(g, index_list(c, "left"));
    auto right = generate_subgroup(g, index_list(c, "right"));
    return brace_from_factorization(make_factorization(g, left, right), limits);
  }
  if (kind == "diagonal") return diagonal_brace(group_arg(c.at("simple"), limits), limits);
  if (kind == "regular") {
    HolomorphGroup h = holomorph(group_arg(c.at("additive"), limits), limits);
    RegularSubgroup r;
    r.by_point = index_list(c, "by_point");
    r.members = r.by_point;
    std::sort(r.members.begin(), r.members.end());
    for (Index x : r.members) h.group.check_index(x);
    if (!is_regular(h, r.members)) throw InvalidArgument("by_point is not a regular subgroup");
    for (Index p = 0; p < r.by_point.size(); ++p)
      if (h.act(r.by_point[p], 0) != p) throw InvalidArgument("by_point is not indexed by point");
    return brace_from_regular_subgroup(h, r, limits);
  }
  if (kind == "opposite") return opposite(build_brace(c.at("of"), limits), limits);
  if (kind == "product") {
    auto const& fs = c.at("factors");
    if (!fs.is_array() || fs.empty()) throw InvalidArgument("product needs factors");
    SkewBrace acc = build_brace(fs[0], limits);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = brace_product(acc, build_brace(fs[i], limits), limits);
    return acc;
  }
  throw InvalidArgument("unknown construction kind: " + kind);
}

json brace_to_json(SkewBrace const& b, json const& construction, std::size_t table_cap) {
  json j = {{"order", b.order()}, {"provenance", b.provenance()}};
  if (b.order() <= table_cap) {
    j["add_table"] = table_rows(b.add_group());
    j["mul_table"] = table_rows(b.mul_group());
  } else if (construction.is_null()) {
    throw InvalidArgument("a brace above the table limit needs a construction record");
  }
  if (!construction.is_null()) j["construction"] = construction;
  return j;
}

SkewBrace brace_from_json(json const& j, Limits const& limits) {
  if (!j.is_object()) throw InvalidArgument("brace JSON must be an object");
  std::string prov = j.value("provenance", std::string());
  if (j.contains("add_table") && j.contains("mul_table"))
    return make_brace_from_tables(rows_from(j["add_table"]), rows_from(j["mul_table"]), limits,
                                  prov);
  if (j.contains("construction")) return build_brace(j["construction"], limits);
  throw InvalidArgument("brace JSON needs tables or a construction record");
}

Config parse_config(std::string const& text) {
  Config c;
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    json j = json::parse(t);
    for (auto const& [k, v] : j.items())
      set_key(c, k, v.is_string() ? v.get<std::string>() : v.dump());
    return c;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line without '=': " + line);
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    std::erase(value, '_');
    set_key(c, trim(line.substr(0, eq)), value);
  }
  return c;
}

Config load_config(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  try {
    return json::parse(in);
  } catch (json::parse_error const& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_json_file(std::string const& path, json const& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace brace_forge::io
