#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/holomorph.hpp"
#include "brace_forge/io.hpp"
#include "brace_forge/isomorphism.hpp"
#include "brace_forge/numtheory.hpp"
#include "brace_forge/verify.hpp"

namespace bf = brace_forge;
using json = nlohmann::json;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(json const& j, std::string const& out) {
  if (out.empty() || out == "-")
    std::cout << j.dump(2) << "\n";
  else
    bf::io::write_json_file(out, j);
}

std::uint64_t parse_seed(std::string const& s) {
  std::size_t pos = 0;
  std::uint64_t v = std::stoull(s, &pos, 0);
  if (pos != s.size()) throw bf::InvalidArgument("bad seed: " + s);
  return v;
}

json group_summary(bf::FiniteGroup const& g, bf::Limits const& limits) {
  return {{"order", g.order()},
          {"label", std::string(bf::to_string(bf::classify(g, limits)))},
          {"abelian", g.is_abelian()}};
}

json brace_summary(bf::SkewBrace const& b, bf::Limits const& limits) {
  bf::BraceFlags f = bf::classify_brace(b, limits);
  return {{"order", b.order()},
          {"additive", group_summary(b.add_group(), limits)},
          {"multiplicative", group_summary(b.mul_group(), limits)},
          {"validation", b.validation().mode.str()},
          {"trivial", f.is_trivial},
          {"almost_trivial", f.is_almost_trivial},
          {"two_sided", f.is_two_sided}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, skew braces and their verification suites"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Limits file (JSON or key = value lines)");

  bf::io::Config config;
  auto load = [&] {
    if (!config_path.empty()) config = bf::io::load_config(config_path);
  };
  int status = 0;

  // catalog
  auto* cat = app.add_subcommand("catalog", "Named groups");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  cat_list->callback([&] {
    for (auto const& e : bf::catalog_entries()) {
      std::cout << e.name << "\t" << e.expected_order << "\t"
                << (e.expected_label ? std::string(bf::to_string(*e.expected_label)) : "-")
                << (e.metadata_only ? "\tmetadata" : "")
                << (e.factorization.empty() ? "" : "\t" + e.factorization) << "\n";
    }
  });
  std::string cat_name, cat_out;
  auto* cat_build = cat->add_subcommand("build", "Build a catalog group");
  cat_build->add_option("name", cat_name)->required();
  cat_build->add_option("--out", cat_out, "Write the group as JSON");
  cat_build->callback([&] {
    load();
    bf::FiniteGroup g = bf::build_entry(bf::catalog_metadata(cat_name), config.limits);
    if (!cat_out.empty()) bf::io::write_json_file(cat_out, bf::io::group_to_json(g));
    std::cout << group_summary(g, config.limits).dump() << "\n";
  });

  // factorize
  std::string fac_group, fac_out;
  bf::Index fac_order = 0;
  auto* fac = app.add_subcommand("factorize", "Exact factorizations G = AB");
  fac->add_option("group", fac_group, "Group expression or JSON file")->required();
  fac->add_option("--order-a", fac_order, "|A|")->required();
  fac->add_option("--json", fac_out, "Write results as JSON ('-' for stdout)");
  fac->callback([&] {
    load();
    bf::FiniteGroup g = bf::io::load_group(fac_group, config.limits);
    auto fs = bf::find_exact_factorizations(g, fac_order, config.limits);
    json rows = json::array();
    for (auto const& f : fs)
      rows.push_back({{"left", f.left.generators()},
                      {"right", f.right.generators()},
                      {"left_order", f.left.order()},
                      {"right_order", f.right.order()}});
    if (!fac_out.empty())
      emit(rows, fac_out);
    else
      std::cout << fs.size() << " exact factorizations with |A| = " << fac_order << "\n";
  });

  // brace
  auto* br = app.add_subcommand("brace", "Construct skew braces");
  br->require_subcommand(1);
  std::string br_out;
  auto finish = [&](bf::SkewBrace const& b, json const& construction) {
    if (!br_out.empty()) bf::io::write_json_file(br_out, bf::io::brace_to_json(b, construction));
    json s = brace_summary(b, config.limits);
    s["construction"] = construction;
    std::cout << s.dump(2) << "\n";
  };

  std::string bff_group;
  bf::Index bff_order = 0;
  std::size_t bff_index = 0;
  auto* bff = br->add_subcommand("from-factorization", "Brace of an exact factorization");
  bff->add_option("group", bff_group)->required();
  bff->add_option("--order-a", bff_order)->required();
  bff->add_option("--index", bff_index, "Which factorization, in enumeration order");
  bff->add_option("--out", br_out);
  bff->callback([&] {
    load();
    bf::FiniteGroup g = bf::io::load_group(bff_group, config.limits);
    auto fs = bf::find_exact_factorizations(g, bff_order, config.limits);
    if (bff_index >= fs.size())
      throw bf::InvalidArgument("only " + std::to_string(fs.size()) + " factorizations");
    auto const& f = fs[bff_index];
    finish(bf::brace_from_factorization(f, config.limits),
           {{"kind", "factorization"},
            {"group", bff_group},
            {"left", f.left.generators()},
            {"right", f.right.generators()}});
  });

  std::string diag_simple = "A5";
  auto* diag = br->add_subcommand("diagonal", "Diagonal brace on S x S");
  diag->add_option("--simple", diag_simple);
  diag->add_option("--out", br_out);
  diag->callback([&] {
    load();
    finish(bf::diagonal_brace(bf::io::load_group(diag_simple, config.limits), config.limits),
           {{"kind", "diagonal"}, {"simple", diag_simple}});
  });

  std::string srch_add, srch_iso;
  double srch_budget = -1;
  std::size_t srch_max = 1;
  auto* srch = br->add_subcommand("search", "Regular subgroups of the holomorph");
  srch->add_option("--additive", srch_add)->required();
  srch->add_option("--mul-iso", srch_iso, "Required multiplicative group");
  srch->add_option("--budget-sec", srch_budget);
  srch->add_option("--max", srch_max, "Stop after this many subgroups");
  srch->add_option("--out", br_out, "Write the first brace found");
  srch->callback([&] {
    load();
    bf::FiniteGroup a = bf::io::load_group(srch_add, config.limits);
    bf::HolomorphGroup hol = bf::holomorph(a, config.limits);
    bf::RegularSearchOptions o;
    if (!srch_iso.empty()) o.iso_filter = bf::io::load_group(srch_iso, config.limits);
    o.budget = std::chrono::duration<double>(srch_budget >= 0 ? srch_budget
                                                              : config.search_budget_sec);
    o.max_results = srch_max;
    auto r = bf::find_regular_subgroups(hol, a.order(), o, config.limits);
    std::cout << json{{"found", r.found.size()},
                      {"complete", r.complete},
                      {"budget_exhausted", r.budget_exhausted},
                      {"nodes", r.nodes}}
                     .dump()
              << "\n";
    if (r.found.empty()) {
      status = kFail;
      return;
    }
    finish(bf::brace_from_regular_subgroup(hol, r.found.front(), config.limits),
           {{"kind", "regular"}, {"additive", srch_add}, {"by_point", r.found.front().by_point}});
  });

  std::string bcl_path;
  auto* bcl = br->add_subcommand("classify", "Summarize a brace JSON file");
  bcl->add_option("file", bcl_path)->required();
  bcl->callback([&] {
    load();
    auto b = bf::io::brace_from_json(bf::io::read_json_file(bcl_path), config.limits);
    std::cout << brace_summary(b, config.limits).dump(2) << "\n";
  });

  // nt
  auto* nt = app.add_subcommand("nt", "Number theory");
  nt->require_subcommand(1);
  std::string vp_m;
  std::uint64_t vp_p = 0;
  auto* vp = nt->add_subcommand("vp", "p-adic valuation of an integer");
  vp->add_option("m", vp_m)->required();
  vp->add_option("p", vp_p)->required();
  vp->callback([&] { std::cout << bf::nt::vp(bf::nt::BigInt(vp_m), vp_p).str() << "\n"; });
  unsigned e_n = 0;
  auto* e = nt->add_subcommand("e-of-n", "v_7 of |SL_n(3)|");
  e->add_option("n", e_n)->required();
  e->callback([&] { std::cout << bf::nt::e_of_n(e_n) << "\n"; });
  bf::nt::ScanBox box;
  std::string scan_json;
  auto* scan = nt->add_subcommand("scan", "Solve p^{fn} - 1 = 2^t (p^f - 1) in a box");
  scan->add_option("--pmax", box.p_max);
  scan->add_option("--fmax", box.f_max);
  scan->add_option("--nmax", box.n_max);
  scan->add_option("--tmax", box.t_max);
  scan->add_option("--json", scan_json, "Write results as JSON ('-' for stdout)");
  scan->callback([&] {
    auto r = bf::nt::diophantine_scan(box);
    json sols = json::array();
    for (auto const& s : r.solutions) sols.push_back({s.p, s.f, s.n, s.t});
    if (!scan_json.empty()) {
      emit({{"solutions", sols}, {"notes", r.notes}}, scan_json);
      return;
    }
    for (auto const& s : r.solutions)
      std::cout << "(" << s.p << "," << s.f << "," << s.n << "," << s.t << ")\n";
    for (auto const& n : r.notes) std::cout << "note: " << n << "\n";
  });

  // verify
  std::string suite, ver_json, ver_seed;
  unsigned parallel = 1;
  bool timings = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(bf::verify::suite_names()));
  ver->add_option("--json", ver_json, "Write the report as JSON ('-' for stdout)");
  ver->add_option("--seed", ver_seed, "Sampling seed (decimal or 0x hex)");
  ver->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--timings", timings, "Include elapsed_ms in the JSON report");
  ver->callback([&] {
    load();
    if (!ver_seed.empty()) config.limits.seed = parse_seed(ver_seed);
    auto report = bf::verify::run_suite(suite, config, parallel);
    bool quiet = ver_json == "-";
    if (!quiet) {
      for (auto const& c : report.checks) {
        std::string tag = c.verdict == bf::verify::Verdict::pass   ? "PASS"
                          : c.verdict == bf::verify::Verdict::fail ? "FAIL"
                                                                   : "SKIP";
        std::cout << tag << "  " << c.name;
        if (c.verdict != bf::verify::Verdict::pass && !c.detail.empty())
          std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
      std::cout << report.suite << ": " << report.count(bf::verify::Verdict::pass) << " pass, "
                << report.count(bf::verify::Verdict::fail) << " fail, "
                << report.count(bf::verify::Verdict::skipped) << " skipped\n";
    }
    if (!ver_json.empty()) emit(report.to_json(timings), ver_json);
    if (!report.passed()) status = kFail;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (bf::InvalidArgument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return status;
}
