#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "brace_forge/verify.hpp"

namespace brace_forge::verify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool Report::passed() const { return count(Verdict::fail) == 0; }

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (auto const& c : checks) n += c.verdict == v;
  return n;
}

json Report::to_json(bool timings) const {
  char seed[32];
  std::snprintf(seed, sizeof seed, "0x%llX", static_cast<unsigned long long>(limits.seed));
  json cs = json::array();
  for (auto const& c : checks) {
    json j = {{"name", c.name},
              {"paper_anchor", c.anchor},
              {"verdict", to_string(c.verdict)},
              {"witness", c.witness},
              {"mode", c.mode}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (timings) j["elapsed_ms"] = c.elapsed_ms;
    cs.push_back(std::move(j));
  }
  return {{"suite", suite},
          {"seed", seed},
          {"limits",
           {{"full_check_cap", limits.full_check_cap},
            {"pair_check_cap", limits.pair_check_cap},
            {"subgroup_cap", limits.subgroup_cap},
            {"aut_cap", limits.aut_cap},
            {"iso_cap", limits.iso_cap},
            {"sample_count", limits.sample_count}}},
          {"checks", cs},
          {"summary",
           {{"pass", count(Verdict::pass)},
            {"fail", count(Verdict::fail)},
            {"skipped", count(Verdict::skipped)}}}};
}

void Sink::check(std::string name, std::string anchor, std::function<Outcome()> const& body) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    c.verdict = o.ok ? Verdict::pass : Verdict::fail;
    c.witness = std::move(o.witness);
    c.mode = std::move(o.mode);
    c.detail = std::move(o.detail);
    if (!o.ok && c.witness.is_null()) c.witness = {{"detail", c.detail}};
  } catch (CapExceeded const& e) {
    c.verdict = Verdict::skipped;
    c.mode = "n/a";
    c.detail = e.what();
  } catch (LawViolation const& e) {
    c.verdict = Verdict::fail;
    c.witness = {{"law", e.law()}, {"elements", e.witness()}};
    c.detail = e.what();
  } catch (std::exception const& e) {
    c.verdict = Verdict::fail;
    c.witness = {{"exception", e.what()}};
    c.detail = e.what();
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
  checks_.push_back(std::move(c));
}

void Sink::skip(std::string name, std::string anchor, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.verdict = Verdict::skipped;
  c.mode = "n/a";
  c.detail = std::move(reason);
  checks_.push_back(std::move(c));
}

Report run_suite(std::string const& name, io::Config const& config, unsigned parallel) {
  std::vector<Task> tasks = suite_tasks(name);
  std::vector<Sink> sinks(tasks.size(), Sink(config));
  auto run_task = [&](std::size_t i) {
    try {
      tasks[i](sinks[i]);
    } catch (std::exception const& e) {
      sinks[i].check("task " + std::to_string(i) + " setup", "plumbing", [&]() -> Outcome {
        return {false, {{"exception", e.what()}}, "n/a", e.what()};
      });
    }
  };
  if (parallel <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned k = std::min<unsigned>(parallel, tasks.size());
    for (unsigned t = 0; t < k; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < tasks.size();) run_task(i);
      });
    for (auto& th : pool) th.join();
  }
  Report r{name, config.limits, {}};
  for (auto& s : sinks)
    for (auto& c : s.checks()) r.checks.push_back(std::move(c));
  return r;
}

}  // namespace brace_forge::verify
