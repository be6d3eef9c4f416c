#ifndef BRACE_FORGE_VERIFY_HPP_
#define BRACE_FORGE_VERIFY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "brace_forge/io.hpp"

namespace brace_forge::verify {

using json = nlohmann::json;

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v);

struct Check {
  std::string name;
  std::string anchor;  // formula the check reproduces, or "plumbing"
  Verdict verdict = Verdict::pass;
  json witness;        // null when not applicable
  std::string mode = "exhaustive";
  std::string detail;
  double elapsed_ms = 0;
};

struct Report {
  std::string suite;
  Limits limits;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(Verdict v) const;
  /// elapsed_ms is included only when `timings` is set, so that reports
  /// are byte-identical across runs otherwise.
  json to_json(bool timings = false) const;
};

/// What a check body returns.
struct Outcome {
  Outcome() = default;
  Outcome(bool ok_, json witness_ = nullptr, std::string mode_ = "exhaustive",
          std::string detail_ = {})
      : ok(ok_), witness(std::move(witness_)), mode(std::move(mode_)), detail(std::move(detail_)) {}

  bool ok = false;
  json witness;
  std::string mode = "exhaustive";
  std::string detail;
};

/// Collects checks; exceptions from a body become a fail, CapExceeded a
/// skip.
class Sink {
 public:
  explicit Sink(io::Config const& config) : config_(config) {}

  Limits const& limits() const { return config_.limits; }
  io::Config const& config() const { return config_; }

  void check(std::string name, std::string anchor, std::function<Outcome()> const& body);
  void skip(std::string name, std::string anchor, std::string reason);

  std::vector<Check>& checks() { return checks_; }

 private:
  io::Config config_;
  std::vector<Check> checks_;
};

using Task = std::function<void(Sink&)>;

std::vector<std::string> const& suite_names();
/// Independent tasks of a suite, in report order.
std::vector<Task> suite_tasks(std::string const& name);

/// Runs every task (on `parallel` threads when > 1) and concatenates the
/// checks in task order. Throws InvalidArgument for an unknown suite.
Report run_suite(std::string const& name, io::Config const& config = {}, unsigned parallel = 1);

}  // namespace brace_forge::verify

#endif  // BRACE_FORGE_VERIFY_HPP_
