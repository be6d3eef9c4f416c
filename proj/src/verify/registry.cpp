#include "suites.hpp"

namespace brace_forge::verify {

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = {"theorem-d",         "gl23-aut",
                                                  "psl27-facts",       "two-sided-rigidity",
                                                  "numtheory-lemmas", "brace-axioms"};
  return names;
}

std::vector<Task> suite_tasks(std::string const& name) {
  using namespace detail;
  if (name == "theorem-d") return theorem_d_tasks();
  if (name == "gl23-aut") return gl23_aut_tasks();
  if (name == "psl27-facts") return psl27_tasks();
  if (name == "two-sided-rigidity") return two_sided_tasks();
  if (name == "numtheory-lemmas") return numtheory_tasks();
  if (name == "brace-axioms") return brace_axiom_tasks();
  throw InvalidArgument("unknown suite: " + name);
}

}  // namespace brace_forge::verify
