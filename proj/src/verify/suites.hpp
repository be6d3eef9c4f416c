#ifndef BRACE_FORGE_VERIFY_SUITES_HPP_
#define BRACE_FORGE_VERIFY_SUITES_HPP_

#include "brace_forge/numtheory.hpp"
#include "brace_forge/structure.hpp"
#include "brace_forge/verify.hpp"

namespace brace_forge::verify::detail {

std::string label_name(ClassificationLabel label);
Outcome law_outcome(SkewBrace const& b);
Outcome nontrivial_outcome(SkewBrace const& b, Limits const& limits);
Outcome label_outcome(FiniteGroup const& g, ClassificationLabel want, Limits const& limits);
Outcome iso_outcome(FiniteGroup const& g, std::string const& expr, Limits const& limits);

std::vector<Task> theorem_d_tasks();
std::vector<Task> gl23_aut_tasks();
std::vector<Task> psl27_tasks();
std::vector<Task> two_sided_tasks();
std::vector<Task> numtheory_tasks();
std::vector<Task> brace_axiom_tasks();

}  // namespace brace_forge::verify::detail

#endif  // BRACE_FORGE_VERIFY_SUITES_HPP_
