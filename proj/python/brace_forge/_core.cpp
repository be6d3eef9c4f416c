#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brace_forge/brace.hpp"
#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/io.hpp"
#include "brace_forge/isomorphism.hpp"
#include "brace_forge/numtheory.hpp"
#include "brace_forge/structure.hpp"
#include "brace_forge/verify.hpp"

namespace py = pybind11;
using namespace brace_forge;

namespace {

std::optional<std::uint64_t> valuation(std::string const& m, std::uint64_t p) {
  return nt::vp(nt::BigInt(m), p).value;
}

py::dict flags_dict(BraceFlags const& f) {
  py::dict d;
  d["trivial"] = f.is_trivial;
  d["almost_trivial"] = f.is_almost_trivial;
  d["two_sided"] = f.is_two_sided;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<LawViolation>(m, "LawViolation", PyExc_ArithmeticError);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("label", [](FiniteGroup const& g) { return std::string(to_string(classify(g))); })
      .def("to_json", [](FiniteGroup const& g) { return io::group_to_json(g).dump(); });

  m.def("parse_group", [](std::string const& expr) { return parse_group(expr); },
        py::arg("expr"));
  m.def("group_from_json",
        [](std::string const& text) { return io::group_from_json(nlohmann::json::parse(text)); });
  m.def("are_isomorphic", [](FiniteGroup const& a, FiniteGroup const& b) {
    return are_isomorphic(a, b);
  });
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (auto const& e : catalog_entries()) out.push_back(e.name);
    return out;
  });

  py::class_<SkewBrace>(m, "Brace")
      .def_property_readonly("order", &SkewBrace::order)
      .def_property_readonly("additive", &SkewBrace::add_group)
      .def_property_readonly("multiplicative", &SkewBrace::mul_group)
      .def("add", &SkewBrace::add)
      .def("mul", &SkewBrace::mul)
      .def("lam", &SkewBrace::lambda, py::arg("b"), py::arg("a"))
      .def("star", &SkewBrace::star)
      .def("flags", [](SkewBrace const& b) { return flags_dict(classify_brace(b)); })
      .def("to_json", [](SkewBrace const& b) { return io::brace_to_json(b).dump(); });

  m.def("build_brace",
        [](std::string const& text) { return io::build_brace(nlohmann::json::parse(text)); });
  m.def("triv", [](FiniteGroup const& g) { return triv(g); });
  m.def("a_triv", [](FiniteGroup const& g) { return a_triv(g); });
  m.def("brace_from_factorization", [](FiniteGroup const& g, Index order_a, std::size_t index) {
    auto fs = find_exact_factorizations(g, order_a);
    if (index >= fs.size()) throw InvalidArgument("no exact factorization with that index");
    return brace_from_factorization(fs[index]);
  }, py::arg("group"), py::arg("order_a"), py::arg("index") = 0);
  m.def("diagonal_brace", [](FiniteGroup const& s) { return diagonal_brace(s); });

  m.def("vp", &valuation, py::arg("m"), py::arg("p"));
  m.def("legendre", &nt::legendre);
  m.def("e_of_n", &nt::e_of_n);
  m.def("is_prime", &nt::is_prime);
  m.def("diophantine_scan", [](std::uint64_t pmax, unsigned fmax, unsigned nmax, unsigned tmax) {
    nt::ScanResult r = nt::diophantine_scan({pmax, fmax, nmax, tmax});
    std::vector<std::tuple<std::uint64_t, unsigned, unsigned, unsigned>> out;
    for (auto const& s : r.solutions) out.emplace_back(s.p, s.f, s.n, s.t);
    return out;
  }, py::arg("pmax") = 200, py::arg("fmax") = 6, py::arg("nmax") = 12, py::arg("tmax") = 64);

  m.def("suite_names", &verify::suite_names);
  m.def("run_suite", [](std::string const& name, unsigned parallel) {
    py::gil_scoped_release release;
    return verify::run_suite(name, {}, parallel).to_json().dump();
  }, py::arg("name"), py::arg("parallel") = 1);
}
