// Python bindings over the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "coxalt/complex.hpp"
#include "coxalt/evenleaf.hpp"
#include "coxalt/genfun.hpp"
#include "coxalt/poset.hpp"
#include "coxalt/verify.hpp"

namespace py = pybind11;
using namespace coxalt;

namespace {

struct Session {
  CoxeterSystem sys;
  std::shared_ptr<const GroupTable> table;
  std::shared_ptr<const AltGroup> alt;

  explicit Session(const std::string& text, int cap) {
    sys = parse_system(text);
    table = std::make_shared<GroupTable>(
        std::make_shared<RootSystem>(build_roots(sys, cap)), cap);
    alt = std::make_shared<AltGroup>(table);
  }
};

}  // namespace

PYBIND11_MODULE(_coxalt, m) {
  m.doc() = "exact computations for the alternating subgroup of a Coxeter system";

  py::register_exception<Error>(m, "CoxalError");

  m.def("classify", [](const std::string& text) {
    NodeClass nc = classify_node(parse_system(text));
    py::dict d;
    d["evenly_laced"] = nc.evenly_laced;
    d["leaf"] = nc.leaf;
    d["even_leaf"] = nc.even_leaf;
    if (nc.neighbor) d["neighbor"] = *nc.neighbor;
    return d;
  });

  m.def("derive_prime",
        [](const std::string& text) { return serialize_system(derive_prime(parse_system(text)).sys); });

  m.def("serialize", [](const std::string& text) { return serialize_system(parse_system(text)); });

  py::class_<Session>(m, "Group")
      .def(py::init<const std::string&, int>(), py::arg("text"), py::arg("cap") = 100000)
      .def_property_readonly("order", [](const Session& s) { return s.table->size(); })
      .def_property_readonly("alt_order", [](const Session& s) { return s.alt->size(); })
      .def_property_readonly("num_reflections",
                             [](const Session& s) { return s.table->roots().num_roots(); })
      .def("ell_r_values",
           [](const Session& s) {
             std::vector<int> out;
             for (int p = 0; p < s.alt->size(); ++p) out.push_back(s.alt->ell_r(p));
             return out;
           })
      .def("elements",
           [](const Session& s) {
             std::vector<std::string> out;
             for (int p = 0; p < s.alt->size(); ++p) out.push_back(s.alt->display(p));
             return out;
           })
      .def("poincare_plus", [](const Session& s) { return gf_ellr_plus(*s.alt).to_string(); })
      .def("poincare_full", [](const Session& s) { return gf_length_s(*s.table).to_string(); })
      .def("poincare_quotient",
           [](const Session& s) { return gf_plus_from_quotient(*s.table).to_string(); })
      .def("descent_gf", [](const Session& s) { return gf_hatdes_ellr_plus(*s.alt).to_string(); })
      .def("table_tsv",
           [](const Session& s) { return EvenLeafCorrespondence(s.alt).table_tsv(); })
      .def("poset_dot",
           [](const Session& s, const std::string& flavor) {
             return poset_dot(*s.alt, flavor_from_name(flavor));
           })
      .def("complex_facets",
           [](const Session& s) { return complex_facets_text(build_complex(*s.alt)); })
      .def("homology_ranks", [](const Session& s) {
        return homology(build_complex(*s.alt)).reduced_betti;
      });

  m.def("closed_type_a_plus", [](int n) { return closed_typeA_plus(n).to_string(); });
  m.def("q_bracket", [](int n) { return q_bracket(n).to_string(); });
  m.def("q_factorial", [](int n) { return q_factorial(n).to_string(); });
  m.def(
      "affine_series",
      [](const std::string& type, int n, int trunc) {
        AffineType t = type == "affine-C" ? AffineType::CTildePlus : AffineType::BTildePlus;
        return affine_series(t, n, trunc).to_string();
      },
      py::arg("type"), py::arg("n"), py::arg("trunc") = 8);

  m.def("verify", [](const std::string& text) {
    std::map<std::string, std::string> out;
    for (const CheckResult& r : run_verify(parse_system(text))) {
      switch (r.status) {
        case CheckResult::Status::Pass: out[r.name] = "pass"; break;
        case CheckResult::Status::Fail: out[r.name] = "fail: " + r.detail; break;
        case CheckResult::Status::Skip: out[r.name] = "skip: " + r.detail; break;
      }
    }
    return out;
  });
}
