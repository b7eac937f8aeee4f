#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isg/catalog.hpp"
#include "isg/certifier.hpp"
#include "isg/error.hpp"
#include "isg/group_io.hpp"
#include "isg/intersection_graph.hpp"
#include "isg/witness.hpp"

namespace py = pybind11;
using namespace isg;

namespace {

// Orders cross the boundary as decimal strings; the Python layer turns them
// into ints.
Order to_order(const py::int_& value) {
  return Order(value.attr("__str__")().cast<std::string>());
}

GeneratedGroup group_of(std::size_t degree, const std::vector<std::string>& generators) {
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.push_back(parse_cycles(g, degree));
  return GeneratedGroup(degree, std::move(perms));
}

std::string analyze_catalog(const std::vector<std::string>& tokens, std::size_t threads) {
  auto g = catalog(parse_catalog_spec(tokens));
  auto a = analyze_group(g, Budgets{}, threads);
  nlohmann::ordered_json j;
  j["order"] = build_chain(g).order().str();
  j["vertices"] = a.graph.vertex_count();
  j["edges"] = a.graph.edge_count();
  j["components"] = a.graph.component_count();
  j["diameter"] = a.diameter.connected ? nlohmann::ordered_json(a.diameter.value)
                                        : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text, std::size_t degree) {
             return parse_cycles(text, degree);
           }),
           py::arg("cycles"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("order", [](const Permutation& p) { return element_props(p).order; })
      .def("is_even", [](const Permutation& p) { return is_even(p); })
      .def("inverse", &Permutation::inverse)
      .def("conjugate", [](const Permutation& p, const Permutation& s) { return conjugate(p, s); })
      .def("__call__", [](const Permutation& p, std::size_t x) {
        if (x < 1 || x > p.degree()) throw InvalidArgument("point out of range");
        return static_cast<std::size_t>(p(static_cast<Point>(x - 1))) + 1;
      })
      .def("__mul__", [](const Permutation& p, const Permutation& q) { return p * q; })
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); })
      .def("__str__", &Permutation::to_cycles)
      .def("__repr__", [](const Permutation& p) {
        return "Permutation('" + p.to_cycles() + "', " + std::to_string(p.degree()) + ")";
      });

  m.def("_group_order", [](std::size_t degree, const std::vector<std::string>& generators) {
    return build_chain(group_of(degree, generators)).order().str();
  });
  m.def("_catalog_order", [](const std::vector<std::string>& tokens) {
    return build_chain(catalog(parse_catalog_spec(tokens))).order().str();
  });
  m.def("_analyze", &analyze_catalog, py::arg("tokens"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("diam2_criterion", [](const std::vector<std::string>& tokens) {
    return diam2_criterion(catalog(parse_catalog_spec(tokens))).holds;
  });
  m.def("_certify", [](const std::string& path, std::size_t threads) {
    py::gil_scoped_release release;
    return certificate_to_json(distance_class(load_witness_file(path), {Budgets{}.elements, threads}),
                               false).dump();
  });
  m.def("_theorem2_pair", [](std::size_t n) {
    py::gil_scoped_release release;
    return certificate_to_json(verify_theorem2_pair(n), false).dump();
  });
  m.def("_admissibility", [](std::size_t n) {
    auto a = is_theorem2_prime(n);
    nlohmann::ordered_json j;
    j["n"] = a.n;
    j["prime"] = a.prime;
    j["admissible"] = a.admissible;
    j["representation"] = a.representation
                              ? nlohmann::ordered_json::array({a.representation->first,
                                                               a.representation->second})
                              : nlohmann::ordered_json(nullptr);
    j["explanation"] = a.explanation;
    return j.dump();
  });
  m.def("order_product_forces_intersection",
        [](const py::int_& o1, const py::int_& o2, const py::int_& og) {
          return order_product_forces_intersection(to_order(o1), to_order(o2), to_order(og));
        });
}
