#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mla/catalog.hpp"
#include "mla/cli.hpp"
#include "mla/families.hpp"

namespace py = pybind11;
using namespace mla;

namespace {

using Rows = std::vector<std::vector<Elem>>;

StarTable as_star(const GroupTable& g, const Rows& rows) {
  if (rows.size() != g.order()) throw Error(ErrorKind::Format, "star has wrong shape");
  for (const auto& r : rows)
    if (r.size() != g.order()) throw Error(ErrorKind::Format, "star has wrong shape");
  return StarTable::from_rows(rows);
}

py::list violations(const std::vector<Violation>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::dict d;
    d["label"] = v.label;
    d["witness"] = v.witness;
    d["left"] = v.left;
    d["right"] = v.right;
    out.append(d);
  }
  return out;
}

py::dict series(const SeriesReport& r) {
  py::dict d;
  py::list terms;
  for (const auto& t : r.terms) terms.append(t.elements());
  d["terms"] = terms;
  d["reaches_identity"] = r.reaches_identity;
  d["length"] = r.length ? py::cast(*r.length) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplicative Lie algebra structures on finite groups";
  py::register_exception<Error>(m, "MlaError", PyExc_ValueError);

  py::class_<GroupTable>(m, "Group")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("name", &GroupTable::name)
      .def_property_readonly("identity", &GroupTable::identity)
      .def("table", &GroupTable::rows)
      .def("mul", &GroupTable::mul)
      .def("inv", &GroupTable::inv)
      .def("is_abelian", &GroupTable::is_abelian)
      .def("is_class2", [](const GroupTable& g) { return is_class2(g); })
      .def("__eq__", [](const GroupTable& a, const GroupTable& b) { return a == b; })
      .def("__repr__", [](const GroupTable& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("family", &construct_standard_group, py::arg("spec"));
  m.def("validate_group", &validate_group, py::arg("table"), py::arg("name") = "");
  m.def("catalog", [] {
    py::list out;
    for (const auto& e : standard_catalog()) out.append(py::make_tuple(e.name, e.order, e.class2));
    return out;
  });

  m.def("trivial_star", [](const GroupTable& g) { return trivial_star(g).rows(); });
  m.def("improper_star", [](const GroupTable& g) { return improper_star(g).rows(); });
  m.def("check_axioms", [](const GroupTable& g, const Rows& s) {
    return violations(check_mla_axioms(g, as_star(g, s)));
  });
  m.def("check_identities", [](const GroupTable& g, const Rows& s) {
    return violations(check_derived_identities(g, as_star(g, s)));
  });
  m.def("series", [](const GroupTable& g, const Rows& rows) {
    const StarTable s = as_star(g, rows);
    py::dict d;
    for (auto r : {gamma_series(g, s, false), gamma_series(g, s, true), lie_series(g, s, false),
                   lie_series(g, s, true)})
      d[py::str(to_string(r.kind))] = series(r);
    return d;
  });
  m.def("class2_report", [](const GroupTable& g, const Rows& rows) {
    const Class2Report r = class2_property_report(g, as_star(g, rows));
    py::dict d;
    d["commutator_star_trivial"] = r.commutator_star_trivial.holds;
    d["star_span_abelian"] = r.star_span_abelian.holds;
    d["lie_span_abelian"] = r.lie_span_abelian.holds;
    d["mz_star_central"] = r.mz_star_central.holds;
    d["star_kills_commutators"] = r.star_kills_commutators.holds;
    return d;
  });
  m.def("combine", [](const GroupTable& g, const Rows& a, const Rows& b) {
    return combine_structures(g, as_star(g, a), as_star(g, b)).star().rows();
  });

  m.def(
      "enumerate_stars",
      [](const GroupTable& g, std::optional<double> budget, std::optional<std::size_t> max_solutions) {
        SearchOptions o;
        if (budget) o.time_budget_seconds = *budget;
        o.max_solutions = max_solutions;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_stars(g, o);
        }
        py::list stars;
        for (const auto& s : r.stars) stars.append(s.rows());
        py::dict d;
        d["stars"] = stars;
        d["complete"] = r.complete;
        d["nodes"] = r.nodes;
        return d;
      },
      py::arg("group"), py::arg("budget") = py::none(), py::arg("max_solutions") = py::none());
  m.def("abelian_bracket_oracle", [](const GroupTable& g) {
    py::list out;
    for (const auto& s : abelian_bracket_oracle(g)) out.append(s.rows());
    return out;
  });
  m.def("automorphisms", [](const GroupTable& g) { return automorphism_group(g); });

  m.def("build_extension", [](const std::string& text) {
    const ExtensionData e = extension_from_json(Json::parse(text));
    const Mla built = build_star_from_extension(e);
    return py::make_tuple(built.group(), built.star().rows());
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
