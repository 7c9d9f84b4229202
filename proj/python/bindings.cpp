#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphereint/errors.hpp"
#include "sphereint/model_graph.hpp"
#include "sphereint/normal_sphere.hpp"
#include "sphereint/sides.hpp"
#include "sphereint/sphere_complex.hpp"

namespace py = pybind11;
using namespace sphereint;

namespace {

EdgeIndex edge_by_name(const ModelGraph& g, const std::string& dart) {
  auto e = g.find_edge(dart);
  if (!e) throw Error(ErrorKind::ForeignVertex, "unknown edge '" + dart + "'");
  return *e;
}

StandardStyle style_by_name(const std::string& name) {
  auto s = parse_style(name);
  if (!s) throw py::value_error("unknown style '" + name + "'");
  return *s;
}

py::dict intersection_dict(const ModelGraph& g, const IntersectionResult& r) {
  py::list witnesses;
  for (const auto& h : r.witnesses) witnesses.append(word_to_string(g, h.word));
  py::dict d;
  d["count"] = r.count;
  d["candidates"] = r.candidates;
  d["witnesses"] = witnesses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal spheres in connected sums of S2xS1";

  py::register_exception<Error>(m, "SphereError", PyExc_ValueError);
  // Same class, with the error name attached as `kind`.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("sphereint._core").attr("SphereError");
      py::object exc = cls(e.what());
      exc.attr("kind") = std::string(e.name());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  py::class_<ModelGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("standard", [](int rank, const std::string& style) {
        return ModelGraph::standard(rank, style_by_name(style));
      }, py::arg("rank"), py::arg("style") = "theta-chain")
      .def_property_readonly("rank", &ModelGraph::rank)
      .def_property_readonly("pants_count", &ModelGraph::pants_count)
      .def_property_readonly("edge_count", &ModelGraph::edge_count)
      .def("edge_names", [](const ModelGraph& g) {
        std::vector<std::string> out;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) out.push_back(g.edge_name(e));
        return out;
      })
      .def("serialize", [](const ModelGraph& g) { return serialize(g); })
      .def("__eq__", [](const ModelGraph& a, const ModelGraph& b) { return a == b; });

  py::class_<NormalSphere>(m, "Sphere")
      .def_property_readonly("is_system", &NormalSphere::is_system)
      .def_property_readonly("circle_count", [](const NormalSphere& s) { return s.circles().size(); })
      .def_property_readonly("disks", &NormalSphere::disk_count)
      .def_property_readonly("cylinders", &NormalSphere::cylinder_count)
      .def_property_readonly("pants_pieces", &NormalSphere::pants_piece_count)
      .def("__eq__", [](const NormalSphere& a, const NormalSphere& b) { return a == b; })
      .def("__lt__", [](const NormalSphere& a, const NormalSphere& b) { return a < b; });

  m.def("parse_sphere", [](const ModelGraph& g, const std::string& text) { return parse_sphere(g, text); });
  m.def("serialize_sphere", [](const ModelGraph& g, const NormalSphere& s) { return serialize(g, s); });
  m.def("system_sphere", [](const ModelGraph& g, const std::string& edge) {
    return SphereClass::of_edge(g, edge_by_name(g, edge)).rep();
  });
  m.def("canonical", &canonical_rep);
  m.def("translate", [](const ModelGraph& g, const NormalSphere& s, const std::string& word) {
    return translate(g, s, parse_deck_word(g, word));
  });
  m.def("circles_over", [](const ModelGraph& g, const NormalSphere& s, const std::string& edge) {
    return circle_count_over(g, s, edge_by_name(g, edge));
  });
  m.def("crosses", [](const ModelGraph& g, const NormalSphere& a, const NormalSphere& b) {
    return crossing(g, a, b).crosses;
  });
  m.def("intersect", [](const ModelGraph& g, const NormalSphere& a, const NormalSphere& b) {
    return intersection_dict(g, algebraic_intersection(g, SphereClass::of(g, a), SphereClass::of(g, b)));
  });
  m.def("theorem_check", [](const ModelGraph& g, const NormalSphere& a) {
    py::list rows;
    const SphereClass c = SphereClass::of(g, a);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const EdgeCheck row = theorem_row(g, c, e);
      py::dict d;
      d["edge"] = g.edge_name(e);
      d["circles"] = row.circles;
      d["algebraic"] = row.algebraic;
      d["equal"] = row.equal();
      rows.append(d);
    }
    return rows;
  });
  m.def("is_embedded", &is_self_disjoint);
  m.def("enumerate", [](const ModelGraph& g, int max_circles) {
    std::vector<NormalSphere> out;
    for (const auto& c : enumerate(g, max_circles)) out.push_back(c.rep());
    return out;
  }, py::arg("graph"), py::arg("max_circles"));
  m.def("complex_edges", [](const ModelGraph& g, int max_circles) {
    const SphereComplex c = build_complex(g, max_circles);
    std::vector<NormalSphere> vertices;
    for (const auto& v : c.vertices) vertices.push_back(v.rep());
    return py::make_tuple(vertices, c.edges);
  });
  m.def("complex_dot", [](const ModelGraph& g, int max_circles) {
    return to_dot(g, build_complex(g, max_circles));
  });
}
