#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lineroot/line_graph.hpp"
#include "lineroot/reconstruct.hpp"
#include "lineroot/text_format.hpp"
#include "lineroot/twins.hpp"

namespace py = pybind11;
using namespace lineroot;

namespace {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

std::vector<Endpoints> to_endpoints(const PairList& pairs) {
  std::vector<Endpoints> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

PairList to_pairs(std::span<const Endpoints> edges) {
  PairList out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

struct NotLineGraphError {};

}  // namespace

PYBIND11_MODULE(_lineroot, m) {
  m.doc() = "Roots of line graphs of multigraphs";

  static py::exception<NotLineGraphError> not_line_error(m, "NotLineGraphError", PyExc_ValueError);

  py::enum_<LineMode>(m, "LineMode").value("L1", LineMode::l1).value("GEQ1", LineMode::geq1);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init([](std::size_t n, const PairList& edges) { return MultiGraph(n, to_endpoints(edges)); }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
      .def_property_readonly("edge_count", &MultiGraph::edge_count)
      .def_property_readonly("edges", [](const MultiGraph& g) { return to_pairs(g.edges()); })
      .def("degree", &MultiGraph::degree)
      .def("is_connected", [](const MultiGraph& g) { return is_connected(g); })
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "MultiGraph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) +
               " edges)";
      });

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def(py::init([](std::size_t n, const PairList& edges) {
             auto e = to_endpoints(edges);
             return SimpleGraph(n, e);
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &SimpleGraph::vertex_count)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def_property_readonly("edges", [](const SimpleGraph& g) { return to_pairs(g.edge_list()); })
      .def("neighbors",
           [](const SimpleGraph& g, VertexId v) {
             auto n = g.neighbors(v);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("adjacent", &SimpleGraph::adjacent)
      .def("is_connected", [](const SimpleGraph& g) { return is_connected(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) {
        return "SimpleGraph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) +
               " edges)";
      });

  py::class_<RootResult>(m, "RootResult")
      .def_readonly("mode", &RootResult::mode)
      .def_readonly("root", &RootResult::root)
      .def_readonly("vertex_to_edge", &RootResult::vertex_to_edge)
      .def_readonly("class_of", &RootResult::class_of);

  auto raise = [](const Failure& f) -> py::object {
    if (f.kind == ErrorKind::not_line_graph) {
      PyErr_SetString(not_line_error.ptr(), f.message.c_str());
      throw py::error_already_set();
    }
    throw py::value_error(f.message);
  };

  m.def("l1_line_graph", &l1_line_graph);
  m.def("geq1_line_graph", &geq1_line_graph);
  m.def(
      "reconstruct_root",
      [raise](const SimpleGraph& gamma, LineMode mode) -> RootResult {
        auto r = reconstruct_root(gamma, mode);
        if (!r) raise(r.error());
        return std::move(r).value();
      },
      py::arg("gamma"), py::arg("mode") = LineMode::l1,
      "Canonical root; raises NotLineGraphError or ValueError.");
  m.def("verify", &verify);
  m.def("find_delta0", [](const MultiGraph& g) -> std::optional<std::tuple<VertexId, VertexId, VertexId>> {
    auto w = find_delta0(g);
    if (!w) return std::nullopt;
    return std::make_tuple(w->x, w->y, w->z);
  });
  m.def("is_delta0_free", &is_delta0_free);
  m.def("delta0_collapse", [raise](const MultiGraph& g) -> MultiGraph {
    auto r = delta0_collapse(g);
    if (!r) raise(r.error());
    return std::move(r).value();
  });
  m.def("satisfies_glg_conditions", &satisfies_glg_conditions);
  m.def("is_generalized_line_graph", [raise](const SimpleGraph& gamma) -> std::optional<RootResult> {
    auto r = is_generalized_line_graph(gamma);
    if (!r) raise(r.error());
    return std::move(r).value();
  });
  m.def(
      "twin_classes",
      [](const SimpleGraph& g, bool true_twins) {
        auto p = twin_partition(g, true_twins ? TwinKind::true_twin : TwinKind::false_twin);
        return std::vector<std::uint32_t>(p.class_of().begin(), p.class_of().end());
      },
      py::arg("graph"), py::arg("true_twins") = false);

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MalformedInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  m.def("parse_multigraph", [](const std::string& s) { return parse_multigraph(s); });
  m.def("parse_simple_graph", [](const std::string& s) { return parse_simple_graph(s); });
  m.def("parse_root", [](const std::string& s) { return parse_root(s); });
  m.def("format_multigraph", &format_multigraph);
  m.def("format_simple_graph", &format_simple_graph);
  m.def("emit_root", [](const RootResult& r) { return emit_root(r); });
}
