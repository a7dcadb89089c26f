#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stashpeel/gadget_checks.hpp"
#include "stashpeel/gadgets.hpp"
#include "stashpeel/peeling.hpp"
#include "stashpeel/random.hpp"
#include "stashpeel/reductions.hpp"
#include "stashpeel/stash_solvers.hpp"
#include "stashpeel/text_format.hpp"

namespace py = pybind11;
using namespace stashpeel;

namespace {

// Ids cross the boundary as plain ints.
template <class Ids>
std::vector<std::uint32_t> raw(const Ids& ids) {
  std::vector<std::uint32_t> out;
  for (const auto& id : ids) out.push_back(id.value);
  return out;
}

StashMode mode_of(const std::string& mode) {
  if (mode == "vertex") return StashMode::vertex;
  if (mode == "edge") return StashMode::edge;
  throw ParameterError("mode must be 'vertex' or 'edge'");
}

TieBreak tie_of(const std::string& tie) {
  if (tie == "max-degree") return TieBreak::max_degree;
  if (tie == "min-id") return TieBreak::min_id;
  if (tie == "random") return TieBreak::seeded_random;
  throw ParameterError("tie must be 'max-degree', 'min-id' or 'random'");
}

py::dict trace_dict(const PeelTrace& t) {
  py::dict d;
  d["k"] = t.k;
  d["peeled_vertices"] = raw(t.peeled_vertices);
  d["peeled_edges"] = raw(t.peeled_edges);
  d["core_vertices"] = raw(t.core_vertices);
  d["core_edges"] = raw(t.core_edges);
  return d;
}

py::object result_dict(const std::optional<StashResult>& r) {
  if (!r) return py::none();
  py::dict d;
  d["kind"] = r->kind == StashMode::vertex ? "vertex" : "edge";
  d["stash"] = r->stash;
  d["size"] = r->size();
  d["optimal"] = r->optimal;
  d["residual_core_empty"] = r->residual_core_empty;
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_stashpeel, m) {
  m.doc() = "k-core peeling, minimum stashes and stash hardness gadgets";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::size_t>(), py::arg("d"))
      .def_static("parse", &parse_hypergraph, py::arg("text"))
      .def("serialize", &serialize_hypergraph)
      .def_property_readonly("d", &Hypergraph::arity)
      .def("num_vertices", &Hypergraph::num_vertices)
      .def("num_edges", &Hypergraph::num_edges)
      .def("add_vertex", [](Hypergraph& h) { return h.add_vertex().value; })
      .def("add_edge",
           [](Hypergraph& h, const std::vector<std::uint32_t>& vs) { return h.add_edge(to_vertex_ids(vs)).value; })
      .def("remove_vertex", [](Hypergraph& h, std::uint32_t v) { h.remove_vertex(VertexId(v)); })
      .def("remove_edge", [](Hypergraph& h, std::uint32_t e) { h.remove_edge(EdgeId(e)); })
      .def("degree", [](const Hypergraph& h, std::uint32_t v) { return h.degree(VertexId(v)); })
      .def("edge", [](const Hypergraph& h, std::uint32_t e) { return raw(h.edge(EdgeId(e))); })
      .def("vertices", [](const Hypergraph& h) { return raw(h.vertices()); })
      .def("edges", [](const Hypergraph& h) { return raw(h.edges()); })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph d=" + std::to_string(h.arity()) + " n=" + std::to_string(h.num_vertices()) +
               " m=" + std::to_string(h.num_edges()) + ">";
      });

  m.def("gen_random", &gen_random, py::arg("n_vertices"), py::arg("n_edges"), py::arg("d"), py::arg("seed") = 0);

  m.def(
      "k_core",
      [](const Hypergraph& h, unsigned k, std::optional<std::uint64_t> seed) {
        return trace_dict(k_core(h, k, PeelOptions{seed}));
      },
      py::arg("h"), py::arg("k"), py::arg("seed") = py::none());
  m.def("is_k_peelable", &is_k_peelable, py::arg("h"), py::arg("k"));
  m.def(
      "k_core_after",
      [](const Hypergraph& h, unsigned k, const std::vector<std::uint32_t>& vs, const std::vector<std::uint32_t>& es) {
        return trace_dict(k_core_after(h, k, to_vertex_ids(vs), to_edge_ids(es)));
      },
      py::arg("h"), py::arg("k"), py::arg("stash_vertices") = std::vector<std::uint32_t>{},
      py::arg("stash_edges") = std::vector<std::uint32_t>{});

  m.def(
      "min_stash_exact",
      [](const Hypergraph& h, unsigned k, const std::string& mode, std::size_t cap) {
        return result_dict(min_stash_exact(h, k, mode_of(mode), cap));
      },
      py::arg("h"), py::arg("k"), py::arg("mode"), py::arg("cap") = kDefaultSizeCap);
  m.def(
      "greedy_stash",
      [](const Hypergraph& h, unsigned k, const std::string& mode, const std::string& tie, std::uint64_t seed) {
        return result_dict(greedy_stash(h, k, mode_of(mode), tie_of(tie), seed));
      },
      py::arg("h"), py::arg("k"), py::arg("mode"), py::arg("tie") = "max-degree", py::arg("seed") = 0);
  m.def("two_edge_stash_standard", [](const Hypergraph& g) {
    const auto c = two_edge_stash_standard(g);
    py::dict d;
    d["h"] = c.h;
    d["components"] = c.components;
    d["removed_edges"] = raw(c.removed_edges);
    return d;
  });
  m.def(
      "min_vertex_cover_exact",
      [](const Hypergraph& g, std::size_t cap) -> py::object {
        auto c = min_vertex_cover_exact(g, cap);
        if (!c) return py::none();
        return py::cast(raw(*c));
      },
      py::arg("g"), py::arg("cap") = kDefaultSizeCap);

  m.def(
      "gadget",
      [](const std::string& type, unsigned k, unsigned d, unsigned degree) {
        auto t = gadget_type_from_string(type);
        if (!t) throw ParameterError("unknown gadget type '" + type + "'");
        return serialize_gadget(build_gadget({*t, k, d, degree, 0}));
      },
      py::arg("type"), py::arg("k"), py::arg("d"), py::arg("degree") = 1,
      "Annotated text form of one gadget.");
  m.def(
      "verify_gadgets",
      [](unsigned k, unsigned d) {
        py::list rows;
        for (const auto& p : gadget_grid(k, d)) {
          const auto report = check_gadget(build_gadget(p));
          for (const auto& c : report.checks) rows.append(py::make_tuple(report.label(), c.property, c.pass, c.witness));
        }
        return rows;
      },
      py::arg("k"), py::arg("d"), "(gadget, check, pass, witness) rows for every gadget at (k, d).");

  m.def(
      "reduce",
      [](const Hypergraph& g, const std::string& source, unsigned k, unsigned d) {
        if (source != "vc" && source != "vstash") throw ParameterError("source must be 'vc' or 'vstash'");
        auto r = source == "vc" ? reduce_vc_to_vertex_stash(g, k, d) : reduce_vertex_to_edge_stash(g, k, d);
        return py::make_tuple(std::move(r.graph), serialize_map(r.map));
      },
      py::arg("g"), py::arg("source"), py::arg("k"), py::arg("d"),
      "Returns (reduced hypergraph, map text).");
  m.def(
      "normalize_stash",
      [](const Hypergraph& reduced, const std::string& map, const std::vector<std::uint32_t>& stash) {
        return raw(normalize_stash(reduced, parse_map(map), to_vertex_ids(stash)));
      },
      py::arg("reduced"), py::arg("map"), py::arg("stash"));
  m.def(
      "lift_edge_stash",
      [](const Hypergraph& reduced, const std::string& map, const std::vector<std::uint32_t>& stash) {
        return raw(lift_edge_stash(reduced, parse_map(map), to_edge_ids(stash)));
      },
      py::arg("reduced"), py::arg("map"), py::arg("stash"));
  m.def(
      "push_vertex_stash",
      [](const Hypergraph& source, const std::string& map, const std::vector<std::uint32_t>& stash) {
        return raw(push_vertex_stash(source, parse_map(map), to_vertex_ids(stash)));
      },
      py::arg("source"), py::arg("map"), py::arg("stash"));
}
