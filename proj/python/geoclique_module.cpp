// Python bindings for the main operations: graph and point-set
// construction, clique enumeration and verification, the exact solver, the
// constructive colourers, graph embedding, the closed-form constants and
// the random-graph samplers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geoclique/cell_two_colouring.hpp"
#include "geoclique/census.hpp"
#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/components_chi.hpp"
#include "geoclique/embed.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/exact.hpp"
#include "geoclique/graph.hpp"
#include "geoclique/greedy.hpp"
#include "geoclique/grid_colouring.hpp"
#include "geoclique/hex.hpp"
#include "geoclique/pentagon.hpp"
#include "geoclique/point_set.hpp"
#include "geoclique/rgg.hpp"
#include "geoclique/small_graphs.hpp"
#include "geoclique/strip.hpp"
#include "geoclique/sweep.hpp"

namespace py = pybind11;
using namespace geoclique;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

PointSet make_point_set(const std::vector<std::vector<double>>& points, double radius) {
    PointSet ps;
    ps.dim = points.empty() ? 1 : static_cast<int>(points.front().size());
    ps.points = points;
    ps.radius = radius;
    ps.validate();
    return ps;
}

}  // namespace

PYBIND11_MODULE(_geoclique, m) {
    m.doc() = "clique colourings of geometric graphs";

    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<budget_exceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<margin_collapse>(m, "MarginCollapse", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("edges", &edges_of)
        .def("components", &Graph::components);

    py::class_<Colouring>(m, "Colouring")
        .def_readonly("colours", &Colouring::colours)
        .def_property_readonly("palette", &Colouring::palette_size);

    m.def("build_geometric_graph",
          [](const std::vector<std::vector<double>>& pts, double radius) {
              return build_geometric_graph(make_point_set(pts, radius));
          },
          py::arg("points"), py::arg("radius"));

    m.def("maximal_cliques",
          [](const Graph& g) { return enumerate_maximal_cliques(g).cliques; });

    m.def("is_clique_colouring",
          [](const Graph& g, const std::vector<int>& colours) {
              Colouring c{colours};
              const auto res = is_clique_colouring(g, c);
              return py::make_tuple(res.ok, res.violating_clique
                                                ? py::cast(*res.violating_clique)
                                                : py::none().cast<py::object>());
          },
          py::arg("graph"), py::arg("colours"));

    m.def("chi_c_exact",
          [](const Graph& g) {
              const auto res = clique_chromatic_number_exact(g);
              return py::make_tuple(res.chi_c, res.witness.colours);
          });

    m.def("clique_transversal_number",
          [](const Graph& g) { return clique_transversal_number(g); });

    m.def("greedy_sqrt_colouring",
          [](const Graph& g) { return greedy_sqrt_colouring(g); });

    m.def("exhaustive_chi_c_max",
          [](int n, int jobs) {
              const auto res = exhaustive_chi_c_max(n, jobs);
              py::dict d;
              d["n"] = res.n;
              d["max_chi_c"] = res.max_chi_c;
              d["extremal_classes"] = res.extremal.size();
              d["all_extremal_triangle_free"] = res.all_extremal_triangle_free;
              d["some_extremal_triangle_free"] = res.some_extremal_triangle_free;
              return d;
          },
          py::arg("n"), py::arg("jobs") = 1);

    m.def("strip_colouring",
          [](const std::vector<std::vector<double>>& pts, double radius) {
              return strip_colouring(make_point_set(pts, radius)).colouring;
          },
          py::arg("points"), py::arg("radius"));

    m.def("grid_colouring",
          [](const std::vector<std::vector<double>>& pts, double radius) {
              return grid_colouring(make_point_set(pts, radius)).colouring;
          },
          py::arg("points"), py::arg("radius"));

    m.def("hex_colouring_r3",
          [](const std::vector<std::vector<double>>& pts, double radius) {
              return hex_colouring_R3(make_point_set(pts, radius)).colouring;
          },
          py::arg("points"), py::arg("radius"));

    m.def("embed_graph",
          [](const Graph& g, double target_margin) {
              const Embedding emb = embed_graph(g, target_margin);
              py::dict d;
              d["points"] = emb.points;
              d["threshold"] = emb.threshold;
              d["margin"] = emb.margin;
              return d;
          },
          py::arg("graph"), py::arg("target_margin") = 1e-9);

    m.def("pentagon_constants", [] {
        const PentagonConstants pc = pentagon_constants();
        py::dict d;
        d["a"] = pc.radius;
        d["s"] = pc.side;
        d["ot"] = pc.ot;
        d["tr"] = pc.tr;
        d["h"] = pc.h;
        d["alpha"] = pc.alpha;
        d["gamma"] = pc.gamma;
        d["a0_1"] = pc.a0_1;
        d["a0_2"] = pc.a0_2;
        d["a0_3"] = pc.a0_3;
        d["area_A"] = pc.area_A;
        d["b_max"] = pc.b_max;
        d["two_colour_constant"] = pc.two_colour_constant;
        return d;
    });

    m.def("sample_rgg",
          [](std::int64_t n, double r, const std::string& model, std::uint64_t seed) {
              RggConfig cfg{n, r, parse_rgg_model(model), seed};
              const RggSample s = sample_rgg(cfg);
              return py::make_tuple(s.points.points, s.graph);
          },
          py::arg("n"), py::arg("r"), py::arg("model") = "uniform", py::arg("seed") = 0);

    m.def("chi_c_by_components",
          [](const Graph& g) {
              const auto res = chi_c_by_components(g);
              py::dict d;
              d["method"] = res.method == ChiMethod::exact ? "exact" : "bounded";
              d["lower"] = res.lower;
              d["upper"] = res.upper;
              if (res.exact_value) d["value"] = *res.exact_value;
              return d;
          });

    m.def("find_triangle_free_c5",
          [](const Graph& g) -> py::object {
              const auto w = find_triangle_free_c5(g);
              if (!w) return py::none();
              return py::cast(*w);
          });
}
