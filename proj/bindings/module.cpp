#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bihyp/analysis.hpp"
#include "bihyp/canonical.hpp"
#include "bihyp/constructions.hpp"
#include "bihyp/io.hpp"
#include "bihyp/solver.hpp"
#include "bihyp/version.hpp"

namespace py = pybind11;

namespace {

py::dict verdict_dict(const bihyp::Verdict& v) {
    py::dict d;
    d["status"] = bihyp::to_string(v.status);
    d["witness"] = v.witness ? py::object(py::cast(v.witness->colors)) : py::none();
    d["nodes_explored"] = v.nodes_explored;
    d["elapsed_ms"] = v.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "colorability of mixed and bi-hypergraphs";
    m.attr("__version__") = bihyp::kVersion;

    py::class_<bihyp::MixedHypergraph>(m, "MixedHypergraph")
        .def(py::init<int, std::vector<bihyp::Edge>, std::vector<bihyp::Edge>>(),
             py::arg("n"), py::arg("c_edges"), py::arg("d_edges"))
        .def_static("bi", &bihyp::MixedHypergraph::bi, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &bihyp::MixedHypergraph::n)
        .def_property_readonly(
            "c_edges",
            [](const bihyp::MixedHypergraph& h) { return h.c_edges(); })
        .def_property_readonly(
            "d_edges",
            [](const bihyp::MixedHypergraph& h) { return h.d_edges(); })
        .def("degree", &bihyp::MixedHypergraph::degree, py::arg("v"))
        .def("neighborhood", &bihyp::MixedHypergraph::neighborhood, py::arg("v"))
        .def("is_bi", &bihyp::MixedHypergraph::is_bi)
        .def("uniformity",
             [](const bihyp::MixedHypergraph& h) { return h.uniformity(); })
        .def("__eq__",
             [](const bihyp::MixedHypergraph& a, const bihyp::MixedHypergraph& b) {
                 return a == b;
             })
        .def("__repr__", [](const bihyp::MixedHypergraph& h) {
            return "MixedHypergraph(n=" + std::to_string(h.n()) + ", |C|=" +
                   std::to_string(h.c_edges().size()) + ", |D|=" +
                   std::to_string(h.d_edges().size()) + ")";
        });

    m.def(
        "is_proper",
        [](const bihyp::MixedHypergraph& h, const std::vector<int>& labels) {
            return bihyp::is_proper(h, bihyp::Coloring::from_labels(labels));
        },
        py::arg("h"), py::arg("labels"));

    m.def(
        "decide_colorable",
        [](const bihyp::MixedHypergraph& h, int max_colors) {
            bihyp::SolveOptions opts;
            opts.max_colors = max_colors;
            return verdict_dict(bihyp::decide_colorable(h, opts));
        },
        py::arg("h"), py::arg("max_colors") = -1);

    m.def(
        "enumerate_proper_colorings",
        [](const bihyp::MixedHypergraph& h, int max_colors) {
            std::vector<std::vector<int>> out;
            for (const bihyp::Coloring& c :
                 bihyp::enumerate_proper_colorings(h, max_colors))
                out.push_back(c.colors);
            return out;
        },
        py::arg("h"), py::arg("max_colors") = -1);

    m.def(
        "upper_chromatic_number",
        [](const bihyp::MixedHypergraph& h) -> py::object {
            bihyp::ChiBar cb = bihyp::upper_chromatic_number(h);
            if (!cb.value) return py::none();
            return py::int_(*cb.value);
        },
        py::arg("h"));

    m.def(
        "is_minimal_uncolorable",
        [](const bihyp::MixedHypergraph& h, int jobs) {
            return bihyp::is_minimal_uncolorable(bihyp::BiHypergraph(h), jobs)
                .minimal_uncolorable;
        },
        py::arg("h"), py::arg("jobs") = 1);

    m.def(
        "bounds",
        [](const bihyp::MixedHypergraph& h) {
            py::list out;
            for (const bihyp::BoundReport& b :
                 bihyp::all_bounds(bihyp::BiHypergraph(h))) {
                py::dict d;
                d["bound"] = b.bound;
                d["threshold"] = b.threshold;
                d["measured"] = b.measured;
                d["satisfied"] = b.satisfied;
                d["conclusion"] = b.conclusion;
                out.append(d);
            }
            return out;
        },
        py::arg("h"));

    m.def(
        "canonical_form",
        [](const bihyp::MixedHypergraph& h) {
            bihyp::CanonicalForm f = bihyp::canonical_form(bihyp::BiHypergraph(h));
            return py::make_tuple(f.n, f.edges, bihyp::hash_hex(f.hash));
        },
        py::arg("h"));

    m.def(
        "are_isomorphic",
        [](const bihyp::MixedHypergraph& a, const bihyp::MixedHypergraph& b) {
            return bihyp::are_isomorphic(bihyp::BiHypergraph(a),
                                         bihyp::BiHypergraph(b));
        },
        py::arg("a"), py::arg("b"));

    m.def("make_knlm", &bihyp::make_knlm, py::arg("n"), py::arg("l"), py::arg("m"));
    m.def("make_hk", [](int k) { return bihyp::make_hk(k).mixed(); }, py::arg("k"));
    m.def("make_fano", [] { return bihyp::make_fano().mixed(); });
    m.def("make_muc", [](int n) { return bihyp::make_muc(n).mixed(); }, py::arg("n"));

    m.def("to_json", [](const bihyp::MixedHypergraph& h) { return bihyp::to_json(h); },
          py::arg("h"));
    m.def("from_json",
          [](const std::string& text) { return bihyp::from_json(text).h; },
          py::arg("text"));
}
