#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repdim/embed.hpp"
#include "repdim/graph.hpp"
#include "repdim/oracle.hpp"
#include "repdim/repnum.hpp"
#include "repdim/spectral.hpp"

namespace py = pybind11;
using namespace repdim;

namespace {

py::dict rep_result_dict(const RepResult& r) {
    py::dict cert;
    cert["side"] = to_string(r.certificate.side);
    cert["branch"] = to_string(r.certificate.branch);
    cert["b"] = r.certificate.b ? py::object(py::float_(*r.certificate.b)) : py::none();
    cert["m1p"] = r.certificate.m1p;
    cert["m2p"] = r.certificate.m2p;
    cert["m1p_bar"] = r.certificate.m1p_bar;
    cert["m2p_bar"] = r.certificate.m2p_bar;
    py::dict d;
    d["rep"] = r.rep;
    d["case"] = to_string(r.rep_case);
    d["certificate"] = cert;
    return d;
}

} // namespace

PYBIND11_MODULE(_repdim, m) {
    m.doc() = "Euclidean representation numbers and two-distance embeddings of graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::n)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacency", &Graph::adjacency)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " e=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("encode_graph6", &encode_graph6);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });

    m.def("complement", &complement);
    m.def("complete_graph", &complete_graph);
    m.def("empty_graph", &empty_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("disjoint_union", &disjoint_union);
    m.def("line_graph", &line_graph);

    m.def("spectrum", [](const Graph& g) {
        auto s = summarize(g);
        py::list distinct;
        for (const auto& e : s.distinct)
            distinct.append(py::make_tuple(e.tau, e.mult, e.beta));
        py::dict d;
        d["n"] = s.n;
        d["distinct"] = distinct;
        return d;
    });

    m.def("representation_number",
          [](const Graph& g) { return rep_result_dict(representation_number(g)); });

    m.def("srg_rep", [](int n, int k, int lam, int mu) { return srg_rep(n, k, lam, mu); },
          py::arg("n"), py::arg("k"), py::arg("lam"), py::arg("mu"));

    m.def("minimal_embedding", [](const Graph& g) {
        auto [emb, rr] = minimal_embedding(g);
        py::dict d;
        d["points"] = emb.points;
        d["alpha"] = emb.alpha;
        d["beta"] = emb.beta;
        d["dim"] = emb.dim();
        d["rep"] = rep_result_dict(rr);
        return d;
    });

    m.def("verify_embedding",
          [](const Graph& g, const Eigen::MatrixXd& points, double alpha, double beta) {
              Embedding e;
              e.points = points;
              e.alpha = alpha;
              e.beta = beta;
              e.b = beta * beta / (alpha * alpha);
              auto v = verify_embedding(g, e);
              return py::make_tuple(v.ok, v.reasons);
          });

    m.def("brute_force_rep", [](const Graph& g, int grid_points) {
        auto r = brute_force_rep(g, grid_points);
        py::dict d;
        d["rep_oracle"] = r.rep_oracle;
        d["critical_only"] = r.critical_only;
        return d;
    }, py::arg("g"), py::arg("grid_points") = 1000);

    m.def("schoenberg_test", [](const Eigen::MatrixXd& mat) {
        auto r = schoenberg_test(mat);
        py::dict d;
        d["is_edm"] = r.is_edm;
        d["embedding_dim"] = r.embedding_dim;
        d["witness"] = r.witness;
        return d;
    });

    m.def("realize", [](const Eigen::MatrixXd& mat) { return realize(mat); });
}
