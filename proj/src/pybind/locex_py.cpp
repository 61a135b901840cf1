#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "locex/report.hpp"

namespace py = pybind11;
using namespace locex;

namespace {

ObjectiveSpec spec_from(const std::string& kind, double rho) {
    ObjectiveSpec spec;
    if (kind == "q") {
        spec.kind = ObjectiveKind::Q;
    } else if (kind == "w") {
        spec.kind = ObjectiveKind::W;
    } else if (kind == "wrho") {
        spec.kind = ObjectiveKind::WRho;
        spec.rho = rho;
    } else {
        throw std::invalid_argument("objective must be 'q', 'w' or 'wrho'");
    }
    return spec;
}

CommunityState state_from(const Graph& g, const std::vector<int>& members) {
    return CommunityState::from_members(g.node_count(), members);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local community extraction via discrete Hopfield dynamics";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edge_list",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return Graph::from_edge_list(in);
                    },
                    py::arg("text"))
        .def_static("from_file", &Graph::from_edge_list_file, py::arg("path"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("total_weight", &Graph::total_weight)
        .def_property_readonly("labels", &Graph::labels)
        .def("degree", &Graph::degree, py::arg("node"))
        .def("induced_subgraph",
             [](const Graph& g, const std::vector<int>& keep) {
                 return g.induced_subgraph(keep);
             },
             py::arg("keep"));

    m.def("eval_q",
          [](const Graph& g, const std::vector<int>& members) {
              return eval_Q(g, state_from(g, members));
          },
          py::arg("graph"), py::arg("members"));
    m.def("eval_w_rho",
          [](const Graph& g, const std::vector<int>& members, double rho) {
              return eval_W_rho(g, state_from(g, members), rho);
          },
          py::arg("graph"), py::arg("members"), py::arg("rho") = 1.0);

    m.def("extract",
          [](const Graph& g, const std::string& objective, double rho,
             int communities, int trials, std::uint64_t seed) {
              ExtractConfig cfg;
              cfg.trials = trials;
              cfg.seed = seed;
              auto reports = extract_sequential(g, spec_from(objective, rho),
                                                communities, cfg);
              py::list out;
              for (const auto& rep : reports) {
                  py::list comms;
                  for (const auto& rec : rep.communities) {
                      py::dict d;
                      d["labels"] = rec.labels;
                      d["objective"] = rec.objective;
                      d["count"] = rec.count;
                      d["stable"] = rec.stable;
                      if (rec.lambda_star) d["lambda_star"] = *rec.lambda_star;
                      comms.append(std::move(d));
                  }
                  py::dict r;
                  r["communities"] = std::move(comms);
                  r["trials"] = rep.trials;
                  r["failed_trials"] = rep.failed_trials;
                  out.append(std::move(r));
              }
              return out;
          },
          py::arg("graph"), py::arg("objective") = "w", py::arg("rho") = 1.0,
          py::arg("communities") = 1, py::arg("trials") = 500,
          py::arg("seed") = 0);

    m.def("brute_force_best",
          [](const Graph& g, const std::string& objective, double rho) {
              auto res = brute_force_best(g, spec_from(objective, rho));
              py::dict d;
              d["best_subset"] = res.best_subset;
              d["best_value"] = res.best_value;
              d["ties"] = res.ties;
              return d;
          },
          py::arg("graph"), py::arg("objective") = "w", py::arg("rho") = 1.0);

    m.def("ring_of_cliques", &ring_of_cliques, py::arg("m"),
          py::arg("n_cliques"));
    m.def("planted_two_communities",
          [](int n, int n1, int n2, double p_in, double p_out,
             std::uint64_t seed) {
              auto [g, truth] = planted_two_communities(n, n1, n2, p_in, p_out, seed);
              return py::make_tuple(g, truth.assignment);
          },
          py::arg("n"), py::arg("n1"), py::arg("n2"), py::arg("p_in"),
          py::arg("p_out"), py::arg("seed") = 0);
    m.def("gnm_random", &gnm_random, py::arg("n"), py::arg("m_edges"),
          py::arg("seed") = 0);
}
