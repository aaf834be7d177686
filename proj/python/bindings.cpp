#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "coauthor/centrality.hpp"
#include "coauthor/community.hpp"
#include "coauthor/error.hpp"
#include "coauthor/graph.hpp"
#include "coauthor/ingest.hpp"
#include "coauthor/pipeline.hpp"
#include "coauthor/report.hpp"
#include "coauthor/serialize.hpp"
#include "coauthor/stats.hpp"

namespace py = pybind11;
using namespace coauthor;

namespace {

py::dict summary_dict(const NetworkSummary& s) {
  return py::module_::import("json").attr("loads")(summary_json(s).dump());
}

}  // namespace

PYBIND11_MODULE(_coauthornet, m) {
  m.doc() = "Coauthorship network analytics";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<NotFoundError>(m, "NotFoundError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UndefinedValueError>(m, "UndefinedValueError", base.ptr());
  py::register_exception<PageRankNotConverged>(m, "PageRankNotConverged", base.ptr());

  py::class_<CoauthorGraph>(m, "Graph")
      .def_property_readonly("node_count", &CoauthorGraph::node_count)
      .def_property_readonly("edge_count", &CoauthorGraph::edge_count)
      .def("neighbors",
           [](const CoauthorGraph& g, NodeId v) {
             if (v >= g.node_count()) throw NotFoundError("node id out of range");
             auto row = g.neighbors(v);
             return std::vector<NodeId>(row.begin(), row.end());
           })
      .def("degree", [](const CoauthorGraph& g, NodeId v) {
        if (v >= g.node_count()) throw NotFoundError("node id out of range");
        return g.degree(v);
      })
      .def("weight", [](const CoauthorGraph& g, NodeId u, NodeId v) {
        if (u >= g.node_count() || v >= g.node_count()) throw NotFoundError("node id out of range");
        return g.weight(u, v);
      })
      .def("label", [](const CoauthorGraph& g, NodeId v) {
        if (v >= g.node_count()) throw NotFoundError("node id out of range");
        return g.label(v);
      })
      .def("labels", [](const CoauthorGraph& g) {
        return std::vector<std::string>(g.labels().begin(), g.labels().end());
      })
      .def("find", &CoauthorGraph::find)
      .def("edges", [](const CoauthorGraph& g) {
        std::vector<std::tuple<NodeId, NodeId, Weight>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      })
      .def("__len__", &CoauthorGraph::node_count);

  m.def("build_graph", [](const std::vector<std::pair<std::string, std::string>>& pairs) {
    return build_graph(pairs);
  }, py::arg("pairs"));
  m.def("load_edge_list", &load_edge_list, py::arg("path"));
  m.def("connected_components", [](const CoauthorGraph& g) {
    auto cc = connected_components(g);
    return py::make_tuple(cc.component_of, cc.component_sizes, cc.component_count);
  });
  m.def("induced_subgraph", [](const CoauthorGraph& g, const std::vector<NodeId>& nodes) {
    return induced_subgraph(g, nodes);
  });
  m.def("neighborhood_closure", [](const CoauthorGraph& g, const std::vector<NodeId>& seeds) {
    return neighborhood_closure(g, seeds);
  });

  py::class_<PaperRecord>(m, "PaperRecord")
      .def(py::init<>())
      .def_readwrite("paper_id", &PaperRecord::paper_id)
      .def_readwrite("author_id", &PaperRecord::author_id)
      .def_readwrite("author_name", &PaperRecord::author_name)
      .def_readwrite("affiliation_id", &PaperRecord::affiliation_id)
      .def_readwrite("affiliation_name", &PaperRecord::affiliation_name)
      .def_readwrite("year", &PaperRecord::year)
      .def_readwrite("field_id", &PaperRecord::field_id);

  m.def("parse_records", [](const std::string& text, char delimiter) {
    RecordSchema schema;
    schema.delimiter = delimiter;
    std::istringstream in(text);
    auto result = parse_records(in, schema);
    return py::make_tuple(result.records, result.skipped_rows);
  }, py::arg("text"), py::arg("delimiter") = '\t',
     "Parse records with the default column names; returns (records, skipped_rows).");
  m.def("filter_records", [](const std::vector<PaperRecord>& records, int year_min, int year_max,
                             std::optional<std::string> field_id) {
    return filter_records(records, year_min, year_max, field_id);
  }, py::arg("records"), py::arg("year_min"), py::arg("year_max"),
     py::arg("field_id") = std::nullopt);
  m.def("project_coauthorship", [](const std::vector<PaperRecord>& records, std::size_t cap) {
    auto p = project_coauthorship(records, cap);
    std::vector<std::pair<std::string, std::size_t>> capped;
    for (const auto& c : p.capped_papers) capped.emplace_back(c.paper_id, c.author_count);
    return py::make_tuple(std::move(p.graph), capped);
  }, py::arg("records"), py::arg("author_cap") = kDefaultAuthorCap);

  m.def("degree_centrality", [](const CoauthorGraph& g) { return degree_centrality(g).scores; });
  m.def("betweenness_centrality",
        [](const CoauthorGraph& g, const std::string& normalization, unsigned threads) {
          return betweenness_centrality(g, parse_betweenness_normalization(normalization), threads)
              .scores;
        },
        py::arg("g"), py::arg("normalization") = "none", py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("closeness_centrality",
        [](const CoauthorGraph& g, const std::string& mode, unsigned threads) {
          return closeness_centrality(g, parse_closeness_mode(mode), threads).scores;
        },
        py::arg("g"), py::arg("mode") = "component_scaled", py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("pagerank",
        [](const CoauthorGraph& g, double damping, double tol, std::size_t max_iter) {
          return pagerank(g, {damping, tol, max_iter, 1}).scores;
        },
        py::arg("g"), py::arg("damping") = 0.85, py::arg("tol") = 1e-9,
        py::arg("max_iter") = 200);

  m.def("modularity", [](const CoauthorGraph& g, const std::vector<CommunityId>& labels) {
    return modularity(g, labels);
  });
  m.def("detect_communities",
        [](const CoauthorGraph& g, double resolution, std::uint64_t seed) {
          auto p = detect_communities(g, {resolution, seed});
          return py::make_tuple(p.community_of, p.community_count, p.modularity);
        },
        py::arg("g"), py::arg("resolution") = 1.0, py::arg("seed") = 0);

  m.def("avg_degree", &avg_degree);
  m.def("avg_clustering", &avg_clustering, py::arg("g"), py::arg("exclude_low_degree") = false);
  m.def("diameter_and_apl",
        [](const CoauthorGraph& g, bool exact, std::optional<std::size_t> sources,
           std::uint64_t seed) {
          auto p = diameter_and_apl(g, exact, sources, seed);
          return py::make_tuple(p.diameter, p.avg_path_length);
        },
        py::arg("g"), py::arg("exact") = true, py::arg("sample_sources") = std::nullopt,
        py::arg("seed") = 0);
  m.def("summarize", [](const CoauthorGraph& g) { return summary_dict(summarize(g)); });

  m.def("rank_table", [](const CoauthorGraph& g, const std::string& measure, std::size_t k) {
    const auto suite = compute_all(g);
    const auto table = rank_table(g, suite, parse_measure(measure), k);
    return py::module_::import("json").attr("loads")(rank_table_json(table).dump());
  }, py::arg("g"), py::arg("sort_measure") = "degree", py::arg("k") = 10);
  m.def("ego_network", [](const CoauthorGraph& g, const std::string& measure, std::size_t k) {
    const auto suite = compute_all(g);
    auto ego = ego_network(g, suite.get(parse_measure(measure)), k);
    return py::make_tuple(std::move(ego.graph), ego.members, ego.seeds);
  }, py::arg("g"), py::arg("measure") = "degree", py::arg("k") = 10);
  m.def("export_graph", [](const CoauthorGraph& g, const std::string& format) {
    std::ostringstream out;
    export_graph(out, g, parse_graph_format(format));
    return out.str();
  }, py::arg("g"), py::arg("format") = "graphml");

  m.def("run_pipeline",
        [](const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& out_dir,
           std::size_t top_k, std::uint64_t seed, unsigned threads) {
          RunConfig c;
          c.inputs = inputs;
          c.out_dir = out_dir;
          c.top_k = top_k;
          c.seed = seed;
          c.threads = threads;
          py::gil_scoped_release release;
          cmd_pipeline(c);
        },
        py::arg("inputs"), py::arg("out_dir"), py::arg("top_k") = 10, py::arg("seed") = 0,
        py::arg("threads") = 1);

  m.attr("__version__") = std::string(kToolVersion);
}
