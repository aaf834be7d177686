#include "coauthor/serialize.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "coauthor/error.hpp"
#include "coauthor/io.hpp"

namespace coauthor {

using nlohmann::json;

void write_scores_csv(std::ostream& out, const CoauthorGraph& g, const CentralityVector& v) {
  out << "author_id,score\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << io::csv_field(g.label(i)) << ',' << io::format_double(v.scores[i]) << '\n';
  }
}

CentralityVector read_scores_csv(std::istream& in, const CoauthorGraph& g, Measure measure) {
  std::string line;
  if (!std::getline(in, line) || io::chomp(line) != "author_id,score") {
    throw ParseError("score csv must start with the header 'author_id,score'");
  }
  CentralityVector v;
  v.measure = measure;
  v.scores.assign(g.node_count(), 0.0);
  std::vector<char> seen(g.node_count(), 0);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = io::chomp(line);
    if (row.empty()) continue;
    const auto f = io::split_csv(row);
    const auto score = f.size() == 2 ? io::parse_double(f[1]) : std::nullopt;
    const auto node = f.size() == 2 ? g.find(f[0]) : std::nullopt;
    if (!score || !node) {
      throw ParseError("score csv line " + std::to_string(line_no) +
                       " is malformed or names an author missing from the graph");
    }
    v.scores[*node] = *score;
    seen[*node] = 1;
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!seen[i]) throw ParseError("score csv has no score for author '" + g.label(i) + "'");
  }
  return v;
}

json params_json(const CentralityVector& v) {
  json p = json::object();
  p["measure"] = std::string(to_string(v.measure));
  const auto& q = v.params;
  if (v.measure == Measure::degree) p["mode"] = "raw";
  if (q.normalization) p["normalization"] = std::string(to_string(*q.normalization));
  if (q.closeness_mode) p["mode"] = std::string(to_string(*q.closeness_mode));
  if (q.damping) p["damping"] = *q.damping;
  if (q.tolerance) p["tolerance"] = *q.tolerance;
  if (q.max_iterations) p["max_iterations"] = *q.max_iterations;
  if (q.iterations) p["iterations"] = *q.iterations;
  if (q.residual) p["residual"] = *q.residual;
  if (v.measure == Measure::betweenness || v.measure == Measure::closeness) {
    p["distances"] = "unweighted";
  }
  return p;
}

json scores_json(const CoauthorGraph& g, const CentralityVector& v) {
  json scores = json::array();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    scores.push_back({{"author_id", g.label(i)}, {"score", v.scores[i]}});
  }
  return {{"measure", std::string(to_string(v.measure))},
          {"params", params_json(v)},
          {"node_count", g.node_count()},
          {"scores", std::move(scores)}};
}

void write_partition_csv(std::ostream& out, const CoauthorGraph& g, const Partition& p) {
  out << "author_id,community_id\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << io::csv_field(g.label(i)) << ',' << p.community_of[i] << '\n';
  }
}

Partition read_partition_csv(std::istream& in, const CoauthorGraph& g) {
  std::string line;
  if (!std::getline(in, line) || io::chomp(line) != "author_id,community_id") {
    throw ParseError("partition csv must start with the header 'author_id,community_id'");
  }
  Partition p;
  p.community_of.assign(g.node_count(), kUnassigned);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = io::chomp(line);
    if (row.empty()) continue;
    const auto f = io::split_csv(row);
    const auto id = f.size() == 2 ? io::parse_integer(f[1]) : std::nullopt;
    const auto node = f.size() == 2 ? g.find(f[0]) : std::nullopt;
    if (!id || *id < 0 || *id >= kUnassigned || !node) {
      throw ParseError("partition csv line " + std::to_string(line_no) + " is malformed");
    }
    p.community_of[*node] = static_cast<CommunityId>(*id);
  }
  CommunityId max_id = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (p.community_of[i] == kUnassigned) {
      throw ParseError("partition csv has no community for author '" + g.label(i) + "'");
    }
    max_id = std::max(max_id, p.community_of[i]);
  }
  p.community_count = g.node_count() == 0 ? 0 : max_id + 1;
  p.modularity = modularity(g, p.community_of);
  return p;
}

json partition_json(const Partition& p) {
  return {{"algorithm", "louvain"},
          {"community_count", p.community_count},
          {"modularity", p.modularity},
          {"seed", p.seed},
          {"resolution", p.resolution},
          {"levels", p.levels},
          {"weighted", false}};
}

json summary_json(const NetworkSummary& s) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"node_count", s.node_count},
          {"edge_count", s.edge_count},
          {"avg_degree", opt(s.avg_degree)},
          {"diameter", s.diameter},
          {"avg_path_length", s.avg_path_length},
          {"avg_clustering", opt(s.avg_clustering)},
          {"component_count", s.component_count},
          {"modularity", opt(s.modularity)},
          {"flags",
           {{"empty", s.node_count == 0},
            {"path_degenerate", s.path_degenerate},
            {"path_estimate", s.path_estimate},
            {"path_sources", s.path_sources}}}};
}

void write_summary_csv(std::ostream& out, const NetworkSummary& s) {
  auto opt = [](const std::optional<double>& v) { return v ? io::format_double(*v) : std::string(); };
  out << "Number of authors,Number of collaborations,Modularity,Network diameter,"
         "Connected components,Avg. clustering coefficient,Avg. path length,Avg. degree\n";
  out << s.node_count << ',' << s.edge_count << ',' << opt(s.modularity) << ','
      << (s.path_degenerate ? std::string() : std::to_string(s.diameter)) << ','
      << s.component_count << ',' << opt(s.avg_clustering) << ','
      << (s.path_degenerate ? std::string() : io::format_double(s.avg_path_length)) << ','
      << opt(s.avg_degree) << '\n';
}

void write_rank_table_csv(std::ostream& out, const RankTable& t) {
  out << "author_id,author_name";
  for (Measure m : kAllMeasures) out << ',' << to_string(m) << ',' << to_string(m) << "_rank";
  out << '\n';
  for (const auto& row : t.rows) {
    out << io::csv_field(row.author_id) << ',' << io::csv_field(row.author_name);
    for (std::size_t m = 0; m < 4; ++m) {
      out << ',';
      if (kAllMeasures[m] == Measure::degree) {
        out << static_cast<long long>(std::llround(row.score[m]));
      } else {
        out << io::format_scientific(row.score[m]);
      }
      out << ',' << row.rank[m];
    }
    out << '\n';
  }
}

json rank_table_json(const RankTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = {{"author_id", row.author_id}, {"author_name", row.author_name}};
    for (std::size_t m = 0; m < 4; ++m) {
      const std::string name(to_string(kAllMeasures[m]));
      r[name] = row.score[m];
      r[name + "_rank"] = row.rank[m];
    }
    rows.push_back(std::move(r));
  }
  return {{"sort_measure", std::string(to_string(t.sort_measure))},
          {"k", t.k},
          {"tie_rule", "score descending, then author_id ascending"},
          {"rows", std::move(rows)}};
}

void write_affiliation_report_csv(std::ostream& out, const AffiliationReport& r) {
  out << "affiliation_id,affiliation_name,affiliation_total,author_id,publications\n";
  for (const auto& g : r.groups) {
    for (const auto& row : g.rows) {
      out << io::csv_field(g.affiliation_id) << ',' << io::csv_field(g.affiliation_name) << ','
          << g.total << ',' << io::csv_field(row.author_id) << ',' << row.publications << '\n';
    }
  }
}

}  // namespace coauthor
