#include "coauthor/report.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

#include "coauthor/error.hpp"
#include "coauthor/io.hpp"

namespace coauthor {

namespace {

std::vector<NodeId> rank_order(const CoauthorGraph& g, std::span<const double> scores) {
  if (scores.size() != g.node_count()) {
    throw ArgumentError("score vector has " + std::to_string(scores.size()) +
                        " entries, graph has " + std::to_string(g.node_count()) + " nodes");
  }
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return g.label(a) < g.label(b);
  });
  return order;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

const std::string* name_of(const GraphAnnotations& a, const std::string& author) {
  if (a.names == nullptr) return nullptr;
  auto it = a.names->find(author);
  return it == a.names->end() || it->second.empty() ? nullptr : &it->second;
}

void write_graphml(std::ostream& out, const CoauthorGraph& g, const GraphAnnotations& a) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
         "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
         "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
  out << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  if (a.names != nullptr) {
    out << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n";
  }
  for (std::size_t i = 0; i < a.scores.size(); ++i) {
    out << "  <key id=\"s" << i << "\" for=\"node\" attr.name=\"" << xml_escape(a.scores[i].first)
        << "\" attr.type=\"double\"/>\n";
  }
  if (a.community) {
    out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n";
  }
  if (a.seed) {
    out << "  <key id=\"seed\" for=\"node\" attr.name=\"seed\" attr.type=\"boolean\"/>\n";
  }
  out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
  out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "    <node id=\"n" << v << "\">\n";
    out << "      <data key=\"label\">" << xml_escape(g.label(v)) << "</data>\n";
    if (const auto* name = name_of(a, g.label(v))) {
      out << "      <data key=\"name\">" << xml_escape(*name) << "</data>\n";
    }
    for (std::size_t i = 0; i < a.scores.size(); ++i) {
      out << "      <data key=\"s" << i << "\">" << io::format_double(a.scores[i].second[v])
          << "</data>\n";
    }
    if (a.community) {
      out << "      <data key=\"community\">" << (*a.community)[v] << "</data>\n";
    }
    if (a.seed) {
      out << "      <data key=\"seed\">" << ((*a.seed)[v] ? "true" : "false") << "</data>\n";
    }
    out << "    </node>\n";
  }
  std::size_t id = 0;
  for (const auto& e : g.edges()) {
    out << "    <edge id=\"e" << id++ << "\" source=\"n" << e.u << "\" target=\"n" << e.v
        << "\"><data key=\"weight\">" << e.weight << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const CoauthorGraph& g, const GraphAnnotations& a) {
  out << "graph coauthorship {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  n" << v << " [label=" << dot_quote(g.label(v));
    if (const auto* name = name_of(a, g.label(v))) out << ", name=" << dot_quote(*name);
    for (const auto& [column, values] : a.scores) {
      out << ", " << dot_quote(column) << "=" << dot_quote(io::format_double(values[v]));
    }
    if (a.community) out << ", community=" << (*a.community)[v];
    if (a.seed) out << ", seed=" << ((*a.seed)[v] ? "true" : "false");
    out << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  n" << e.u << " -- n" << e.v << " [weight=" << e.weight << "];\n";
  }
  out << "}\n";
}

void write_edge_csv(std::ostream& out, const CoauthorGraph& g) {
  out << "source,target,weight\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << io::csv_field(g.label(v)) << ",,\n";
  }
  for (const auto& e : g.edges()) {
    out << io::csv_field(g.label(e.u)) << ',' << io::csv_field(g.label(e.v)) << ',' << e.weight
        << '\n';
  }
}

}  // namespace

std::vector<std::size_t> rank_nodes(const CoauthorGraph& g, std::span<const double> scores) {
  const auto order = rank_order(g, scores);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i + 1;
  return rank;
}

std::vector<NodeId> top_k(const CoauthorGraph& g, std::span<const double> scores, std::size_t k) {
  auto order = rank_order(g, scores);
  if (order.size() > k) order.resize(k);
  return order;
}

RankTable rank_table(const CoauthorGraph& g, const CentralitySuite& suite, Measure sort_measure,
                     std::size_t k, const AuthorNames* names) {
  if (k == 0) throw ArgumentError("rank table needs k >= 1");
  std::array<std::vector<std::size_t>, 4> ranks;
  for (std::size_t m = 0; m < 4; ++m) ranks[m] = rank_nodes(g, suite.get(kAllMeasures[m]).scores);

  RankTable table;
  table.sort_measure = sort_measure;
  for (NodeId v : top_k(g, suite.get(sort_measure).scores, k)) {
    RankRow row;
    row.node = v;
    row.author_id = g.label(v);
    if (names != nullptr) {
      if (auto it = names->find(row.author_id); it != names->end()) row.author_name = it->second;
    }
    for (std::size_t m = 0; m < 4; ++m) {
      row.score[m] = suite.get(kAllMeasures[m]).scores[v];
      row.rank[m] = ranks[m][v];
    }
    table.rows.push_back(std::move(row));
  }
  table.k = table.rows.size();
  return table;
}

EgoNetwork ego_network(const CoauthorGraph& g, const CentralityVector& vector, std::size_t k) {
  if (k == 0) throw ArgumentError("ego network needs k >= 1");
  EgoNetwork ego;
  ego.seeds = top_k(g, vector.scores, k);
  ego.members = neighborhood_closure(g, ego.seeds);
  ego.graph = induced_subgraph(g, ego.members);
  ego.is_seed.assign(ego.members.size(), false);
  for (NodeId s : ego.seeds) {
    const auto it = std::lower_bound(ego.members.begin(), ego.members.end(), s);
    ego.is_seed[static_cast<std::size_t>(it - ego.members.begin())] = true;
  }
  return ego;
}

AffiliationReport affiliation_report(const AffiliationIndex& index,
                                     std::span<const std::string> authors) {
  std::vector<std::string> wanted(authors.begin(), authors.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  std::map<std::string, AffiliationGroup> groups;
  for (const auto& [key, count] : index.entries) {
    const auto& [author, affiliation] = key;
    if (!std::binary_search(wanted.begin(), wanted.end(), author)) continue;
    auto& group = groups[affiliation];
    if (group.affiliation_id.empty()) {
      group.affiliation_id = affiliation;
      if (auto it = index.names.find(affiliation); it != index.names.end()) {
        group.affiliation_name = it->second;
      }
    }
    group.total += count;
    group.rows.push_back({affiliation, group.affiliation_name, author, count});
  }

  AffiliationReport report;
  for (auto& [id, group] : groups) {
    std::stable_sort(group.rows.begin(), group.rows.end(),
                     [](const AffiliationRow& a, const AffiliationRow& b) {
                       if (a.publications != b.publications) return a.publications > b.publications;
                       return a.author_id < b.author_id;
                     });
    report.groups.push_back(std::move(group));
  }
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const AffiliationGroup& a, const AffiliationGroup& b) {
                     if (a.total != b.total) return a.total > b.total;
                     return a.affiliation_id < b.affiliation_id;
                   });
  return report;
}

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::graphml: return "graphml";
    case GraphFormat::dot: return "dot";
    case GraphFormat::edge_csv: return "edge_csv";
  }
  return "unknown";
}

GraphFormat parse_graph_format(std::string_view name) {
  for (auto f : {GraphFormat::graphml, GraphFormat::dot, GraphFormat::edge_csv}) {
    if (to_string(f) == name) return f;
  }
  throw ArgumentError("unknown graph format '" + std::string(name) + "'");
}

void export_graph(std::ostream& out, const CoauthorGraph& g, GraphFormat format,
                  const GraphAnnotations& annotations) {
  const std::size_t n = g.node_count();
  for (const auto& [column, values] : annotations.scores) {
    if (values.size() != n) throw ArgumentError("annotation '" + column + "' has wrong length");
  }
  if ((annotations.community && annotations.community->size() != n) ||
      (annotations.seed && annotations.seed->size() != n)) {
    throw ArgumentError("node annotation has wrong length");
  }
  switch (format) {
    case GraphFormat::graphml: write_graphml(out, g, annotations); break;
    case GraphFormat::dot: write_dot(out, g, annotations); break;
    case GraphFormat::edge_csv: write_edge_csv(out, g); break;
  }
  if (!out) throw IoError("failed to write graph export");
}

CoauthorGraph read_edge_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || io::chomp(line) != "source,target,weight") {
    throw ParseError("edge csv must start with the header 'source,target,weight'");
  }
  GraphBuilder builder;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = io::chomp(line);
    if (row.empty()) continue;
    const auto f = io::split_csv(row);
    if (f.size() != 3 || f[0].empty()) {
      throw ParseError("edge csv line " + std::to_string(line_no) + " is malformed");
    }
    if (f[1].empty()) {
      builder.add_node(f[0]);
      continue;
    }
    const auto w = io::parse_integer(f[2]);
    if (!w || *w < 1) {
      throw ParseError("edge csv line " + std::to_string(line_no) + " has a bad weight");
    }
    builder.add_edge(f[0], f[1], static_cast<Weight>(*w));
  }
  return std::move(builder).build();
}

}  // namespace coauthor
