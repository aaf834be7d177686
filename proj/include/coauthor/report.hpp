#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coauthor/centrality.hpp"
#include "coauthor/community.hpp"
#include "coauthor/graph.hpp"
#include "coauthor/ingest.hpp"

namespace coauthor {

using AuthorNames = std::map<std::string, std::string>;

/// 1-based rank of every node under one score vector: position after sorting
/// by score descending, then author id ascending.
std::vector<std::size_t> rank_nodes(const CoauthorGraph& g, std::span<const double> scores);

// Node ids in rank order (best first), truncated to k.
std::vector<NodeId> top_k(const CoauthorGraph& g, std::span<const double> scores, std::size_t k);

struct RankRow {
  NodeId node = 0;
  std::string author_id;
  std::string author_name;
  std::array<double, 4> score{};      // indexed like kAllMeasures
  std::array<std::size_t, 4> rank{};  // whole-graph ranks
};

struct RankTable {
  Measure sort_measure = Measure::degree;
  std::size_t k = 0;
  std::vector<RankRow> rows;
};

// Top-k authors under sort_measure with every measure's whole-graph rank.
// k larger than the node count yields every node. Throws ArgumentError on
// k == 0 or a score vector whose length differs from the node count.
RankTable rank_table(const CoauthorGraph& g, const CentralitySuite& suite, Measure sort_measure,
                     std::size_t k, const AuthorNames* names = nullptr);

struct EgoNetwork {
  CoauthorGraph graph;
  std::vector<bool> is_seed;       // per node of `graph`
  std::vector<NodeId> seeds;       // top-k ids in the source graph, rank order
  std::vector<NodeId> members;     // source-graph ids of graph's nodes, ascending
};

// Subgraph induced by the top-k nodes of `vector` and all their neighbours.
EgoNetwork ego_network(const CoauthorGraph& g, const CentralityVector& vector, std::size_t k);

struct AffiliationRow {
  std::string affiliation_id;
  std::string affiliation_name;
  std::string author_id;
  std::uint32_t publications = 0;
};

struct AffiliationGroup {
  std::string affiliation_id;
  std::string affiliation_name;
  std::uint64_t total = 0;
  std::vector<AffiliationRow> rows;
};

/// Publications per institute for the given authors. Institutes are ordered
/// by total publications descending (ties by id); members by count
/// descending, then author id.
struct AffiliationReport {
  std::vector<AffiliationGroup> groups;
};

AffiliationReport affiliation_report(const AffiliationIndex& index,
                                     std::span<const std::string> authors);

enum class GraphFormat { graphml, dot, edge_csv };

std::string_view to_string(GraphFormat f);
GraphFormat parse_graph_format(std::string_view name);

struct GraphAnnotations {
  // Named per-node numeric columns, e.g. {"degree", scores}.
  std::vector<std::pair<std::string, std::vector<double>>> scores;
  std::optional<std::vector<CommunityId>> community;
  std::optional<std::vector<bool>> seed;
  const AuthorNames* names = nullptr;
};

// Throws IoError when the sink fails, ArgumentError on annotation length mismatch.
void export_graph(std::ostream& out, const CoauthorGraph& g, GraphFormat format,
                  const GraphAnnotations& annotations = {});

// Reads the edge_csv format back (header `source,target,weight`; a row with an
// empty target declares an isolated node).
CoauthorGraph read_edge_csv(std::istream& in);

}  // namespace coauthor
