#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coauthor {

// Dense author index inside one graph, 0 <= id < node_count().
using NodeId = std::uint32_t;
// Co-publication multiplicity of an edge, always >= 1.
using Weight = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected coauthorship graph in compressed sparse row form.
///
/// Every edge is stored in both endpoint rows with the same weight. Rows are
/// sorted ascending, contain no duplicates and no self-loops. Node labels are
/// the external author identifiers. Safe to read concurrently.
class CoauthorGraph {
 public:
  CoauthorGraph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const Weight> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  // 0 when u and v are not adjacent.
  Weight weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v) != 0; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }

  std::optional<NodeId> find(const std::string& label) const;
  // Throws NotFoundError for unknown labels.
  NodeId at(const std::string& label) const;

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const NodeId> targets() const { return targets_; }

  // Each undirected edge once, u < v, in (u, v) lexicographic order.
  std::vector<Edge> edges() const;
  std::uint64_t total_weight() const;

  friend bool operator==(const CoauthorGraph& a, const CoauthorGraph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_ &&
           a.weights_ == b.weights_ && a.labels_ == b.labels_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Accumulates labelled nodes and weighted pairs, then freezes them into a
/// CoauthorGraph. Ids are handed out in first-seen order; parallel pairs are
/// merged by summing weights and self-pairs are dropped (the node is kept).
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  void add_edge(std::string_view a, std::string_view b, Weight weight = 1);
  void add_edge(NodeId a, NodeId b, Weight weight = 1);

  std::size_t node_count() const { return labels_.size(); }

  CoauthorGraph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> pending_;
};

CoauthorGraph build_graph(std::span<const std::pair<std::string, std::string>> pairs);

struct ComponentLabeling {
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> component_sizes;
  std::size_t component_count = 0;
};

// Component ids follow the order of each component's smallest node id.
ComponentLabeling connected_components(const CoauthorGraph& g);

// Subgraph induced by `nodes`, renumbered in ascending original-id order.
// Duplicate ids are ignored; an out-of-range id throws NotFoundError.
CoauthorGraph induced_subgraph(const CoauthorGraph& g, std::span<const NodeId> nodes);

// seeds plus every neighbor of a seed, sorted ascending.
std::vector<NodeId> neighborhood_closure(const CoauthorGraph& g, std::span<const NodeId> seeds);

}  // namespace coauthor
