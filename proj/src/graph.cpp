#include "coauthor/graph.hpp"

#include <algorithm>
#include <limits>

#include "coauthor/error.hpp"

namespace coauthor {

Weight CoauthorGraph::weight(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return 0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - row.begin())];
}

std::optional<NodeId> CoauthorGraph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId CoauthorGraph::at(const std::string& label) const {
  if (auto id = find(label)) return *id;
  throw NotFoundError("unknown author id '" + label + "'");
}

std::vector<Edge> CoauthorGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    auto row = neighbors(u);
    auto w = weights(u);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] > u) out.push_back({u, row[i], w[i]});
    }
  }
  return out;
}

std::uint64_t CoauthorGraph::total_weight() const {
  std::uint64_t sum = 0;
  for (Weight w : weights_) sum += w;
  return sum / 2;
}

NodeId GraphBuilder::add_node(std::string_view label) {
  std::string key(label);
  auto [it, inserted] = index_.try_emplace(key, static_cast<NodeId>(labels_.size()));
  if (inserted) {
    if (labels_.size() >= std::numeric_limits<NodeId>::max()) {
      throw ArgumentError("graph exceeds the maximum node count");
    }
    labels_.push_back(std::move(key));
  }
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b, Weight weight) {
  NodeId u = add_node(a);
  NodeId v = add_node(b);
  add_edge(u, v, weight);
}

void GraphBuilder::add_edge(NodeId a, NodeId b, Weight weight) {
  if (a >= labels_.size() || b >= labels_.size()) {
    throw NotFoundError("edge endpoint is not a node of the builder");
  }
  if (weight == 0) throw ArgumentError("edge weight must be >= 1");
  if (a == b) return;
  if (a > b) std::swap(a, b);
  pending_.push_back({a, b, weight});
}

CoauthorGraph GraphBuilder::build() && {
  std::sort(pending_.begin(), pending_.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  std::vector<Edge> merged;
  merged.reserve(pending_.size());
  for (const Edge& e : pending_) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  pending_.clear();

  CoauthorGraph g;
  const std::size_t n = labels_.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : merged) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * merged.size());
  g.weights_.resize(2 * merged.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v) with u < v, so appending in this order leaves
  // every row sorted: a row receives all its smaller partners before its larger ones.
  for (const Edge& e : merged) {
    g.targets_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
    g.targets_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  return g;
}

CoauthorGraph build_graph(std::span<const std::pair<std::string, std::string>> pairs) {
  GraphBuilder builder;
  for (const auto& [a, b] : pairs) builder.add_edge(a, b);
  return std::move(builder).build();
}

ComponentLabeling connected_components(const CoauthorGraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.node_count();
  ComponentLabeling out;
  out.component_of.assign(n, kUnset);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId root = 0; root < n; ++root) {
    if (out.component_of[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.component_count++);
    queue.clear();
    queue.push_back(root);
    out.component_of[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (out.component_of[w] == kUnset) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    out.component_sizes.push_back(queue.size());
  }
  return out;
}

CoauthorGraph induced_subgraph(const CoauthorGraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= g.node_count()) {
    throw NotFoundError("node id " + std::to_string(keep.back()) + " is not in the graph");
  }
  GraphBuilder builder;
  std::vector<NodeId> remap(g.node_count(), std::numeric_limits<NodeId>::max());
  for (NodeId v : keep) remap[v] = builder.add_node(g.label(v));
  for (NodeId v : keep) {
    auto row = g.neighbors(v);
    auto w = g.weights(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      NodeId t = row[i];
      if (t > v && remap[t] != std::numeric_limits<NodeId>::max()) {
        builder.add_edge(remap[v], remap[t], w[i]);
      }
    }
  }
  return std::move(builder).build();
}

std::vector<NodeId> neighborhood_closure(const CoauthorGraph& g, std::span<const NodeId> seeds) {
  std::vector<char> in(g.node_count(), 0);
  for (NodeId s : seeds) {
    if (s >= g.node_count()) {
      throw NotFoundError("node id " + std::to_string(s) + " is not in the graph");
    }
    in[s] = 1;
    for (NodeId t : g.neighbors(s)) in[t] = 1;
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace coauthor
