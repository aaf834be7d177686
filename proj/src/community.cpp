#include "coauthor/community.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "coauthor/error.hpp"

namespace coauthor {

namespace {

// Relabels to 0..k-1 in order of first appearance.
std::size_t compact_labels(std::vector<CommunityId>& labels) {
  std::unordered_map<CommunityId, CommunityId> remap;
  for (auto& c : labels) {
    auto [it, inserted] = remap.try_emplace(c, static_cast<CommunityId>(remap.size()));
    c = it->second;
  }
  return remap.size();
}

// Weighted graph used for the aggregated Louvain levels. self_loop[i] holds
// twice the weight internal to node i, so strength[i] = self_loop[i] + row sum.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> self_loop;
  std::vector<double> strength;

  std::size_t size() const { return self_loop.size(); }
};

LevelGraph level_from(const CoauthorGraph& g) {
  LevelGraph lg;
  const std::size_t n = g.node_count();
  lg.offsets.assign(g.offsets().begin(), g.offsets().end());
  lg.targets.assign(g.targets().begin(), g.targets().end());
  lg.weights.assign(lg.targets.size(), 1.0);
  lg.self_loop.assign(n, 0.0);
  lg.strength.resize(n);
  for (NodeId v = 0; v < n; ++v) lg.strength[v] = static_cast<double>(g.degree(v));
  return lg;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<CommunityId>& comm,
                     std::size_t count) {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(count);
  LevelGraph out;
  out.self_loop.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  for (std::size_t i = 0; i < lg.size(); ++i) {
    const CommunityId ci = comm[i];
    out.self_loop[ci] += lg.self_loop[i];
    out.strength[ci] += lg.strength[i];
    for (std::size_t e = lg.offsets[i]; e < lg.offsets[i + 1]; ++e) {
      const CommunityId cj = comm[lg.targets[e]];
      if (ci == cj) {
        out.self_loop[ci] += lg.weights[e];
      } else {
        rows[ci].emplace_back(cj, lg.weights[e]);
      }
    }
  }
  out.offsets.assign(count + 1, 0);
  for (std::size_t c = 0; c < count; ++c) {
    auto& row = rows[c];
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t kept = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (kept > 0 && row[kept - 1].first == row[i].first) {
        row[kept - 1].second += row[i].second;
      } else {
        row[kept++] = row[i];
      }
    }
    row.resize(kept);
    out.offsets[c + 1] = out.offsets[c] + kept;
    for (const auto& [t, w] : row) {
      out.targets.push_back(t);
      out.weights.push_back(w);
    }
  }
  return out;
}

// Fisher-Yates on mt19937_64 output; std::shuffle's draw sequence is not
// specified by the standard, and results must match across platforms.
void seeded_shuffle(std::vector<std::uint32_t>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

// One level of local moves. Returns true if any node changed community.
bool local_moves(const LevelGraph& lg, double total_strength, double resolution,
                 std::mt19937_64& rng, std::vector<CommunityId>& comm) {
  constexpr double kMinGain = 1e-10;
  const std::size_t n = lg.size();
  comm.resize(n);
  std::vector<double> tot(lg.strength);
  for (std::size_t i = 0; i < n; ++i) comm[i] = static_cast<CommunityId>(i);

  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  seeded_shuffle(order, rng);

  std::vector<double> link(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<CommunityId> touched;
  bool any_move = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::uint32_t i : order) {
      const CommunityId current = comm[i];
      touched.clear();
      touched.push_back(current);
      seen[current] = 1;
      for (std::size_t e = lg.offsets[i]; e < lg.offsets[i + 1]; ++e) {
        const CommunityId c = comm[lg.targets[e]];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link[c] += lg.weights[e];
      }
      const double k = lg.strength[i];
      tot[current] -= k;
      const double scale = resolution * k / total_strength;
      CommunityId best = current;
      double best_gain = link[current] - scale * tot[current];
      for (std::size_t t = 1; t < touched.size(); ++t) {
        const CommunityId c = touched[t];
        const double gain = link[c] - scale * tot[c];
        if (gain > best_gain + kMinGain) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += k;
      for (CommunityId c : touched) {
        link[c] = 0.0;
        seen[c] = 0;
      }
      if (best != current) {
        comm[i] = best;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

}  // namespace

double modularity(const CoauthorGraph& g, std::span<const CommunityId> community_of) {
  const std::size_t n = g.node_count();
  if (community_of.size() != n) {
    throw ArgumentError("community labeling covers " + std::to_string(community_of.size()) +
                        " nodes, graph has " + std::to_string(n));
  }
  if (std::find(community_of.begin(), community_of.end(), kUnassigned) != community_of.end()) {
    throw ArgumentError("community labeling leaves a node unassigned");
  }
  const std::size_t m = g.edge_count();
  if (m == 0) return 0.0;

  std::vector<CommunityId> labels(community_of.begin(), community_of.end());
  const std::size_t count = compact_labels(labels);
  std::vector<std::uint64_t> internal(count, 0);
  std::vector<std::uint64_t> degree_sum(count, 0);
  for (NodeId v = 0; v < n; ++v) {
    degree_sum[labels[v]] += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (w > v && labels[w] == labels[v]) ++internal[labels[v]];
    }
  }
  const double md = static_cast<double>(m);
  double q = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    const double share = static_cast<double>(degree_sum[c]) / (2.0 * md);
    q += static_cast<double>(internal[c]) / md - share * share;
  }
  return q;
}

Partition detect_communities(const CoauthorGraph& g, const LouvainOptions& options) {
  if (!(options.resolution > 0.0)) throw ArgumentError("resolution must be > 0");
  const std::size_t n = g.node_count();
  Partition out;
  out.seed = options.seed;
  out.resolution = options.resolution;
  out.community_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.community_of[v] = static_cast<CommunityId>(v);

  if (g.edge_count() > 0) {
    std::mt19937_64 rng(options.seed);
    LevelGraph level = level_from(g);
    const double total_strength = 2.0 * static_cast<double>(g.edge_count());
    std::vector<CommunityId> comm;
    while (local_moves(level, total_strength, options.resolution, rng, comm)) {
      const std::size_t count = compact_labels(comm);
      for (auto& c : out.community_of) c = comm[c];
      ++out.levels;
      if (count == level.size()) break;
      level = aggregate(level, comm, count);
    }
  }

  // Relabel by smallest member node id.
  std::vector<CommunityId> final_labels = out.community_of;
  out.community_count = compact_labels(final_labels);
  out.community_of = std::move(final_labels);
  out.modularity = modularity(g, out.community_of);

  // At the default resolution the component partition has Q >= 0 and is a
  // floor for any answer; Louvain nearly always beats it, but not provably.
  if (options.resolution == 1.0 && g.edge_count() > 0) {
    auto cc = connected_components(g);
    const double floor_q = modularity(g, cc.component_of);
    if (out.modularity < floor_q) {
      out.community_of = std::move(cc.component_of);
      out.community_count = cc.component_count;
      out.modularity = floor_q;
    }
  }
  return out;
}

}  // namespace coauthor
