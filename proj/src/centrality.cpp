#include "coauthor/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coauthor/parallel.hpp"

namespace coauthor {

namespace {

// Upper bound on source blocks; fixed so reductions never depend on the worker count.
constexpr std::size_t kMaxSourceBlocks = 64;

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::size_t source_blocks(std::size_t n) { return std::max<std::size_t>(1, std::min(n, kMaxSourceBlocks)); }

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::betweenness: return "betweenness";
    case Measure::closeness: return "closeness";
    case Measure::pagerank: return "pagerank";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (to_string(m) == name) return m;
  }
  throw ArgumentError("unknown centrality measure '" + std::string(name) + "'");
}

std::string_view to_string(BetweennessNormalization m) {
  switch (m) {
    case BetweennessNormalization::none: return "none";
    case BetweennessNormalization::graph: return "graph";
    case BetweennessNormalization::component: return "component";
  }
  return "unknown";
}

BetweennessNormalization parse_betweenness_normalization(std::string_view name) {
  for (auto m : {BetweennessNormalization::none, BetweennessNormalization::graph,
                 BetweennessNormalization::component}) {
    if (to_string(m) == name) return m;
  }
  throw ArgumentError("unknown betweenness normalization '" + std::string(name) + "'");
}

std::string_view to_string(ClosenessMode m) {
  switch (m) {
    case ClosenessMode::component_scaled: return "component_scaled";
    case ClosenessMode::harmonic: return "harmonic";
  }
  return "unknown";
}

ClosenessMode parse_closeness_mode(std::string_view name) {
  for (auto m : {ClosenessMode::component_scaled, ClosenessMode::harmonic}) {
    if (to_string(m) == name) return m;
  }
  throw ArgumentError("unknown closeness mode '" + std::string(name) + "'");
}

CentralityVector degree_centrality(const CoauthorGraph& g) {
  CentralityVector out;
  out.measure = Measure::degree;
  out.scores.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out.scores[v] = static_cast<double>(g.degree(v));
  return out;
}

CentralityVector betweenness_centrality(const CoauthorGraph& g,
                                        BetweennessNormalization normalization, unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector out;
  out.measure = Measure::betweenness;
  out.params.normalization = normalization;
  out.scores.assign(n, 0.0);
  if (n == 0) return out;

  const std::size_t blocks = source_blocks(n);
  std::vector<std::vector<double>> partial(blocks);

  parallel_blocks(blocks, threads, [&](std::size_t block) {
    auto& acc = partial[block];
    acc.assign(n, 0.0);
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;
    order.reserve(n);
    const auto range = block_range(n, blocks, block);
    for (std::size_t s = range.begin; s < range.end; ++s) {
      order.clear();
      order.push_back(static_cast<NodeId>(s));
      dist[s] = 0;
      sigma[s] = 1.0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] == kUnreached) {
            dist[w] = dist[v] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      // Dependencies flow back along BFS-DAG edges in reverse visit order.
      for (std::size_t i = order.size(); i-- > 1;) {
        const NodeId w = order[i];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (NodeId v : g.neighbors(w)) {
          if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] * coeff;
        }
        acc[w] += delta[w];
      }
      for (NodeId v : order) {
        dist[v] = kUnreached;
        sigma[v] = 0.0;
        delta[v] = 0.0;
      }
    }
  });

  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) out.scores[v] += acc[v];
  }
  // Each unordered pair was counted from both endpoints.
  for (double& s : out.scores) s /= 2.0;

  auto pair_count = [](std::size_t size) {
    return size < 3 ? 0.0 : static_cast<double>(size - 1) * static_cast<double>(size - 2) / 2.0;
  };
  if (normalization == BetweennessNormalization::graph) {
    const double denom = pair_count(n);
    for (double& s : out.scores) s = denom == 0.0 ? 0.0 : s / denom;
  } else if (normalization == BetweennessNormalization::component) {
    const auto cc = connected_components(g);
    for (std::size_t v = 0; v < n; ++v) {
      const double denom = pair_count(cc.component_sizes[cc.component_of[v]]);
      out.scores[v] = denom == 0.0 ? 0.0 : out.scores[v] / denom;
    }
  }
  return out;
}

CentralityVector closeness_centrality(const CoauthorGraph& g, ClosenessMode mode,
                                      unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector out;
  out.measure = Measure::closeness;
  out.params.closeness_mode = mode;
  out.scores.assign(n, 0.0);
  if (n < 2) return out;
  const double others = static_cast<double>(n - 1);

  const std::size_t blocks = source_blocks(n);
  parallel_blocks(blocks, threads, [&](std::size_t block) {
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<NodeId> order;
    order.reserve(n);
    const auto range = block_range(n, blocks, block);
    for (std::size_t s = range.begin; s < range.end; ++s) {
      order.clear();
      order.push_back(static_cast<NodeId>(s));
      dist[s] = 0;
      std::uint64_t distance_sum = 0;
      double harmonic = 0.0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] != kUnreached) continue;
          dist[w] = dist[v] + 1;
          distance_sum += dist[w];
          harmonic += 1.0 / dist[w];
          order.push_back(w);
        }
      }
      const double reached = static_cast<double>(order.size() - 1);
      if (mode == ClosenessMode::harmonic) {
        out.scores[s] = harmonic / others;
      } else if (distance_sum > 0) {
        out.scores[s] = (reached / static_cast<double>(distance_sum)) * (reached / others);
      }
      for (NodeId v : order) dist[v] = kUnreached;
    }
  });
  return out;
}

PageRankNotConverged::PageRankNotConverged(std::vector<double> last_iterate, double residual,
                                           std::size_t iterations)
    : Error("pagerank did not converge after " + std::to_string(iterations) +
            " iterations (L1 residual " + std::to_string(residual) + ")"),
      last_iterate_(std::move(last_iterate)),
      residual_(residual),
      iterations_(iterations) {}

CentralityVector pagerank(const CoauthorGraph& g, const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw ArgumentError("pagerank damping must lie in (0, 1)");
  }
  if (!(options.tolerance > 0.0)) throw ArgumentError("pagerank tolerance must be > 0");

  const std::size_t n = g.node_count();
  CentralityVector out;
  out.measure = Measure::pagerank;
  out.params.damping = options.damping;
  out.params.tolerance = options.tolerance;
  out.params.max_iterations = options.max_iterations;
  out.params.iterations = 0;
  out.params.residual = 0.0;
  if (n == 0) return out;

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n, 0.0);
  std::vector<double> share(n, 0.0);
  const std::size_t blocks = source_blocks(n);

  double residual = std::numeric_limits<double>::infinity();
  std::size_t iter = 0;
  while (iter < options.max_iterations) {
    ++iter;
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const std::size_t deg = g.degree(v);
      if (deg == 0) {
        dangling += rank[v];
        share[v] = 0.0;
      } else {
        share[v] = rank[v] / static_cast<double>(deg);
      }
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    parallel_blocks(blocks, options.threads, [&](std::size_t block) {
      const auto range = block_range(n, blocks, block);
      for (std::size_t v = range.begin; v < range.end; ++v) {
        double pulled = 0.0;
        for (NodeId u : g.neighbors(static_cast<NodeId>(v))) pulled += share[u];
        next[v] = base + d * pulled;
      }
    });
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (residual < options.tolerance) break;
  }
  if (!(residual < options.tolerance)) {
    throw PageRankNotConverged(std::move(rank), residual, iter);
  }
  out.scores = std::move(rank);
  out.params.iterations = iter;
  out.params.residual = residual;
  return out;
}

const CentralityVector& CentralitySuite::get(Measure m) const {
  switch (m) {
    case Measure::degree: return degree;
    case Measure::betweenness: return betweenness;
    case Measure::closeness: return closeness;
    case Measure::pagerank: return pagerank;
  }
  throw ArgumentError("unknown centrality measure");
}

CentralitySuite compute_all(const CoauthorGraph& g, const CentralityOptions& options) {
  PageRankOptions pr = options.pagerank;
  pr.threads = options.threads;
  return {degree_centrality(g),
          betweenness_centrality(g, options.betweenness_normalization, options.threads),
          closeness_centrality(g, options.closeness_mode, options.threads), pagerank(g, pr)};
}

}  // namespace coauthor
