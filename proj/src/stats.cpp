#include "coauthor/stats.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "coauthor/error.hpp"
#include "coauthor/parallel.hpp"

namespace coauthor {

double avg_degree(const CoauthorGraph& g) {
  if (g.node_count() == 0) throw UndefinedValueError("average degree of an empty graph");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

PathStats diameter_and_apl(const CoauthorGraph& g, bool exact,
                           std::optional<std::size_t> sample_sources, std::uint64_t seed,
                           unsigned threads) {
  if (sample_sources && *sample_sources == 0) {
    throw ArgumentError("sample_sources must be at least 1");
  }
  const std::size_t n = g.node_count();
  PathStats out;
  out.estimate = !exact;

  std::vector<NodeId> sources(n);
  for (std::size_t i = 0; i < n; ++i) sources[i] = static_cast<NodeId>(i);
  if (!exact) {
    const std::size_t k = std::min(n, sample_sources.value_or(kDefaultSampleSources));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(k);
    std::sort(sources.begin(), sources.end());
  }
  out.sources = sources.size();

  struct Partial {
    std::uint32_t max_dist = 0;
    std::uint64_t dist_sum = 0;
    std::uint64_t pairs = 0;
  };
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(sources.size(), 64));
  std::vector<Partial> partial(blocks);
  parallel_blocks(blocks, threads, [&](std::size_t block) {
    constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<NodeId> order;
    order.reserve(n);
    Partial p;
    const auto range = block_range(sources.size(), blocks, block);
    for (std::size_t i = range.begin; i < range.end; ++i) {
      const NodeId s = sources[i];
      order.clear();
      order.push_back(s);
      dist[s] = 0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] != kUnreached) continue;
          dist[w] = dist[v] + 1;
          p.dist_sum += dist[w];
          order.push_back(w);
        }
      }
      p.pairs += order.size() - 1;
      p.max_dist = std::max(p.max_dist, dist[order.back()]);
      for (NodeId v : order) dist[v] = kUnreached;
    }
    partial[block] = p;
  });

  std::uint64_t dist_sum = 0;
  for (const auto& p : partial) {
    out.diameter = std::max(out.diameter, p.max_dist);
    dist_sum += p.dist_sum;
    out.pair_count += p.pairs;
  }
  if (out.pair_count == 0) {
    out.degenerate = true;
  } else {
    out.avg_path_length = static_cast<double>(dist_sum) / static_cast<double>(out.pair_count);
  }
  return out;
}

double avg_clustering(const CoauthorGraph& g, bool exclude_low_degree) {
  const std::size_t n = g.node_count();
  if (n == 0) throw UndefinedValueError("average clustering of an empty graph");
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId v = 0; v < n; ++v) {
    const auto row = g.neighbors(v);
    const std::size_t deg = row.size();
    if (deg < 2) {
      if (!exclude_low_degree) ++counted;
      continue;
    }
    // Each closed neighbour pair (a, b), a < b, is found once via a's sorted row.
    std::uint64_t links = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      const auto other = g.neighbors(row[i]);
      auto it = std::upper_bound(other.begin(), other.end(), row[i]);
      auto jt = std::upper_bound(row.begin(), row.end(), row[i]);
      while (it != other.end() && jt != row.end()) {
        if (*it < *jt) {
          ++it;
        } else if (*jt < *it) {
          ++jt;
        } else {
          ++links;
          ++it;
          ++jt;
        }
      }
    }
    sum += 2.0 * static_cast<double>(links) / (static_cast<double>(deg) * static_cast<double>(deg - 1));
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

NetworkSummary summarize(const CoauthorGraph& g, const Partition* partition,
                         const SummaryOptions& options) {
  NetworkSummary s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  if (s.node_count > 0) {
    s.avg_degree = avg_degree(g);
    s.avg_clustering = avg_clustering(g, options.clustering_exclude_low_degree);
  }
  const bool exact = s.node_count <= options.exact_threshold;
  const auto paths = diameter_and_apl(g, exact, options.sample_sources, options.seed, options.threads);
  s.diameter = paths.diameter;
  s.avg_path_length = paths.avg_path_length;
  s.path_degenerate = paths.degenerate;
  s.path_estimate = paths.estimate;
  s.path_sources = paths.sources;
  s.component_count = connected_components(g).component_count;
  if (partition != nullptr) s.modularity = modularity(g, partition->community_of);
  return s;
}

}  // namespace coauthor
