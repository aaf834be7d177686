#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "coauthor/community.hpp"
#include "coauthor/graph.hpp"

namespace coauthor {

// 2m / n. Throws UndefinedValueError for an empty graph.
double avg_degree(const CoauthorGraph& g);

inline constexpr std::size_t kDefaultSampleSources = 256;
inline constexpr std::size_t kDefaultExactThreshold = 50000;

struct PathStats {
  std::uint32_t diameter = 0;
  double avg_path_length = 0.0;
  // Number of ordered (s, t), s != t, pairs at finite distance that were measured.
  std::uint64_t pair_count = 0;
  std::size_t sources = 0;
  bool degenerate = false;  // no finite pair existed
  bool estimate = false;    // computed from sampled sources
};

/// Diameter and mean distance over finite-distance ordered pairs only.
///
/// Exact mode runs a BFS from every node. Otherwise `sample_sources`
/// distinct sources (default 256, capped at n) are drawn with `seed`.
/// Distances are summed as integers, so the result is independent of the
/// worker count. Throws ArgumentError when sample_sources is 0.
PathStats diameter_and_apl(const CoauthorGraph& g, bool exact,
                           std::optional<std::size_t> sample_sources = std::nullopt,
                           std::uint64_t seed = 0, unsigned threads = 1);

/// Mean local clustering coefficient. Nodes with degree < 2 count as 0,
/// or are left out of the mean when `exclude_low_degree` is set (0 if no
/// node remains). Throws UndefinedValueError for an empty graph.
double avg_clustering(const CoauthorGraph& g, bool exclude_low_degree = false);

struct SummaryOptions {
  std::size_t exact_threshold = kDefaultExactThreshold;
  std::size_t sample_sources = kDefaultSampleSources;
  std::uint64_t seed = 0;
  bool clustering_exclude_low_degree = false;
  unsigned threads = 1;
};

struct NetworkSummary {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::optional<double> avg_degree;      // unset for an empty graph
  std::uint32_t diameter = 0;
  double avg_path_length = 0.0;
  std::optional<double> avg_clustering;  // unset for an empty graph
  std::size_t component_count = 0;
  std::optional<double> modularity;
  bool path_degenerate = false;
  bool path_estimate = false;
  std::size_t path_sources = 0;
};

// Exact path statistics when node_count <= exact_threshold, sampled otherwise.
NetworkSummary summarize(const CoauthorGraph& g, const Partition* partition = nullptr,
                         const SummaryOptions& options = {});

}  // namespace coauthor
