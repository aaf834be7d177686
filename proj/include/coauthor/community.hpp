#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "coauthor/graph.hpp"

namespace coauthor {

using CommunityId = std::uint32_t;
inline constexpr CommunityId kUnassigned = std::numeric_limits<CommunityId>::max();

struct Partition {
  std::vector<CommunityId> community_of;
  std::size_t community_count = 0;
  double modularity = 0.0;
  // Settings the partition was produced with.
  std::uint64_t seed = 0;
  double resolution = 1.0;
  std::size_t levels = 0;
};

/// Newman-Girvan modularity of an unweighted graph:
/// Q = sum_c [ L_c / m - (D_c / 2m)^2 ], L_c intra-community edges, D_c degree sum.
/// Labels may be any values other than kUnassigned; 0 when the graph has no edges.
/// Throws ArgumentError when the labeling does not cover every node.
double modularity(const CoauthorGraph& g, std::span<const CommunityId> community_of);

struct LouvainOptions {
  double resolution = 1.0;
  std::uint64_t seed = 0;
};

/// Louvain greedy modularity optimisation on the unweighted graph.
///
/// Each level sweeps nodes in a seeded random order, moving a node to the
/// neighbouring community with the strictly largest gain (ties keep it in
/// place) until a sweep moves nothing, then collapses communities into
/// nodes. Stops when a level changes nothing. Community ids are dense and
/// ordered by each community's smallest node id. Deterministic for a seed.
Partition detect_communities(const CoauthorGraph& g, const LouvainOptions& options = {});

}  // namespace coauthor
