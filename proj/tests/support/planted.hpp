#pragma once

#include <random>
#include <utility>
#include <vector>

#include "coauthor/community.hpp"
#include "coauthor/graph.hpp"

namespace coauthor::testing {

struct PlantedGraph {
  CoauthorGraph graph;
  std::vector<CommunityId> blocks;
};

// Stochastic block model with equal blocks.
inline PlantedGraph planted_partition(std::size_t block_count, std::size_t block_size, double p_in,
                                      double p_out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = block_count * block_size;
  PlantedGraph out;
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_node("v" + std::to_string(i));
    out.blocks.push_back(static_cast<CommunityId>(i / block_size));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = out.blocks[i] == out.blocks[j] ? p_in : p_out;
      if (coin(rng) < p) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  out.graph = std::move(b).build();
  return out;
}

inline CoauthorGraph two_k5() {
  GraphBuilder b;
  for (int i = 0; i < 10; ++i) b.add_node("v" + std::to_string(i));
  for (int base : {0, 5}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) b.add_edge(static_cast<NodeId>(base + i), static_cast<NodeId>(base + j));
    }
  }
  return std::move(b).build();
}

}  // namespace coauthor::testing
