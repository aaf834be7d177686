#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coauthor/centrality.hpp"
#include "coauthor/ingest.hpp"

namespace coauthor {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Every knob of a pipeline run. Serialized verbatim into manifest.json.
struct RunConfig {
  std::vector<std::filesystem::path> inputs;       // record files (ingest)
  std::optional<std::filesystem::path> edge_list;  // pre-projected graph instead of graph.tsv
  std::filesystem::path out_dir = "out";
  RecordSchema schema;
  int year_min = kMinYear;
  int year_max = kMaxYear;
  std::optional<std::string> field_id;
  std::size_t author_cap = kDefaultAuthorCap;
  ClosenessMode closeness_mode = ClosenessMode::component_scaled;
  BetweennessNormalization betweenness_normalization = BetweennessNormalization::none;
  double damping = 0.85;
  double tolerance = 1e-9;
  std::size_t max_iterations = 200;
  std::uint64_t seed = 0;
  double resolution = 1.0;
  std::size_t top_k = 10;
  std::size_t exact_threshold = 50000;
  std::size_t sample_sources = 256;
  bool clustering_exclude_deg1 = false;
  unsigned threads = 0;  // 0: hardware concurrency; never affects outputs
};

// Throws ConfigError when a value violates an operation's precondition.
void validate(const RunConfig& config);
nlohmann::json config_json(const RunConfig& config);

// Stage outputs inside config.out_dir. Each stage validates the config,
// writes its files atomically and records itself in manifest.json.
void cmd_ingest(const RunConfig& config);
void cmd_stats(const RunConfig& config);
void cmd_centrality(const RunConfig& config);
void cmd_communities(const RunConfig& config);
void cmd_rank(const RunConfig& config);
void cmd_ego(const RunConfig& config);
// ingest (when inputs are given), centrality, communities, stats, rank, ego.
void cmd_pipeline(const RunConfig& config);

}  // namespace coauthor
