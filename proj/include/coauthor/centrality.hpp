#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coauthor/error.hpp"
#include "coauthor/graph.hpp"

namespace coauthor {

enum class Measure { degree, betweenness, closeness, pagerank };

inline constexpr Measure kAllMeasures[] = {Measure::degree, Measure::betweenness,
                                           Measure::closeness, Measure::pagerank};

std::string_view to_string(Measure m);
// Throws ArgumentError on unknown names.
Measure parse_measure(std::string_view name);

enum class BetweennessNormalization {
  none,       // raw pair-dependency sums
  graph,      // divided by (n-1)(n-2)/2 with n = whole-graph node count
  component,  // same constant with n = size of the node's component
};

enum class ClosenessMode {
  component_scaled,  // Wasserman-Faust
  harmonic,
};

std::string_view to_string(BetweennessNormalization m);
BetweennessNormalization parse_betweenness_normalization(std::string_view name);
std::string_view to_string(ClosenessMode m);
ClosenessMode parse_closeness_mode(std::string_view name);

// Parameters a score vector was computed with; only the fields that apply to
// the measure are set.
struct CentralityParams {
  std::optional<BetweennessNormalization> normalization;
  std::optional<ClosenessMode> closeness_mode;
  std::optional<double> damping;
  std::optional<double> tolerance;
  std::optional<std::size_t> max_iterations;
  std::optional<std::size_t> iterations;
  std::optional<double> residual;
};

struct CentralityVector {
  Measure measure = Measure::degree;
  std::vector<double> scores;
  CentralityParams params;
};

CentralityVector degree_centrality(const CoauthorGraph& g);

/// Brandes accumulation over every BFS source, halved for undirected pairs.
///
/// Sources are split into a fixed number of blocks independent of `threads`;
/// per-block partial sums are added in block order, so the result is
/// bit-identical for every worker count.
CentralityVector betweenness_centrality(
    const CoauthorGraph& g, BetweennessNormalization normalization = BetweennessNormalization::none,
    unsigned threads = 1);

CentralityVector closeness_centrality(const CoauthorGraph& g,
                                      ClosenessMode mode = ClosenessMode::component_scaled,
                                      unsigned threads = 1);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-9;  // on the L1 change between iterates
  std::size_t max_iterations = 200;
  unsigned threads = 1;
};

class PageRankNotConverged : public Error {
 public:
  PageRankNotConverged(std::vector<double> last_iterate, double residual, std::size_t iterations);

  const std::vector<double>& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
  std::size_t iterations_;
};

/// Power iteration on the random walk that follows each undirected edge in
/// both directions. Isolated nodes are dangling: their mass is spread
/// uniformly. Throws PageRankNotConverged after max_iterations.
CentralityVector pagerank(const CoauthorGraph& g, const PageRankOptions& options = {});

struct CentralityOptions {
  BetweennessNormalization betweenness_normalization = BetweennessNormalization::none;
  ClosenessMode closeness_mode = ClosenessMode::component_scaled;
  PageRankOptions pagerank;
  unsigned threads = 1;  // overrides pagerank.threads
};

// The four measures of one graph, as consumed by rank tables.
struct CentralitySuite {
  CentralityVector degree;
  CentralityVector betweenness;
  CentralityVector closeness;
  CentralityVector pagerank;

  const CentralityVector& get(Measure m) const;
};

CentralitySuite compute_all(const CoauthorGraph& g, const CentralityOptions& options = {});

}  // namespace coauthor
