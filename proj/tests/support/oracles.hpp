// Brute-force reference implementations used only by tests. None of them
// shares code paths with the library algorithms they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coauthor/graph.hpp"

namespace coauthor::testing {

using Matrix = std::vector<std::vector<int>>;
inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Erdos-Renyi G(n, p) over labels "v0".."v{n-1}", every node declared.
inline CoauthorGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < p) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return std::move(b).build();
}

// Random graph with exactly m distinct edges (m must be <= n(n-1)/2).
inline CoauthorGraph random_graph_m(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> chosen;
  while (chosen.size() < m) {
    auto a = static_cast<NodeId>(rng() % n);
    auto b = static_cast<NodeId>(rng() % n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.emplace(a, b);
  }
  GraphBuilder builder;
  for (std::size_t i = 0; i < n; ++i) builder.add_node("v" + std::to_string(i));
  for (auto [a, b] : chosen) builder.add_edge(a, b);
  return std::move(builder).build();
}

inline CoauthorGraph graph_from(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (auto [u, v] : edges) b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return std::move(b).build();
}

inline CoauthorGraph path_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return graph_from(n, e);
}

inline CoauthorGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
  return graph_from(n, e);
}

// Star with node 0 as centre and `leaves` leaves.
inline CoauthorGraph star_graph(std::size_t leaves) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<int>(i));
  return graph_from(leaves + 1, e);
}

inline CoauthorGraph two_triangles() {
  return graph_from(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline Matrix adjacency(const CoauthorGraph& g) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Floyd-Warshall hop distances; kInf when unreachable.
inline Matrix all_pairs_distances(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Shortest-path counts sigma[s][t] by layering on the distance matrix.
inline std::vector<std::vector<double>> path_counts(const Matrix& a, const Matrix& d) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    int max_d = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (d[s][t] < kInf) max_d = std::max(max_d, d[s][t]);
    }
    sigma[s][s] = 1.0;
    for (int level = 1; level <= max_d; ++level) {
      for (std::size_t t = 0; t < n; ++t) {
        if (d[s][t] != level) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (a[u][t] && d[s][u] == level - 1) sigma[s][t] += sigma[s][u];
        }
      }
    }
  }
  return sigma;
}

// Raw undirected betweenness: for each unordered pair {s,t}, each v with
// d(s,v)+d(v,t) = d(s,t) receives sigma_sv * sigma_vt / sigma_st.
inline std::vector<double> betweenness_oracle(const CoauthorGraph& g) {
  const auto a = adjacency(g);
  const auto d = all_pairs_distances(a);
  const auto sigma = path_counts(a, d);
  const std::size_t n = a.size();
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (d[s][v] < kInf && d[v][t] < kInf && d[s][v] + d[v][t] == d[s][t]) {
          bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
        }
      }
    }
  }
  return bc;
}

inline std::vector<double> closeness_oracle(const CoauthorGraph& g, bool harmonic) {
  const auto d = all_pairs_distances(adjacency(g));
  const std::size_t n = d.size();
  std::vector<double> c(n, 0.0);
  if (n < 2) return c;
  for (std::size_t v = 0; v < n; ++v) {
    double sum = 0.0;
    double inv = 0.0;
    double reach = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v || d[v][u] >= kInf) continue;
      sum += d[v][u];
      inv += 1.0 / d[v][u];
      reach += 1.0;
    }
    if (harmonic) {
      c[v] = inv / static_cast<double>(n - 1);
    } else if (sum > 0) {
      c[v] = (reach / sum) * (reach / static_cast<double>(n - 1));
    }
  }
  return c;
}

// Dense power iteration on the explicit Google matrix.
inline std::vector<double> pagerank_oracle(const CoauthorGraph& g, double damping,
                                           int iterations = 2000) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));  // m[to][from]
  for (std::size_t j = 0; j < n; ++j) {
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += a[j][i];
    for (std::size_t i = 0; i < n; ++i) {
      const double walk = deg == 0 ? 1.0 / static_cast<double>(n) : a[j][i] / static_cast<double>(deg);
      m[i][j] = damping * walk + (1.0 - damping) / static_cast<double>(n);
    }
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += m[i][j] * x[j];
    }
    x = std::move(y);
  }
  return x;
}

// Q = 1/(2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
template <typename Labels>
double modularity_oracle(const CoauthorGraph& g, const Labels& labels) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    two_m += k[i];
  }
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] == labels[j]) q += a[i][j] - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

inline double clustering_oracle(const CoauthorGraph& g) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u) {
      if (a[v][u]) nb.push_back(u);
    }
    if (nb.size() < 2) continue;
    double closed = 0.0;
    double pairs = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        pairs += 1.0;
        closed += a[nb[i]][nb[j]];
      }
    }
    sum += closed / pairs;
  }
  return sum / static_cast<double>(n);
}

// Labels of the partition into connected components by repeated BFS on the matrix.
inline std::vector<int> components_oracle(const CoauthorGraph& g) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (a[v][u] && label[u] == -1) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

// Two labelings describe the same partition.
template <typename A, typename B>
bool same_partition(const A& x, const B& y) {
  if (x.size() != y.size()) return false;
  std::map<long long, long long> fwd;
  std::map<long long, long long> back;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto a = static_cast<long long>(x[i]);
    const auto b = static_cast<long long>(y[i]);
    auto [f, f_new] = fwd.emplace(a, b);
    auto [r, r_new] = back.emplace(b, a);
    if (f->second != b || r->second != a) return false;
  }
  return true;
}

// Edge multiset keyed by label pair (lexicographically ordered).
inline std::map<std::pair<std::string, std::string>, std::uint32_t> labelled_edges(const CoauthorGraph& g) {
  std::map<std::pair<std::string, std::string>, std::uint32_t> out;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out[{a, b}] = e.weight;
  }
  return out;
}

}  // namespace coauthor::testing
