#pragma once

// Reference implementations used only by tests. They work from plain edge
// lists and dense matrices so they share no code with the library.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline EdgeList random_edges(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

inline std::vector<std::vector<std::int64_t>> adjacency(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [i, j] : edges) {
    a[i][j] = 1;
    a[j][i] = 1;
  }
  return a;
}

/// Exact A^K * 1 in integers.
inline std::vector<std::int64_t> walk_counts(std::size_t n, const EdgeList& edges, std::size_t k) {
  const auto a = adjacency(n, edges);
  std::vector<std::int64_t> x(n, 1);
  for (std::size_t round = 0; round < k; ++round) {
    std::vector<std::int64_t> y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
    }
    x = y;
  }
  return x;
}

/// rank_i = number of entries strictly larger than x_i.
template <typename T>
std::vector<std::uint32_t> competition_ranks(const std::vector<T>& x) {
  std::vector<std::uint32_t> r(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += x[j] > x[i];
  }
  return r;
}

/// Dense power iteration to 1e-14 in L1.
inline std::vector<double> pagerank(std::size_t n, const EdgeList& edges, double d = 0.85) {
  const auto a = adjacency(n, edges);
  std::vector<double> deg(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) deg[j] += static_cast<double>(a[i][j]);
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = deg[j] == 0.0 ? 1.0 / static_cast<double>(n) : static_cast<double>(a[i][j]) / deg[j];
    }
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 100000; ++it) {
    std::vector<double> y(n, (1.0 - d) / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += d * m[i][j] * x[j];
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(y[i] - x[i]);
    x = y;
    if (change < 1e-14) break;
  }
  return x;
}

}  // namespace oracle
