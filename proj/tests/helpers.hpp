#pragma once

// Shared generators for randomized tests. Everything is seeded so failures
// reproduce.

#include <algorithm>
#include <numeric>
#include <vector>

#include "qturan/qcore.hpp"
#include "qturan/rng.hpp"

namespace test_helpers {

inline qturan::QGraph random_qgraph(int n, int q, double density, qturan::Rng& rng) {
  std::vector<qturan::QEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int a = 1; a <= q; ++a)
        for (int b = 1; b <= q; ++b)
          if (rng.next_unit() < density) edges.push_back({u, v, a, b});
  return qturan::QGraph(n, q, std::move(edges));
}

inline qturan::PatternGraph random_pattern(int n, double density, qturan::Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.next_unit() < density) edges.emplace_back(u, v);
  return qturan::PatternGraph(n, std::move(edges));
}

inline std::vector<int> random_permutation(int n, qturan::Rng& rng) {
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n; i >= 2; --i)
    std::swap(perm[i], perm[1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)))]);
  return perm;
}

inline qturan::QGraph relabel(const qturan::QGraph& g, const std::vector<int>& perm) {
  std::vector<qturan::QEdge> edges;
  for (const auto& e : g.edges()) {
    int u = perm[e.u], v = perm[e.v], a = e.a, b = e.b;
    if (u > v) {
      std::swap(u, v);
      std::swap(a, b);
    }
    edges.push_back({u, v, a, b});
  }
  return qturan::QGraph(g.n(), g.q(), std::move(edges));
}

inline qturan::PatternGraph relabel(const qturan::PatternGraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return qturan::PatternGraph(g.n(), std::move(edges));
}

}  // namespace test_helpers
