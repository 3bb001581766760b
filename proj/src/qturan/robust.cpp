#include "qturan/robust.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qturan/rng.hpp"

namespace qturan {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const PatternGraph& g) {
  std::vector<Mask> adj(g.n() + 1, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << (v - 1);
    adj[v] |= Mask{1} << (u - 1);
  }
  return adj;
}

int popcount(Mask m) { return __builtin_popcountll(m); }

// Vertices ordered by degree descending (ties by index); branching on
// high-degree vertices first fails fast.
std::vector<int> degree_order(const PatternGraph& g) {
  auto deg = g.degrees();
  std::vector<int> order(g.n());
  for (int v = 1; v <= g.n(); ++v) order[v - 1] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  return order;
}

int greedy_clique(const std::vector<Mask>& adj, const std::vector<int>& order) {
  Mask clique = 0;
  int size = 0;
  for (int v : order) {
    const Mask bit = Mask{1} << (v - 1);
    if ((adj[v] & clique) == clique) {
      clique |= bit;
      ++size;
    }
  }
  return size;
}

int greedy_coloring(const PatternGraph& g, const std::vector<int>& order) {
  std::vector<int> color(g.n() + 1, -1);
  const auto adj = g.adjacency();
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(used + 1, false);
    for (int w : adj[v])
      if (color[w] >= 0) taken[color[w]] = true;
    int c = 0;
    while (c < used && taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

class KColoring {
 public:
  KColoring(const std::vector<Mask>& adj, const std::vector<int>& order, int k)
      : adj_(adj), order_(order), k_(k), color_(adj.size(), -1) {}

  bool run() { return place(0, 0); }

 private:
  bool place(std::size_t step, int used) {
    if (step == order_.size()) return true;
    const int v = order_[step];
    const int limit = std::min(k_, used + 1);  // new colours in canonical order
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < step && ok; ++j)
        if (color_[order_[j]] == c && (adj_[v] >> (order_[j] - 1)) & 1) ok = false;
      if (!ok) continue;
      color_[v] = c;
      if (place(step + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  const std::vector<int>& order_;
  int k_;
  std::vector<int> color_;
};

// True iff every component of the subgraph induced by `members` has at
// most as many edges as vertices.
bool induces_pseudoforest(const std::vector<Mask>& adj, Mask members) {
  Mask left = members;
  while (left) {
    const int start = __builtin_ctzll(left);
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        const int v = __builtin_ctzll(f);
        f &= f - 1;
        next |= adj[v + 1] & members & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    int edge_ends = 0;
    Mask c = comp;
    while (c) {
      const int v = __builtin_ctzll(c);
      c &= c - 1;
      edge_ends += popcount(adj[v + 1] & comp);
    }
    if (edge_ends / 2 > popcount(comp)) return false;
    left &= ~comp;
  }
  return true;
}

class PseudoforestPartition {
 public:
  PseudoforestPartition(const std::vector<Mask>& adj, const std::vector<int>& order, int k)
      : adj_(adj), order_(order), classes_(k, 0) {}

  bool run() { return place(0, 0); }

 private:
  bool place(std::size_t step, int used) {
    if (step == order_.size()) return true;
    const int v = order_[step];
    const Mask bit = Mask{1} << (v - 1);
    const int limit = std::min(static_cast<int>(classes_.size()), used + 1);
    for (int c = 0; c < limit; ++c) {
      if (!induces_pseudoforest(adj_, classes_[c] | bit)) continue;
      classes_[c] |= bit;
      if (place(step + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~bit;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  const std::vector<int>& order_;
  std::vector<Mask> classes_;
};

}  // namespace

int chromatic_number(const PatternGraph& g, int max_vertices) {
  if (g.n() == 0) return 0;
  require(g.n() <= max_vertices && g.n() <= 64, Error::Kind::limit,
          "chromatic number cap exceeded: n = " + std::to_string(g.n()));
  if (g.edges().empty()) return 1;
  const auto adj = adjacency_masks(g);
  const auto order = degree_order(g);
  const int ub = greedy_coloring(g, order);
  for (int k = greedy_clique(adj, order); k < ub; ++k)
    if (KColoring(adj, order, k).run()) return k;
  return ub;
}

namespace {

// Canonical copy of a removal set: oriented u < v, sorted, deduplicated,
// every member checked against the pattern's edge set.
EdgeList normalize_removal_set(const PatternGraph& f, const EdgeList& d) {
  EdgeList out;
  out.reserve(d.size());
  for (auto [u, v] : d) {
    const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    require(std::binary_search(f.edges().begin(), f.edges().end(), e), Error::Kind::argument,
            "removal set member is not a pattern edge");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_selection_image(const PatternGraph& f, const EdgeList& d_raw) {
  const EdgeList d = normalize_removal_set(f, d_raw);
  std::vector<bool> covered(f.n() + 1, false);
  for (auto [u, v] : d) covered[u] = covered[v] = true;
  const auto deg = f.degrees();
  for (int v = 1; v <= f.n(); ++v)
    if (deg[v] > 0 && !covered[v]) return false;

  // Components of (V, d): union-find with per-root vertex and edge counts.
  std::vector<int> parent(f.n() + 1);
  std::vector<int> verts(f.n() + 1, 1), edges(f.n() + 1, 0);
  for (int v = 1; v <= f.n(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : d) {
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) {
      ++edges[ru];
    } else {
      parent[rv] = ru;
      verts[ru] += verts[rv];
      edges[ru] += edges[rv] + 1;
    }
  }
  for (int v = 1; v <= f.n(); ++v)
    if (find(v) == v && edges[v] > verts[v]) return false;
  return true;
}

std::optional<EdgeList> selection_for(const PatternGraph& f, const EdgeList& d_raw) {
  // Match every edge of d to a distinct endpoint that will select it
  // (Kuhn augmenting paths), then let the remaining covered vertices pick
  // any incident member of d.
  const EdgeList d = normalize_removal_set(f, d_raw);
  std::vector<std::vector<int>> incident(f.n() + 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto [u, v] = d[i];
    incident[u].push_back(static_cast<int>(i));
    incident[v].push_back(static_cast<int>(i));
  }

  std::vector<int> edge_rep(d.size(), 0);    // edge index -> selecting vertex
  std::vector<int> vertex_edge(f.n() + 1, -1);  // vertex -> matched edge index
  std::vector<bool> visited;
  auto try_assign = [&](auto&& self, int edge) -> bool {
    auto [u, v] = d[edge];
    for (int vertex : {u, v}) {
      if (visited[vertex]) continue;
      visited[vertex] = true;
      if (vertex_edge[vertex] < 0 || self(self, vertex_edge[vertex])) {
        vertex_edge[vertex] = edge;
        edge_rep[edge] = vertex;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < d.size(); ++i) {
    visited.assign(f.n() + 1, false);
    if (!try_assign(try_assign, static_cast<int>(i))) return std::nullopt;
  }

  const auto deg = f.degrees();
  EdgeList selection(f.n(), {0, 0});
  std::vector<bool> has_pick(f.n() + 1, false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    selection[edge_rep[i] - 1] = d[i];
    has_pick[edge_rep[i]] = true;
  }
  for (int v = 1; v <= f.n(); ++v) {
    if (deg[v] == 0 || has_pick[v]) continue;
    bool found = false;
    for (int i : incident[v]) {
      selection[v - 1] = d[i];
      found = true;
      break;
    }
    if (!found) return std::nullopt;  // a non-isolated vertex d does not cover
  }
  return selection;
}

std::vector<EdgeList> enumerate_removal_sets(const PatternGraph& f, std::size_t max_edges) {
  require(f.size() <= max_edges, Error::Kind::limit,
          "removal-set enumeration cap exceeded: |E| = " + std::to_string(f.size()));
  const auto& edges = f.edges();
  const int m = static_cast<int>(edges.size());

  // Last edge index incident to each vertex, for the coverage cut-off.
  std::vector<int> last_incident(f.n() + 1, -1);
  for (int i = 0; i < m; ++i) {
    last_incident[edges[i].first] = i;
    last_incident[edges[i].second] = i;
  }

  std::vector<EdgeList> out;
  EdgeList current;
  std::vector<int> chosen_deg(f.n() + 1, 0);

  // Union-find with rollback over the chosen edges.
  std::vector<int> parent(f.n() + 1), verts(f.n() + 1, 1), comp_edges(f.n() + 1, 0);
  for (int v = 1; v <= f.n(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  struct Change {
    int root, merged;
    bool unioned;
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(current);
      return;
    }
    const auto [u, v] = edges[i];

    // Take edge i, unless that overloads a component.
    const int ru = find(u);
    const int rv = find(v);
    bool feasible;
    Change change{ru, rv, ru != rv};
    if (ru == rv) {
      ++comp_edges[ru];
      feasible = comp_edges[ru] <= verts[ru];
    } else {
      parent[rv] = ru;
      verts[ru] += verts[rv];
      comp_edges[ru] += comp_edges[rv] + 1;
      feasible = comp_edges[ru] <= verts[ru];
    }
    if (feasible) {
      ++chosen_deg[u];
      ++chosen_deg[v];
      current.push_back(edges[i]);
      self(self, i + 1);
      current.pop_back();
      --chosen_deg[u];
      --chosen_deg[v];
    }
    if (change.unioned) {
      parent[change.merged] = change.merged;
      verts[change.root] -= verts[change.merged];
      comp_edges[change.root] -= comp_edges[change.merged] + 1;
    } else {
      --comp_edges[change.root];
    }

    // Skip edge i, unless that strands an uncovered endpoint for good.
    if ((chosen_deg[u] > 0 || last_incident[u] > i) && (chosen_deg[v] > 0 || last_incident[v] > i))
      self(self, i + 1);
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

PatternGraph remove_edges(const PatternGraph& f, const EdgeList& d) {
  EdgeList kept;
  for (auto e : f.edges())
    if (std::find(d.begin(), d.end(), e) == d.end()) kept.push_back(e);
  return PatternGraph(f.n(), std::move(kept));
}

int robust_chromatic(const PatternGraph& f, int max_vertices) {
  if (f.n() == 0) return 0;
  require(f.n() <= max_vertices && f.n() <= 64, Error::Kind::limit,
          "robust chromatic number cap exceeded: n = " + std::to_string(f.n()));
  if (f.edges().empty()) return 1;
  const auto adj = adjacency_masks(f);
  const auto order = degree_order(f);
  const int ub = chromatic_number(f, max_vertices);
  for (int k = 1; k < ub; ++k)
    if (PseudoforestPartition(adj, order, k).run()) return k;
  return ub;
}

PatternGraph random_multipartite(int m, int r, double p, std::uint64_t seed) {
  require(m >= 1 && r >= 1, Error::Kind::argument, "random multipartite needs m, r >= 1");
  require(p >= 0.0 && p <= 1.0, Error::Kind::argument, "probability must be in [0,1]");
  const int n = m * r;
  auto part = [m](int v) { return (v - 1) / m; };
  Rng rng(seed);
  EdgeList edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (part(u) == part(v)) continue;
      if (rng.next_unit() < p) edges.emplace_back(u, v);
    }
  return PatternGraph(n, std::move(edges));
}

ExperimentReport chi1_experiment(int m, int r, double p, int trials, std::uint64_t seed,
                                 int jobs) {
  require(trials >= 1, Error::Kind::argument, "experiment needs at least one trial");
  ExperimentReport report;
  report.m = m;
  report.r = r;
  report.p = p;
  report.trials = trials;
  report.seed = seed;
  report.log.resize(trials);

  const int cap = std::max(16, m * r);
  auto run_trial = [&](int t) {
    TrialLog log;
    log.trial = t;
    log.seed = mix_seed(seed, static_cast<std::uint64_t>(t));
    const PatternGraph g = random_multipartite(m, r, p, log.seed);
    log.edges = static_cast<long long>(g.size());
    log.chi = chromatic_number(g, cap);
    log.chi1 = robust_chromatic(g, cap);
    report.log[t] = log;
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) run_trial(t);
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(jobs, trials); ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int hits = 0;
  for (const auto& log : report.log)
    if (log.chi1 == r) ++hits;
  report.frequency = static_cast<double>(hits) / trials;
  return report;
}

}  // namespace qturan
