#include "qturan/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qturan/robust.hpp"

namespace qturan {

Partition::Partition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  require(!blocks_.empty(), Error::Kind::argument, "partition needs at least one block");
  for (auto& b : blocks_) {
    require(!b.empty(), Error::Kind::argument, "partition blocks must be nonempty");
    n_ += static_cast<int>(b.size());
  }
  block_of_.assign(n_ + 1, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int v : blocks_[i]) {
      require(1 <= v && v <= n_, Error::Kind::argument, "partition vertex out of range");
      require(block_of_[v] == -1, Error::Kind::argument, "partition blocks must be disjoint");
      block_of_[v] = static_cast<int>(i);
    }
  }
}

Partition Partition::consecutive(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int s : sizes) {
    require(s >= 1, Error::Kind::argument, "partition block sizes must be positive");
    std::vector<int> b(s);
    std::iota(b.begin(), b.end(), next);
    next += s;
    blocks.push_back(std::move(b));
  }
  return Partition(std::move(blocks));
}

Partition Partition::balanced(int n, int r) {
  require(r >= 1 && n >= r, Error::Kind::argument, "balanced partition needs 1 <= r <= n");
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return Partition::consecutive(sizes);
}

QGraph universal_tree(int q, int n) {
  require(q >= 1, Error::Kind::argument, "universal tree needs q >= 1");
  require(n >= 2, Error::Kind::argument, "universal tree needs n >= 2");
  std::vector<QEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int a = 1; a <= q; ++a)
        for (int b = 1; b <= q; ++b)
          if (a + b < q + 1 || (a + b == q + 1 && a < b)) edges.push_back({u, v, a, b});
  return QGraph(n, q, std::move(edges));
}

QGraph blowup(const PatternGraph& g, int q) {
  require(q >= 1, Error::Kind::argument, "blow-up needs q >= 1");
  std::vector<QEdge> edges;
  edges.reserve(static_cast<std::size_t>(q) * q * g.size());
  for (auto [u, v] : g.edges())
    for (int a = 1; a <= q; ++a)
      for (int b = 1; b <= q; ++b) edges.push_back({u, v, a, b});
  return QGraph(g.n(), q, std::move(edges));
}

QGraph low_complement(int q, int n) {
  require(q >= 1, Error::Kind::argument, "low complement needs q >= 1");
  require(n >= 2, Error::Kind::argument, "low complement needs n >= 2");
  const int t = low_threshold(q);
  std::vector<QEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int a = 1; a <= q; ++a)
        for (int b = 1; b <= q; ++b)
          if (a < t || b < t) edges.push_back({u, v, a, b});
  return QGraph(n, q, std::move(edges));
}

namespace {

// Per component: (vertices, edges) of the pattern graph.
std::vector<std::pair<int, int>> component_profile(const PatternGraph& f) {
  std::vector<int> comp(f.n() + 1, -1);
  const auto adj = f.adjacency();
  int comps = 0;
  for (int v = 1; v <= f.n(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = comps;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = comps;
          stack.push_back(y);
        }
    }
    ++comps;
  }
  std::vector<std::pair<int, int>> profile(comps, {0, 0});
  for (int v = 1; v <= f.n(); ++v) ++profile[comp[v]].first;
  for (auto [u, v] : f.edges()) ++profile[comp[u]].second;
  return profile;
}

}  // namespace

QGraph chi1_lower(const PatternGraph& f, int q, int n) {
  require(q >= 1, Error::Kind::argument, "chi1 lower construction needs q >= 1");
  require(n >= 2, Error::Kind::argument, "chi1 lower construction needs n >= 2");
  const auto profile = component_profile(f);
  const bool super_unicyclic =
      std::any_of(profile.begin(), profile.end(), [](auto p) { return p.second > p.first; });
  if (!super_unicyclic) {
    const bool forest =
        std::all_of(profile.begin(), profile.end(), [](auto p) { return p.second < p.first; });
    // A forest degrades to the plain low complement; a unicyclic component
    // breaks the freeness guarantee entirely, so it is rejected.
    require(forest, Error::Kind::argument,
            "chi1 lower construction needs a pattern component with more edges than vertices");
    return low_complement(q, n);
  }

  const int chi1 = robust_chromatic(f);
  const int parts = chi1 - 1;  // >= 1: a super-unicyclic component keeps an edge
  const Partition turan = Partition::balanced(n, parts);
  const int t = low_threshold(q);
  auto edges = low_complement(q, n).edges();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (turan.block_of(u) == turan.block_of(v)) continue;
      for (int a = t; a <= q; ++a)
        for (int b = t; b <= q; ++b) edges.push_back({u, v, a, b});
    }
  return QGraph(n, q, std::move(edges));
}

QGraph tree_family(const Partition& p, TreeFamilyVariant variant) {
  const int n = p.n();
  require(n >= 2, Error::Kind::argument, "tree family needs n >= 2");
  const int last = p.blocks() - 1;
  std::vector<QEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const int bu = p.block_of(u);
      const int bv = p.block_of(v);
      if (!(variant == TreeFamilyVariant::pruned && bu == last && bv == last))
        edges.push_back({u, v, 1, 1});
      if (bu < bv) edges.push_back({u, v, 1, 2});
      if (bv < bu) edges.push_back({u, v, 2, 1});
    }
  return QGraph(n, 2, std::move(edges));
}

QGraph tripart_13_4(int n) {
  require(n >= 8, Error::Kind::argument, "tripart construction needs n >= 8");
  const int a_size = n / 4;
  std::vector<QEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const bool u_in_a = u <= a_size;
      const bool v_in_a = v <= a_size;
      if (u_in_a && v_in_a) {
        edges.push_back({u, v, 1, 1});
      } else if (!u_in_a && !v_in_a) {
        edges.push_back({u, v, 1, 1});
        edges.push_back({u, v, 2, 1});
        edges.push_back({u, v, 1, 2});
      } else {
        for (int a = 1; a <= 2; ++a)
          for (int b = 1; b <= 2; ++b) edges.push_back({u, v, a, b});
      }
    }
  return QGraph(n, 2, std::move(edges));
}

QGraph triangle_family(int q, int n, int variant) {
  require(1 <= variant && variant <= 4, Error::Kind::argument, "triangle family variant must be 1..4");
  switch (variant) {
    case 1:
      return universal_tree(q, n);
    case 2: {
      require(q % 2 == 0, Error::Kind::argument, "triangle family variant 2 needs even q");
      require(n >= 2, Error::Kind::argument, "triangle family needs n >= 2");
      const Partition halves = Partition::balanced(n, 2);
      std::vector<std::pair<int, int>> bip;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
          if (halves.block_of(u) != halves.block_of(v)) bip.emplace_back(u, v);
      return blowup(PatternGraph(n, std::move(bip)), q);
    }
    case 3: {
      require(q % 2 == 0, Error::Kind::argument, "triangle family variant 3 needs even q");
      require(n >= 2 && n % 2 == 0, Error::Kind::argument, "triangle family variant 3 needs even n");
      const int k = n / 2;
      const int half = q / 2;
      std::vector<QEdge> edges;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
          const bool same_side = (u <= k) == (v <= k);
          for (int a = 1; a <= q; ++a)
            for (int b = 1; b <= q; ++b) {
              const bool keep = same_side ? (a <= half && b <= half) : (a <= half || b <= half);
              if (keep) edges.push_back({u, v, a, b});
            }
        }
      return QGraph(n, q, std::move(edges));
    }
    default: {
      require(q == 4, Error::Kind::argument, "triangle family variant 4 needs q = 4");
      require(n >= 3 && n % 3 == 0, Error::Kind::argument,
              "triangle family variant 4 needs n divisible by 3");
      const int k = n / 3;
      // Weight tables; cross pairs to the last block carry their second
      // coordinate on the block-Z endpoint.
      static constexpr std::array<std::pair<int, int>, 5> inside_xy{
          {{3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}}};
      static constexpr std::array<std::pair<int, int>, 4> inside_z{
          {{2, 2}, {2, 1}, {1, 2}, {1, 1}}};
      static constexpr std::array<std::pair<int, int>, 10> cross_z{
          {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}};
      auto block = [k](int v) { return v <= k ? 0 : v <= 2 * k ? 1 : 2; };
      std::vector<QEdge> edges;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
          const int bu = block(u);
          const int bv = block(v);
          if (bu == bv) {
            for (auto [a, b] : bu == 2 ? std::vector<std::pair<int, int>>(inside_z.begin(), inside_z.end())
                                       : std::vector<std::pair<int, int>>(inside_xy.begin(), inside_xy.end()))
              edges.push_back({u, v, a, b});
          } else if (bu != 2 && bv != 2) {
            for (int a = 1; a <= 3; ++a)
              for (int b = 1; b <= 3; ++b) edges.push_back({u, v, a, b});
          } else {
            // v is the block-Z endpoint: block-Z indices are the largest.
            for (auto [a, b] : cross_z) edges.push_back({u, v, a, b});
          }
        }
      return QGraph(n, 4, std::move(edges));
    }
  }
}

namespace {

// One triple of q-edges on vertices {1,2,3}: the weight pairs ws[0..2] are
// laid on the support pairs (1,2),(2,3),(3,1) rotated by rot, each pair
// oriented first-coordinate-at-first-vertex.
std::array<QEdge, 3> lay_triple(const std::array<std::pair<int, int>, 3>& ws, int rot) {
  static constexpr std::array<std::pair<int, int>, 3> pos{{{1, 2}, {2, 3}, {3, 1}}};
  std::array<QEdge, 3> tri;
  for (int i = 0; i < 3; ++i) {
    const auto [x, y] = pos[(i + rot) % 3];
    const auto [alpha, beta] = ws[i];
    const int u = std::min(x, y);
    const int v = std::max(x, y);
    tri[i] = {u, v, u == x ? alpha : beta, v == y ? beta : alpha};
  }
  std::sort(tri.begin(), tri.end());
  return tri;
}

}  // namespace

std::vector<std::array<QEdge, 3>> triple_partition(int q) {
  require(q >= 2, Error::Kind::argument, "triple partition needs q >= 2");
  std::vector<std::array<QEdge, 3>> triples;
  for (int j = 0; 3 * j <= q - 2; ++j)
    for (int i = 1; i <= q - 1 - 3 * j; ++i)
      for (int rot = 0; rot < 3; ++rot)
        triples.push_back(lay_triple(
            {{{i + 2 * j, j + 1}, {q - j, i + j}, {q + 1 - i - j, q + 1 - i - 2 * j}}}, rot));
  for (int j = 0; 3 * j <= q - 3; ++j)
    for (int i = 1; i <= q - 2 - 3 * j; ++i)
      for (int rot = 0; rot < 3; ++rot)
        triples.push_back(lay_triple(
            {{{i + j, i + 2 * j + 1}, {q - i - 2 * j, q - j}, {j + 1, q + 1 - i - j}}}, rot));
  if (q % 3 == 1) {
    const int r = (q - 1) / 3;
    triples.push_back(lay_triple({{{2 * r + 1, r + 1}, {2 * r + 1, r + 1}, {2 * r + 1, r + 1}}}, 0));
  }
  if (q % 3 == 2) {
    const int r = (q - 2) / 3;
    triples.push_back(lay_triple({{{r + 1, 2 * r + 2}, {r + 1, 2 * r + 2}, {r + 1, 2 * r + 2}}}, 0));
  }
  return triples;
}

QGraph q3_pair_example(int n) {
  require(n >= 4 && n % 4 == 0, Error::Kind::argument,
          "q3 pair example needs n divisible by 4");
  const int a_size = 3 * n / 4;
  std::vector<QEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int u = std::min(i, j);
      const int v = std::max(i, j);
      if (i <= a_size && j > a_size)
        edges.push_back(u == i ? QEdge{u, v, 2, 3} : QEdge{u, v, 3, 2});
      if (i <= a_size || j <= a_size)
        edges.push_back(u == i ? QEdge{u, v, 2, 1} : QEdge{u, v, 1, 2});
    }
  return QGraph(n, 3, std::move(edges));
}

}  // namespace qturan
