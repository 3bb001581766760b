#include "qturan/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qturan/extremal.hpp"

namespace qturan::oracle {

namespace {

// Visits injective maps of all pattern vertices (isolated ones included)
// crossed with all host-edge choices; calls sink on each valid s-copy and
// stops early when sink returns false.
void scan_embeddings(const QGraph& h, const PatternGraph& f, int s,
                     const std::function<bool(const std::vector<QEdge>&)>& sink) {
  const int n = h.n();
  const int fn = f.n();
  if (fn > n) return;

  std::vector<int> image(fn + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::vector<QEdge> choice(f.size());

  auto valid_choice = [&]() {
    for (int v = 1; v <= fn; ++v) {
      std::vector<int> weights;
      for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const auto [x, y] = f.edges()[i];
        if (x == v || y == v) weights.push_back(choice[i].weight_at(image[v]));
      }
      std::sort(weights.begin(), weights.end());
      if (weights.size() >= 2 && weights[0] + weights[1] < s) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> pick_edges = [&](std::size_t i) -> bool {
    if (i == f.edges().size()) {
      if (!valid_choice()) return true;
      return sink(choice);
    }
    const auto [x, y] = f.edges()[i];
    auto [lo, hi] = h.support_range(image[x], image[y]);
    for (std::size_t k = lo; k < hi; ++k) {
      choice[i] = h.edges()[k];
      if (!pick_edges(i + 1)) return false;
    }
    return true;
  };

  std::function<bool(int)> pick_vertex = [&](int v) -> bool {
    if (v > fn) return pick_edges(0);
    for (int host = 1; host <= n; ++host) {
      if (used[host]) continue;
      used[host] = true;
      image[v] = host;
      const bool keep_going = pick_vertex(v + 1);
      used[host] = false;
      if (!keep_going) return false;
    }
    return true;
  };

  pick_vertex(1);
}

}  // namespace

bool contains_s_copy_bruteforce(const QGraph& h, const PatternGraph& f, int s) {
  require(s >= 1, Error::Kind::argument, "s-copy detection needs s >= 1");
  require(f.n() >= 1 || !f.edges().empty(), Error::Kind::argument,
          "pattern with no vertices rejected");
  if (f.edges().empty()) return h.n() >= f.n();
  bool found = false;
  scan_embeddings(h, f, s, [&](const std::vector<QEdge>&) {
    found = true;
    return false;
  });
  return found;
}

long long count_embeddings_bruteforce(const QGraph& h, const PatternGraph& f, int s) {
  long long count = 0;
  scan_embeddings(h, f, s, [&](const std::vector<QEdge>&) {
    ++count;
    return true;
  });
  return count;
}

int robust_chromatic_selection_functions(const PatternGraph& f) {
  if (f.n() == 0) return 0;
  if (f.edges().empty()) return 1;
  std::vector<int> selectors;  // non-isolated vertices
  const auto adj_edges = [&] {
    std::vector<std::vector<std::pair<int, int>>> inc(f.n() + 1);
    for (auto e : f.edges()) {
      inc[e.first].push_back(e);
      inc[e.second].push_back(e);
    }
    return inc;
  }();
  for (int v = 1; v <= f.n(); ++v)
    if (!adj_edges[v].empty()) selectors.push_back(v);

  int best = chromatic_number(f, 64);
  EdgeList image;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == selectors.size()) {
      EdgeList d = image;
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      best = std::min(best, chromatic_number(remove_edges(f, d), 64));
      return;
    }
    for (auto e : adj_edges[selectors[i]]) {
      image.push_back(e);
      rec(i + 1);
      image.pop_back();
    }
  };
  rec(0);
  return best;
}

int robust_chromatic_removal_sets(const PatternGraph& f) {
  if (f.n() == 0) return 0;
  if (f.edges().empty()) return 1;
  int best = chromatic_number(f, 64);
  for (const EdgeList& d : enumerate_removal_sets(f, 24))
    best = std::min(best, chromatic_number(remove_edges(f, d), 64));
  return best;
}

std::pair<long long, WeightFunction> max_star_weight_exhaustive(int k) {
  require(0 <= k && k <= 5, Error::Kind::limit, "exhaustive scan supports k <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) pairs.emplace_back(u, v);
  static constexpr int kValues[3] = {0, 2, 3};

  long long best = -1;
  WeightFunction best_w(k, 0);
  std::vector<int> digits(pairs.size(), 0);
  while (true) {
    WeightFunction w(k, 0);
    long long sum = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      w.set(pairs[i].first, pairs[i].second, kValues[digits[i]]);
      sum += kValues[digits[i]];
    }
    if (sum > best && check_star(w).ok) {
      best = sum;
      best_w = w;
    }
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return {best < 0 ? 0 : best, best_w};
}

long long extremal_bruteforce(int n, const PatternGraph& f, int q, int s) {
  const ForbiddenHypergraph hg = forbidden_configs(n, q, f, s);
  const int m = static_cast<int>(hg.ground.size());
  require(m <= 20, Error::Kind::limit, "subset scan supports at most 20 ground q-edges");
  std::vector<std::uint32_t> masks;
  for (const auto& he : hg.hyperedges) {
    std::uint32_t mask = 0;
    for (int e : he) mask |= std::uint32_t{1} << e;
    masks.push_back(mask);
  }
  long long best = 0;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << m); ++sub) {
    const int size = __builtin_popcount(sub);
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t mask : masks)
      if ((sub & mask) == mask) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

}  // namespace qturan::oracle
