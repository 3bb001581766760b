#include "qturan/detect.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace qturan {

namespace {

constexpr int kNoWeight = std::numeric_limits<int>::max();

// Backtracking search over pattern vertices in a connectivity-respecting
// order. Each step maps one pattern vertex to an unused host vertex and
// picks a q-edge for every pattern edge back to already-placed vertices.
// The weight condition couples only edges sharing a pattern vertex, so it
// reduces to "new weight + smallest weight already placed there >= s" and
// prunes as soon as a partial choice is doomed.
class Search {
 public:
  Search(const QGraph& host, const PatternGraph& pat, int s,
         const std::function<bool(const Embedding&)>& visit)
      : host_(host), pat_(pat), s_(s), visit_(visit) {}

  void run() {
    require(s_ >= 1, Error::Kind::argument, "s-copy detection needs s >= 1");
    require(pat_.n() >= 1 || !pat_.edges().empty(), Error::Kind::argument,
            "pattern with no vertices rejected");

    degrees_ = pat_.degrees();
    std::vector<int> active;
    for (int v = 1; v <= pat_.n(); ++v)
      if (degrees_[v] > 0) active.push_back(v);

    // Isolated pattern vertices must still fit into the host vertex set.
    if (static_cast<std::size_t>(pat_.n()) > static_cast<std::size_t>(active.size()) &&
        host_.n() < pat_.n())
      return;
    if (static_cast<int>(active.size()) > host_.n()) return;

    build_order(active);
    build_host_index();

    vmap_.assign(pat_.n() + 1, 0);
    host_used_.assign(host_.n() + 1, false);
    min_weight_.assign(pat_.n() + 1, kNoWeight);
    chosen_.assign(pat_.size(), QEdge{});
    place(0);
  }

 private:
  void build_order(const std::vector<int>& active) {
    const auto adj = pat_.adjacency();
    std::vector<bool> placed(pat_.n() + 1, false);
    std::vector<int> placed_neighbors(pat_.n() + 1, 0);
    order_.clear();
    for (std::size_t step = 0; step < active.size(); ++step) {
      // Prefer vertices attached to what is already placed, then high degree.
      int best = -1;
      for (int v : active) {
        if (placed[v]) continue;
        if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] &&
             (degrees_[v] > degrees_[best] || (degrees_[v] == degrees_[best] && v < best))))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (int w : adj[best]) ++placed_neighbors[w];
    }
    pos_.assign(pat_.n() + 1, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<int>(i);

    back_edges_.assign(order_.size(), {});
    const auto& edges = pat_.edges();
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      auto [x, y] = edges[ei];
      if (pos_[x] > pos_[y]) std::swap(x, y);  // y is placed later
      back_edges_[pos_[y]].push_back({x, ei});
    }
  }

  void build_host_index() {
    host_support_deg_.assign(host_.n() + 1, 0);
    std::pair<int, int> last{0, 0};
    for (const QEdge& e : host_.edges()) {
      if (std::pair{e.u, e.v} != last) {
        last = {e.u, e.v};
        ++host_support_deg_[e.u];
        ++host_support_deg_[e.v];
      }
    }
  }

  void place(std::size_t step) {
    if (stop_) return;
    if (step == order_.size()) {
      emit();
      return;
    }
    const int pv = order_[step];
    for (int h = 1; h <= host_.n() && !stop_; ++h) {
      if (host_used_[h] || host_support_deg_[h] < degrees_[pv]) continue;
      assign_back_edges(step, pv, h, 0);
    }
  }

  void assign_back_edges(std::size_t step, int pv, int h, std::size_t idx) {
    if (stop_) return;
    if (idx == back_edges_[step].size()) {
      vmap_[pv] = h;
      host_used_[h] = true;
      place(step + 1);
      host_used_[h] = false;
      vmap_[pv] = 0;
      return;
    }
    const auto [pj, eidx] = back_edges_[step][idx];
    const int hj = vmap_[pj];
    auto [lo, hi] = host_.support_range(hj, h);
    for (std::size_t k = lo; k < hi && !stop_; ++k) {
      const QEdge& e = host_.edges()[k];
      const int w_j = e.weight_at(hj);
      const int w_h = e.weight_at(h);
      if (min_weight_[pj] != kNoWeight && w_j + min_weight_[pj] < s_) continue;
      if (min_weight_[pv] != kNoWeight && w_h + min_weight_[pv] < s_) continue;
      const int save_j = min_weight_[pj];
      const int save_v = min_weight_[pv];
      min_weight_[pj] = std::min(save_j, w_j);
      min_weight_[pv] = std::min(save_v == kNoWeight ? w_h : save_v, w_h);
      chosen_[eidx] = e;
      assign_back_edges(step, pv, h, idx + 1);
      min_weight_[pj] = save_j;
      min_weight_[pv] = save_v;
    }
  }

  void emit() {
    Embedding emb;
    for (int v = 1; v <= pat_.n(); ++v)
      if (degrees_[v] > 0) emb.vertex_map.emplace_back(v, vmap_[v]);
    const auto& edges = pat_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) emb.edge_map.emplace_back(edges[i], chosen_[i]);
    if (!visit_(emb)) stop_ = true;
  }

  const QGraph& host_;
  const PatternGraph& pat_;
  int s_;
  const std::function<bool(const Embedding&)>& visit_;

  std::vector<int> degrees_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<std::vector<std::pair<int, std::size_t>>> back_edges_;
  std::vector<int> host_support_deg_;

  std::vector<int> vmap_;
  std::vector<bool> host_used_;
  std::vector<int> min_weight_;
  std::vector<QEdge> chosen_;
  bool stop_ = false;
};

}  // namespace

void for_each_s_copy(const QGraph& host, const PatternGraph& f, int s,
                     const std::function<bool(const Embedding&)>& visit) {
  Search(host, f, s, visit).run();
}

std::optional<Embedding> contains_s_copy(const QGraph& host, const PatternGraph& f, int s) {
  std::optional<Embedding> found;
  for_each_s_copy(host, f, s, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::vector<Embedding> find_s_copies(const QGraph& host, const PatternGraph& f, int s,
                                     std::size_t limit) {
  require(limit >= 1, Error::Kind::argument, "enumeration limit must be >= 1");
  std::vector<Embedding> out;
  for_each_s_copy(host, f, s, [&](const Embedding& e) {
    out.push_back(e);
    return out.size() < limit;
  });
  return out;
}

bool embedding_valid(const QGraph& host, const PatternGraph& f, int s, const Embedding& emb,
                     std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };

  std::map<int, int> vm(emb.vertex_map.begin(), emb.vertex_map.end());
  const auto degrees = f.degrees();
  std::set<int> images;
  for (auto [pv, hv] : emb.vertex_map) {
    if (pv < 1 || pv > f.n() || degrees[pv] == 0) return fail("vertex map covers a non-pattern or isolated vertex");
    if (hv < 1 || hv > host.n()) return fail("host vertex out of range");
    if (!images.insert(hv).second) return fail("vertex map not injective");
  }
  for (int v = 1; v <= f.n(); ++v)
    if (degrees[v] > 0 && !vm.count(v)) return fail("vertex map misses a non-isolated pattern vertex");
  if (f.has_isolated_vertex() && host.n() < f.n()) return fail("host too small for isolated vertices");

  if (emb.edge_map.size() != f.size()) return fail("edge map size differs from pattern size");
  std::set<std::pair<int, int>> pattern_edges_seen;
  std::set<std::pair<int, int>> supports_seen;
  for (const auto& [pe, qe] : emb.edge_map) {
    if (!std::binary_search(f.edges().begin(), f.edges().end(), pe)) return fail("unknown pattern edge");
    if (!pattern_edges_seen.insert(pe).second) return fail("pattern edge mapped twice");
    if (!host.contains(qe)) return fail("mapped q-edge not in host");
    const int hu = vm.at(pe.first);
    const int hv = vm.at(pe.second);
    if (std::minmax(hu, hv) != std::minmax(qe.u, qe.v)) return fail("support does not match vertex map");
    if (!supports_seen.insert({qe.u, qe.v}).second) return fail("two pattern edges share a support");
  }

  // Weight sums at every shared pattern vertex.
  for (int v = 1; v <= f.n(); ++v) {
    if (degrees[v] < 2) continue;
    const int hv = vm.at(v);
    std::vector<int> weights;
    for (const auto& [pe, qe] : emb.edge_map)
      if (pe.first == v || pe.second == v) weights.push_back(qe.weight_at(hv));
    std::sort(weights.begin(), weights.end());
    if (weights.size() >= 2 && weights[0] + weights[1] < s) return fail("weight sum below s at a shared vertex");
  }
  return true;
}

}  // namespace qturan
