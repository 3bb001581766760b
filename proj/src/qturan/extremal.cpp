#include "qturan/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace qturan {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound: return "lower_bound";
    case SearchStatus::timeout: return "timeout";
  }
  return "unknown";
}

ForbiddenHypergraph forbidden_configs(int n, int q, const PatternGraph& f, int s,
                                      std::size_t max_ground) {
  require(!f.edges().empty(), Error::Kind::argument,
          "forbidden-configuration enumeration needs a pattern with at least one edge");
  const QGraph full = full_qgraph(n, q);
  require(full.size() <= max_ground, Error::Kind::limit,
          "instance too large: ground set has " + std::to_string(full.size()) +
              " q-edges (cap " + std::to_string(max_ground) + ")");

  ForbiddenHypergraph hg;
  hg.ground = full.edges();
  std::set<std::vector<int>> seen;
  for_each_s_copy(full, f, s, [&](const Embedding& emb) {
    std::vector<int> members;
    members.reserve(emb.edge_map.size());
    for (const auto& [pe, qe] : emb.edge_map) {
      auto it = std::lower_bound(hg.ground.begin(), hg.ground.end(), qe);
      members.push_back(static_cast<int>(it - hg.ground.begin()));
    }
    std::sort(members.begin(), members.end());
    seen.insert(std::move(members));
    return true;
  });
  hg.hyperedges.assign(seen.begin(), seen.end());
  return hg;
}

namespace {

using Clock = std::chrono::steady_clock;

// Branch-and-bound maximum independent set in the forbidden hypergraph.
//
// States: undecided / included / excluded. Branching picks an active
// hyperedge (no member excluded) with the fewest undecided members, ties
// broken towards the lexicographically smallest, and branches "exclude
// member i, include members 0..i-1". Unit propagation forces the last
// undecided member of an otherwise-included hyperedge to be excluded.
// Bound: each active hyperedge in a greedily packed family that is
// pairwise disjoint on undecided members forces one exclusion.
//
// Node- and incumbent counters can be shared between instances, which lets
// root branches run on separate threads: every worker prunes against the
// best value found anywhere, so the merged value is still exact.
class Solver {
 public:
  Solver(int n, int q, const ForbiddenHypergraph& hg, const ExtremalOptions& opts,
         std::atomic<long long>* shared_best, std::atomic<long long>* shared_nodes,
         std::optional<Clock::time_point> deadline)
      : n_(n),
        q_(q),
        hg_(hg),
        opts_(opts),
        m_(static_cast<int>(hg.ground.size())),
        shared_best_(shared_best),
        shared_nodes_(shared_nodes),
        deadline_(deadline) {
    member_of_.assign(m_, {});
    for (std::size_t h = 0; h < hg_.hyperedges.size(); ++h)
      for (int e : hg_.hyperedges[h]) member_of_[e].push_back(static_cast<int>(h));
    state_.assign(m_, kUndecided);
    he_excluded_.assign(hg_.hyperedges.size(), 0);
    he_included_.assign(hg_.hyperedges.size(), 0);
    he_size_.resize(hg_.hyperedges.size());
    for (std::size_t h = 0; h < hg_.hyperedges.size(); ++h)
      he_size_[h] = static_cast<int>(hg_.hyperedges[h].size());
    active_count_ = static_cast<long long>(hg_.hyperedges.size());
    greedy_incumbent();
  }

  // Orbit representatives of the root hyperedge after root propagation.
  // Empty when propagation alone already settles the instance.
  std::vector<int> root_branches(bool dedupe_by_orbit) {
    std::vector<int> trail;
    std::vector<int> out;
    if (propagate(trail) && active_count_ > 0) {
      const int h = pick_hyperedge();
      std::set<std::pair<int, int>> seen_orbits;
      for (int e : hg_.hyperedges[h]) {
        if (state_[e] != kUndecided) continue;
        const QEdge& qe = hg_.ground[e];
        if (dedupe_by_orbit && !seen_orbits.insert(std::minmax(qe.a, qe.b)).second) continue;
        out.push_back(e);
      }
    }
    undo(trail);
    return out;
  }

  // Full search under "root_exclude is out" (skipped when negative).
  SearchResult solve(int root_exclude = -1) {
    std::vector<int> trail;
    if (propagate(trail)) {
      if (root_exclude >= 0 && state_[root_exclude] == kUndecided) {
        std::vector<int> branch_trail;
        set_state(root_exclude, kExcluded, branch_trail);
        if (propagate(branch_trail)) dfs();
        undo(branch_trail);
      } else {
        dfs();
      }
    }
    undo(trail);

    SearchResult out;
    out.value = best_value_;
    out.nodes = shared_nodes_->load();
    out.status = exhausted_ == Exhausted::none ? SearchStatus::exact
                 : exhausted_ == Exhausted::nodes ? SearchStatus::lower_bound
                                                  : SearchStatus::timeout;
    std::vector<QEdge> witness;
    for (int e = 0; e < m_; ++e)
      if (best_keep_[e]) witness.push_back(hg_.ground[e]);
    out.witness = QGraph(n_, q_, std::move(witness));
    return out;
  }

  bool budget_hit() const { return exhausted_ != Exhausted::none; }

 private:
  static constexpr signed char kUndecided = 0;
  static constexpr signed char kIncluded = 1;
  static constexpr signed char kExcluded = 2;
  enum class Exhausted { none, nodes, time };

  void greedy_incumbent() {
    std::vector<int> included(hg_.hyperedges.size(), 0);
    std::vector<bool> keep(m_, false);
    long long value = 0;
    for (int e = 0; e < m_; ++e) {
      bool ok = true;
      for (int h : member_of_[e])
        if (included[h] + 1 == he_size_[h]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      keep[e] = true;
      ++value;
      for (int h : member_of_[e]) ++included[h];
    }
    best_value_ = value;
    best_keep_ = std::move(keep);
  }

  long long incumbent() const {
    return shared_best_ ? std::max(best_value_, shared_best_->load(std::memory_order_relaxed))
                        : best_value_;
  }

  bool over_budget(long long node_id) {
    if (opts_.budget_nodes >= 0 && node_id > opts_.budget_nodes) {
      exhausted_ = Exhausted::nodes;
      return true;
    }
    if (deadline_ && (node_id & 1023) == 0 && Clock::now() > *deadline_) {
      exhausted_ = Exhausted::time;
      return true;
    }
    return false;
  }

  void set_state(int e, signed char value, std::vector<int>& trail) {
    state_[e] = value;
    trail.push_back(e);
    for (int h : member_of_[e]) {
      if (value == kExcluded) {
        if (he_excluded_[h]++ == 0) --active_count_;
      } else {
        ++he_included_[h];
      }
    }
    if (value == kExcluded) ++excluded_count_;
  }

  void undo(std::vector<int>& trail) {
    while (!trail.empty()) {
      const int e = trail.back();
      trail.pop_back();
      const signed char value = state_[e];
      state_[e] = kUndecided;
      for (int h : member_of_[e]) {
        if (value == kExcluded) {
          if (--he_excluded_[h] == 0) ++active_count_;
        } else {
          --he_included_[h];
        }
      }
      if (value == kExcluded) --excluded_count_;
    }
  }

  // Forces exclusions implied by hyperedges whose other members are all
  // included. Returns false when some hyperedge is fully included.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t h = 0; h < hg_.hyperedges.size(); ++h) {
        if (he_excluded_[h] > 0) continue;
        const int undecided = he_size_[h] - he_included_[h];
        if (undecided == 0) return false;
        if (undecided == 1) {
          for (int e : hg_.hyperedges[h])
            if (state_[e] == kUndecided) {
              set_state(e, kExcluded, trail);
              changed = true;
              break;
            }
        }
      }
    }
    return true;
  }

  long long upper_bound() {
    packing_used_.assign(m_, false);
    long long packed = 0;
    for (std::size_t h = 0; h < hg_.hyperedges.size(); ++h) {
      if (he_excluded_[h] > 0) continue;
      bool free_of_overlap = true;
      for (int e : hg_.hyperedges[h])
        if (state_[e] == kUndecided && packing_used_[e]) {
          free_of_overlap = false;
          break;
        }
      if (!free_of_overlap) continue;
      ++packed;
      for (int e : hg_.hyperedges[h])
        if (state_[e] == kUndecided) packing_used_[e] = true;
    }
    return m_ - excluded_count_ - packed;
  }

  int pick_hyperedge() const {
    int best = -1;
    int best_undecided = 0;
    for (std::size_t h = 0; h < hg_.hyperedges.size(); ++h) {
      if (he_excluded_[h] > 0) continue;
      const int undecided = he_size_[h] - he_included_[h];
      if (best < 0 || undecided < best_undecided) {
        best = static_cast<int>(h);
        best_undecided = undecided;
      }
    }
    return best;
  }

  void record_leaf() {
    const long long value = m_ - excluded_count_;
    if (value > best_value_) {
      best_value_ = value;
      for (int e = 0; e < m_; ++e) best_keep_[e] = state_[e] != kExcluded;
    }
    if (shared_best_) {
      long long seen = shared_best_->load(std::memory_order_relaxed);
      while (seen < value &&
             !shared_best_->compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
      }
    }
  }

  void dfs() {
    const long long node_id = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (over_budget(node_id)) return;
    if (active_count_ == 0) {
      record_leaf();
      return;
    }
    if (upper_bound() <= incumbent()) return;

    const int h = pick_hyperedge();
    std::vector<int> members;
    for (int e : hg_.hyperedges[h])
      if (state_[e] == kUndecided) members.push_back(e);

    // Branch i excludes members[i] under the assumption that members
    // 0..i-1 were kept; the kept-prefix decisions live on their own trail
    // so per-branch undo does not revert them.
    std::vector<int> prefix_trail;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int e = members[i];
      if (state_[e] == kExcluded) {
        // Propagation of the kept prefix already excluded e, which is
        // exactly this branch; later branches would need e kept.
        dfs();
        break;
      }
      std::vector<int> branch_trail;
      set_state(e, kExcluded, branch_trail);
      if (propagate(branch_trail)) dfs();
      undo(branch_trail);
      if (exhausted_ != Exhausted::none) break;
      if (i + 1 < members.size()) {
        set_state(e, kIncluded, prefix_trail);
        if (!propagate(prefix_trail)) break;
      }
    }
    undo(prefix_trail);
  }

  int n_;
  int q_;
  const ForbiddenHypergraph& hg_;
  const ExtremalOptions& opts_;
  int m_;
  std::vector<std::vector<int>> member_of_;
  std::vector<signed char> state_;
  std::vector<int> he_excluded_;
  std::vector<int> he_included_;
  std::vector<int> he_size_;
  std::vector<bool> packing_used_;
  long long excluded_count_ = 0;
  long long active_count_ = 0;

  long long best_value_ = 0;
  std::vector<bool> best_keep_;

  Exhausted exhausted_ = Exhausted::none;
  std::atomic<long long>* shared_best_;
  std::atomic<long long>* shared_nodes_;
  std::optional<Clock::time_point> deadline_;
};

SearchStatus worse(SearchStatus a, SearchStatus b) {
  const auto rank = [](SearchStatus s) {
    return s == SearchStatus::exact ? 0 : s == SearchStatus::lower_bound ? 1 : 2;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

SearchResult extremal_number(int n, const PatternGraph& f, int q, int s,
                             const ExtremalOptions& opts) {
  const auto t0 = Clock::now();
  const auto deadline =
      opts.budget_secs >= 0
          ? std::optional(t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(opts.budget_secs)))
          : std::nullopt;
  ForbiddenHypergraph hg = forbidden_configs(n, q, f, s, opts.max_ground);

  std::atomic<long long> shared_best{-1};
  std::atomic<long long> shared_nodes{0};
  SearchResult out;

  const int jobs = std::max(1, opts.jobs);
  std::vector<int> branches;
  if (jobs > 1)
    branches =
        Solver(n, q, hg, opts, &shared_best, &shared_nodes, deadline).root_branches(opts.root_symmetry);

  if (jobs == 1 || branches.size() < 2) {
    // Sequential path: one solver walks every root branch in order, its
    // incumbent (and sticky budget flag) carrying over between branches.
    Solver solver(n, q, hg, opts, &shared_best, &shared_nodes, deadline);
    const auto reps = opts.root_symmetry ? solver.root_branches(true) : std::vector<int>{};
    if (reps.empty()) {
      out = solver.solve();
    } else {
      for (int rep : reps) {
        out = solver.solve(rep);
        if (solver.budget_hit()) break;
      }
    }
  } else {
    // One worker per root branch, sharing the incumbent for pruning. The
    // merged value is exact regardless of scheduling; the witness comes
    // from the first branch that attains it.
    std::vector<SearchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < branches.size(); i = next.fetch_add(1)) {
        Solver solver(n, q, hg, opts, &shared_best, &shared_nodes, deadline);
        results[i] = solver.solve(branches[i]);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(jobs, branches.size());
    for (std::size_t j = 0; j < workers; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    out = results.front();
    for (std::size_t i = 1; i < results.size(); ++i) {
      out.status = worse(out.status, results[i].status);
      if (results[i].value > out.value) {
        const auto status = out.status;
        out = results[i];
        out.status = status;
      }
    }
    out.nodes = shared_nodes.load();
  }

  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

SearchResult ordinary_turan(int n, const PatternGraph& f, const ExtremalOptions& opts) {
  return extremal_number(n, f, 1, 2, opts);
}

FreeCheck verify_free(const QGraph& h, const PatternGraph& f, int s) {
  FreeCheck out;
  out.violation = contains_s_copy(h, f, s);
  out.free = !out.violation.has_value();
  return out;
}

}  // namespace qturan
