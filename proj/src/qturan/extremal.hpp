#pragma once

// Exact computation of ex(n,F,q,s): the q-graphs avoiding every s-copy of F
// are exactly the independent sets of the hypergraph whose hyperedges are
// the s-copies inside the full q-graph, so the maximum is found by
// branch-and-bound over that hypergraph.

#include <optional>
#include <string>
#include <vector>

#include "qturan/detect.hpp"
#include "qturan/qcore.hpp"

namespace qturan {

struct ForbiddenHypergraph {
  std::vector<QEdge> ground;                 // all of Q(n,2), canonical order
  std::vector<std::vector<int>> hyperedges;  // sorted index sets, list sorted lexicographically
};

enum class SearchStatus { exact, lower_bound, timeout };

std::string to_string(SearchStatus s);

struct SearchResult {
  long long value = 0;
  QGraph witness;
  SearchStatus status = SearchStatus::exact;
  long long nodes = 0;
  double seconds = 0.0;
};

struct ExtremalOptions {
  long long budget_nodes = -1;  // < 0: unlimited
  double budget_secs = -1.0;    // < 0: unlimited
  std::size_t max_ground = 4096;
  bool root_symmetry = true;  // branch over orbit representatives at the root
  int jobs = 1;  // root branches in parallel; the value stays exact, the
                 // witness may differ between runs when jobs > 1
};

// Every s-copy of F inside the full q-graph on [n], deduplicated as edge
// sets. Guarded by max_ground on q^2 * C(n,2).
ForbiddenHypergraph forbidden_configs(int n, int q, const PatternGraph& f, int s,
                                      std::size_t max_ground = 4096);

// Maximum size of an s-copy-free q-graph on [n], with witness. Status is
// exact when the search finished within budget, otherwise the best lower
// bound found so far (lower_bound for node budgets, timeout for time).
SearchResult extremal_number(int n, const PatternGraph& f, int q, int s,
                             const ExtremalOptions& opts = {});

// Ordinary Turan number ex(n,F), computed as the q=1, s=2 special case.
SearchResult ordinary_turan(int n, const PatternGraph& f, const ExtremalOptions& opts = {});

struct FreeCheck {
  bool free = true;
  std::optional<Embedding> violation;  // present when free == false
};

// True iff h contains no s-copy of f; otherwise carries the violation.
FreeCheck verify_free(const QGraph& h, const PatternGraph& f, int s);

}  // namespace qturan
