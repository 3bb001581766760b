#pragma once

// Reference implementations that stay independent of the production search
// paths. They are deliberately naive: plain enumeration, no pruning beyond
// feasibility. The test- and acceptance suites cross-check the fast code
// against these on small instances.

#include <utility>

#include "qturan/qcore.hpp"
#include "qturan/robust.hpp"
#include "qturan/wstar.hpp"

namespace qturan::oracle {

// All injective maps V(F) -> [n] crossed with all q-edge choices from h.
bool contains_s_copy_bruteforce(const QGraph& h, const PatternGraph& f, int s);

// Number of (vertex map, edge choice) pairs that form an s-copy.
long long count_embeddings_bruteforce(const QGraph& h, const PatternGraph& f, int s);

// Minimum chromatic number over all 1-selection functions (every
// non-isolated vertex picks an incident edge; all choice combinations).
int robust_chromatic_selection_functions(const PatternGraph& f);

// Minimum chromatic number over all enumerated removal sets.
int robust_chromatic_removal_sets(const PatternGraph& f);

// Full scan over all 3^C(k,2) weight assignments.
std::pair<long long, WeightFunction> max_star_weight_exhaustive(int k);

// Maximum avoiding q-graph size by scanning all subsets of the ground set
// (capped at 20 ground q-edges).
long long extremal_bruteforce(int n, const PatternGraph& f, int q, int s);

}  // namespace qturan::oracle
