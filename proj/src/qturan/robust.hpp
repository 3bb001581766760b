#pragma once

// Exact chromatic number, 1-selections and removal sets, the robust
// chromatic number chi1, and the random-multipartite experiment.
//
// A removal set is the image of a 1-selection: a set D of edges covering
// every non-isolated vertex whose components each have at most as many
// edges as vertices. chi1(F) is the minimum chromatic number of F minus a
// removal set. Equivalently, chi1(F) is the least number of classes in a
// vertex partition where every class induces a pseudoforest (each
// component at most one cycle): the monochromatic edges of such a
// partition extend to a selection image, and conversely any selection
// image only shrinks classes of an optimal coloring into pseudoforests.
// The solver works on the partition formulation; the enumeration-based
// route is kept as an independent oracle in qturan::oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "qturan/qcore.hpp"

namespace qturan {

using EdgeList = std::vector<std::pair<int, int>>;

// Exact chromatic number by branch and bound (greedy clique lower bound,
// greedy colouring upper bound, then k-colourability checks). Rejects
// graphs above the vertex cap.
int chromatic_number(const PatternGraph& g, int max_vertices = 16);

// True iff d is the image of some 1-selection of f: d covers every
// non-isolated vertex and every component of (V,d) has at most as many
// edges as vertices.
bool is_selection_image(const PatternGraph& f, const EdgeList& d);

// Explicit 1-selection with image exactly d, built through bipartite
// matching (edge -> selecting endpoint); nullopt when none exists. The
// i-th entry selects for vertex i+1; isolated vertices select nothing and
// carry {0,0}. Independent of the component-counting certificate above.
std::optional<EdgeList> selection_for(const PatternGraph& f, const EdgeList& d);

// All removal sets of f, each exactly once, in lexicographic order of the
// member edge lists. Capped on the number of pattern edges.
std::vector<EdgeList> enumerate_removal_sets(const PatternGraph& f, std::size_t max_edges = 20);

// Copy of f with the edges of d deleted (vertices retained).
PatternGraph remove_edges(const PatternGraph& f, const EdgeList& d);

// chi1(f) = min chromatic number over all 1-removed graphs of f.
int robust_chromatic(const PatternGraph& f, int max_vertices = 16);

// r parts of m vertices each; cross-part pairs joined independently with
// probability p, deterministically from the seed.
PatternGraph random_multipartite(int m, int r, double p, std::uint64_t seed);

struct TrialLog {
  int trial = 0;
  std::uint64_t seed = 0;
  long long edges = 0;
  int chi = 0;
  int chi1 = 0;
};

struct ExperimentReport {
  int m = 0;
  int r = 0;
  double p = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double frequency = 0.0;  // fraction of trials with chi1 == r
  std::vector<TrialLog> log;
};

// Samples `trials` graphs from the random multipartite model and reports
// how often chi1 equals r. Trials derive independent seeds from (seed,
// index), so the report does not depend on the number of worker threads.
ExperimentReport chi1_experiment(int m, int r, double p, int trials, std::uint64_t seed,
                                 int jobs = 1);

}  // namespace qturan
