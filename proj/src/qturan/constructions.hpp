#pragma once

// Generators for the lower-bound constructions. Each output comes with an
// exact closed-form size and a freeness claim that the test- and
// acceptance suites certify with the detector.

#include <array>
#include <vector>

#include "qturan/qcore.hpp"

namespace qturan {

// Ordered list of disjoint nonempty vertex blocks covering [n].
class Partition {
 public:
  explicit Partition(std::vector<std::vector<int>> blocks);

  // Blocks of consecutive indices with the given sizes: {1..s1}, {s1+1..}, ...
  static Partition consecutive(const std::vector<int>& sizes);
  // r blocks as balanced as possible, larger blocks first.
  static Partition balanced(int n, int r);

  int n() const { return n_; }
  int blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& block_list() const { return blocks_; }
  int block_of(int vertex) const { return block_of_[vertex]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// Edges with weight sum < q+1, plus edges with weight sum exactly q+1
// carrying the strictly smaller weight on the smaller vertex index.
// Size floor(q^2/2) * C(n,2); contains no (q+1)-copy of any cycle.
QGraph universal_tree(int q, int n);

// All q-edges supported on an edge of g: q^2 * |E(g)| of them.
QGraph blowup(const PatternGraph& g, int q);

// All q-edges with a weight below low_threshold(q); the complement of the
// low layer of the full q-graph.
QGraph low_complement(int q, int n);

// low_complement(q,n) plus the full low layer over the Turan graph
// T(n, chi1(f)-1). Requires a pattern with a component having more edges
// than vertices; forests degrade to plain low_complement.
QGraph chi1_lower(const PatternGraph& f, int q, int n);

enum class TreeFamilyVariant { plain, pruned };  // F_A vs F'_A

// q=2 tree-avoiding families over a partition: all (1,1)-edges plus
// (1,2)-edges directed from lower to higher block; the pruned variant
// drops the (1,1)-edges inside the last block.
QGraph tree_family(const Partition& p, TreeFamilyVariant variant);

// q=2 construction with A = first floor(n/4) vertices: (1,1) inside A,
// {(1,1),(2,1),(1,2)} inside the complement, all four pairs across.
// Contains no 3-copy of K_{2,3,3}. Requires n >= 8.
QGraph tripart_13_4(int n);

// The four triangle-avoiding families. Variant 1 is the universal tree;
// variant 2 blows up the balanced bipartite graph (q even); variant 3
// splits [n] into two halves with low weights inside and one-low-weight
// across (q, n even); variant 4 is the q=4 three-block table (n = 3k).
QGraph triangle_family(int q, int n, int variant);

// Q(3,2) partitioned into q^2 disjoint triples, each a (q+1)-copy of a
// triangle. Requires q >= 2.
std::vector<std::array<QEdge, 3>> triple_partition(int q);

// q=3 pair of dense slices on A = first 3n/4 vertices: (2,3) arcs from A
// to its complement B and (2,1) arcs on all ordered pairs not inside B.
// Contains no 4-copy of a triangle. Requires n divisible by 4.
QGraph q3_pair_example(int n);

}  // namespace qturan
