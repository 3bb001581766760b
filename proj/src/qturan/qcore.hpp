#pragma once

// Data model for weighted edges (q-edges), q-graphs, pattern graphs and
// slices, together with the text / JSON serialization used everywhere else.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qturan/error.hpp"

namespace qturan {

// A q-edge in sparse form: weight a at vertex u, weight b at vertex v,
// with 1 <= u < v and 1 <= a,b <= q of the enclosing graph. Conceptually
// this is a length-n vector with exactly two non-zero entries.
struct QEdge {
  int u = 0;
  int v = 0;
  int a = 0;
  int b = 0;

  friend auto operator<=>(const QEdge&, const QEdge&) = default;

  // Entry of the dense vector at `vertex` (0 off the support).
  int weight_at(int vertex) const { return vertex == u ? a : vertex == v ? b : 0; }
};

// An immutable set of q-edges over vertex set [n]. Edges are kept sorted
// lexicographically by (u,v,a,b); equality is set equality.
class QGraph {
 public:
  QGraph() = default;
  QGraph(int n, int q, std::vector<QEdge> edges);

  int n() const { return n_; }
  int q() const { return q_; }
  const std::vector<QEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const QEdge& e) const;

  // Edges supported on {u,v} as a contiguous range [first, last) into edges().
  std::pair<std::size_t, std::size_t> support_range(int u, int v) const;

  friend bool operator==(const QGraph&, const QGraph&) = default;

 private:
  int n_ = 0;
  int q_ = 1;
  std::vector<QEdge> edges_;
};

// An ordinary simple graph on vertices 1..n; isolated vertices allowed.
class PatternGraph {
 public:
  PatternGraph() = default;
  PatternGraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  bool has_isolated_vertex() const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted
};

// An ordered pair of weights selecting a slice of a q-graph.
struct SlicePair {
  int a = 1;
  int b = 1;
};

// Weight conjugation: alpha -> q+1-alpha.
inline int conjugate_weight(int alpha, int q) { return q + 1 - alpha; }

// Smallest weight that counts as "high", i.e. ceil((q+1)/2).
inline int low_threshold(int q) { return (q + 2) / 2; }

// Result of slicing: arcs (i,j) on [n]. For a slice with a == b the graph
// is undirected and each edge appears once as (min,max).
struct SliceGraph {
  int n = 0;
  bool directed = true;
  std::vector<std::pair<int, int>> arcs;  // sorted
};

// All q-edges on [n]: q^2 * C(n,2) of them. Rejects n < 2 or q < 1.
QGraph full_qgraph(int n, int q);

// Indices where the dense entries of x and y sum to at least s.
std::vector<int> s_sum_intersection(const QEdge& x, const QEdge& y, int s);

// Edges of h whose both weights are >= low_threshold(q).
QGraph low_layer(const QGraph& h);

// Simple graph of the distinct supports of h.
PatternGraph support_graph(const QGraph& h);

// Arc (i -> j) present iff the q-edge with weight p.a at i and p.b at j is
// in h; undirected when p.a == p.b.
SliceGraph slice(const QGraph& h, SlicePair p);

// Supports carrying both weight patterns (in a consistent orientation),
// as a simple undirected graph.
PatternGraph double_slice(const QGraph& h, SlicePair first, SlicePair second);

// ---- Serialization -------------------------------------------------------
//
// q-graph file: header "qgraph n=<n> q=<q>", then one edge per line
// "u v a b" with u < v. Pattern file: header "graph n=<n>", then "u v"
// lines. Canonical write order is lexicographic; blank lines and lines
// starting with '#' are ignored. Parse errors carry a 1-based line number.

QGraph parse_qgraph(const std::string& text);
QGraph read_qgraph(const std::string& path);
std::string format_qgraph(const QGraph& g);
void write_qgraph(const QGraph& g, const std::string& path);

PatternGraph parse_pattern(const std::string& text);
PatternGraph read_pattern(const std::string& path);
std::string format_pattern(const PatternGraph& g);
void write_pattern(const PatternGraph& g, const std::string& path);

// Built-in pattern names: c<k> (cycle), p<k> (path on k vertices),
// star<t> (K_{1,t}), k<r>,<s>[,<t>] (complete multipartite).
PatternGraph pattern_from_name(const std::string& name);

// Number of unordered pairs, as a convenience for counts.
long long pairs(long long n);

}  // namespace qturan
