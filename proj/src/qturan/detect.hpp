#pragma once

// Decides whether a q-graph contains an s-copy of a pattern graph and
// extracts witnesses. An s-copy of F is a set of |E(F)| q-edges whose
// supports form a copy of F and whose weights sum to at least s at every
// vertex shared by two pattern edges.

#include <functional>
#include <optional>
#include <vector>

#include "qturan/qcore.hpp"

namespace qturan {

struct Embedding {
  // pattern vertex -> host vertex, for the non-isolated pattern vertices,
  // sorted by pattern vertex. Injective.
  std::vector<std::pair<int, int>> vertex_map;
  // pattern edge -> host q-edge, aligned with PatternGraph::edges().
  std::vector<std::pair<std::pair<int, int>, QEdge>> edge_map;
};

// First embedding in the deterministic search order, if any. A pattern
// with isolated vertices additionally needs host.n() >= f.n() to count.
// Rejects patterns with no vertices and s < 1.
std::optional<Embedding> contains_s_copy(const QGraph& host, const PatternGraph& f, int s);

// Up to `limit` embeddings, distinct as (vertex map, edge choice) pairs,
// in deterministic order: host vertices ascending, weight pairs ascending.
std::vector<Embedding> find_s_copies(const QGraph& host, const PatternGraph& f, int s,
                                     std::size_t limit);

// Streaming enumeration; the visitor returns false to stop early.
void for_each_s_copy(const QGraph& host, const PatternGraph& f, int s,
                     const std::function<bool(const Embedding&)>& visit);

// Re-checks every invariant of an embedding against host, pattern and s.
// Used by tests and by certificate validation.
bool embedding_valid(const QGraph& host, const PatternGraph& f, int s, const Embedding& emb,
                     std::string* why = nullptr);

}  // namespace qturan
