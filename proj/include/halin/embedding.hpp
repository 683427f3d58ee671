/*
 * Direct embedding enumeration: build H_{m_1..m_k} as a concrete cubic
 * graph, walk every T-rotation system (one rotation bit per vertex, one
 * twist bit per co-tree edge), count faces by the face-tracing algorithm,
 * and histogram Euler genus = 2 - V + E - F.
 *
 * The graph: a spine path s_0..s_{ell+1} with a pendant leaf at each of
 * s_1..s_ell, ell = sum(m_i) + k - 2.  Pendant directions follow runs of
 * lengths (m_1, m_2+1, ..., m_{k-1}+1, m_k) alternating up/down starting
 * "up" (k = 1 is a single run of m-1).  The outer cycle visits s_0, the up
 * leaves left to right, s_{ell+1}, then the down leaves right to left.  The
 * reference rotation realizes that plane drawing, so all-zero bits give
 * genus 0.  Edges are tracked by id throughout, which keeps the ell = 0
 * case (two vertices joined by three parallel edges) exact.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "halin/params.hpp"
#include "halin/polynomial.hpp"

namespace halin {

enum class EdgeRole { kSpine, kPendant, kCycle };
enum class VertexRole { kSpine, kLeaf };

enum class TreeStrategy {
  kBfsFromFront,  // breadth-first from s_0 (default)
  kDfsFromBack,   // depth-first from s_{ell+1} (tree-independence check)
};

struct EmbeddedGraph {
  int ell = 0;
  int num_vertices = 0;  // 2*ell + 2
  struct Edge {
    int u, v;
    EdgeRole role;
  };
  std::vector<Edge> edges;                     // |E| = 3*ell + 3
  std::vector<VertexRole> vertex_roles;
  std::vector<std::array<int, 3>> rotation;    // reference rotation, edge ids
  std::vector<std::uint8_t> in_tree;           // spanning-tree membership by edge id
  std::vector<int> cotree;                     // co-tree edge ids, ascending

  int num_edges() const { return static_cast<int>(edges.size()); }
  int betti() const { return static_cast<int>(cotree.size()); }
};

// One T-rotation system: per-vertex rotation bit (0 = reference order,
// 1 = reversed) and per-edge twist bit, zero on spanning-tree edges.
struct RotationSystem {
  std::vector<std::uint8_t> flip;
  std::vector<std::uint8_t> twist;
};

// Requires a strict tuple.  Throws std::invalid_argument otherwise.
EmbeddedGraph build_halin(const ParamTuple& params,
                          TreeStrategy tree = TreeStrategy::kBfsFromFront);

// Number of faces of the embedding (rs must have one flip bit per vertex
// and one twist bit per edge; twists on tree edges are honored as given, so
// callers keep them zero for T-rotation systems).  Traces the permutation
// on 4|E| sided darts; faces = orbits / 2.
int trace_faces(const EmbeddedGraph& g, const RotationSystem& rs);

// Euler genus 2 - V + E - F of the embedding; throws std::logic_error if
// the value falls outside [0, betti] (internal consistency failure).
int euler_genus_of(const EmbeddedGraph& g, const RotationSystem& rs);

struct EmbedOptions {
  int budget_bits = 24;  // refuse jobs with |V| + beta above this
  int threads = 1;
  TreeStrategy tree = TreeStrategy::kBfsFromFront;
};

// Histogram of euler_genus_of over all 2^{|V|+beta} T-rotation systems.
// Exact, deterministic, and identical for any worker count.  Throws
// BudgetError when |V|+beta exceeds the budget.
GenusPoly embedding_distribution(const ParamTuple& params,
                                 const EmbedOptions& options = {});

// Debug dump: {"vertices":[{"id":..,"role":..}],"edges":[{"u":..,"v":..,"role":..}]}.
std::string graph_json(const EmbeddedGraph& g);

}  // namespace halin
