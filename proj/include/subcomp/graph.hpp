#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subcomp/vertex_set.hpp"

namespace subcomp {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: a packed bit matrix for O(1) edge tests and
/// sorted neighbor lists for iteration. Graphs are immutable once built;
/// every operation that "modifies" a graph returns a new one.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Pairs are normalized to (min, max)
  /// and duplicates collapse. Throws GraphError naming the offending pair on
  /// an out-of-range endpoint or a self-loop.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  void finalize();

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Mutable bit-matrix scratchpad used to assemble graphs without going
/// through an edge list.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);
  /// Adds every edge between distinct members of `block`.
  void add_clique(const VertexSet& block);
  /// Adds every edge between `a` and `b` (members assumed disjoint).
  void add_biclique(const VertexSet& a, const VertexSet& b);

  Graph build() &&;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

enum class DegreeRelation { Less, Greater, Equal, NotEqual };

// Graph primitives. All are pure; vertex arguments out of range throw
// GraphError.

/// G ⊕ S: complements the edges of the subgraph induced by `s`.
Graph subgraph_complement(const Graph& g, const VertexSet& s);

/// Degree of `v` in G ⊕ S, computed without building G ⊕ S.
std::size_t degree_after_complement(const Graph& g, const VertexSet& s, Vertex v);

/// Degrees of all vertices in G ⊕ S in one O(n + |S|^2) pass.
std::vector<std::size_t> degrees_after_complement(const Graph& g, const VertexSet& s);

/// Δ(G ⊕ S); 0 on the empty graph.
std::size_t max_degree_after_complement(const Graph& g, const VertexSet& s);

/// V_{*k}(G): vertices whose degree stands in `rel` to k.
VertexSet vertices_by_degree(const Graph& g, DegreeRelation rel, std::size_t k);

/// Vertices within distance r of v, v included.
VertexSet ball(const Graph& g, Vertex v, std::size_t r);

/// Connected components of G[S], sorted by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

Graph complement_graph(const Graph& g);

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N(S) = (∪ N(v)) ∖ S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// N[S] = S ∪ N(S).
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);
bool is_regular(const Graph& g, std::size_t k);

/// Number of edges with both endpoints in S.
std::size_t edges_within(const Graph& g, const VertexSet& s);

/// Throws GraphError if any member of `s` is >= g.order().
void require_subset(const Graph& g, const VertexSet& s);

// Named families, used by tests, examples and the CLI.
namespace families {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
/// K_{1,leaves} with center 0.
Graph star(std::size_t leaves);
/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Two triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5.
Graph triangular_prism();
}  // namespace families

}  // namespace subcomp
