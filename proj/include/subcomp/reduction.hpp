#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subcomp/graph.hpp"
#include "subcomp/vertex_set.hpp"

namespace subcomp {

/// Parameters of the clique gadget for a source graph that is r-regular on n
/// vertices with clique size k.
struct ReductionParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;  // = n
  std::size_t t = 0;  // = n - k + 1
  std::size_t a = 0;  // = r + 1
  std::size_t b = 0;  // = n + r - 2k + 1
  std::size_t k_prime = 0;  // = n + r - k + 1

  /// Derives all gadget sizes from (n, k, r). Assumes k ≤ r + 1 and r < n - 1.
  static ReductionParams derive(std::size_t n, std::size_t k, std::size_t r);

  std::size_t gadget_order() const { return n + t + s + t * a + s * b; }
};

enum class BlockKind { SourceCopy, Kt, Ks, Ka, Kb };

/// A contiguous id range [begin, end) of the gadget graph.
struct Block {
  BlockKind kind;
  /// For Ka / Kb: the K_t / K_s vertex the block hangs off. Unused otherwise.
  Vertex anchor = 0;
  Vertex begin = 0;
  Vertex end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(Vertex v) const { return begin <= v && v < end; }
  VertexSet members() const;
  /// "G", "K_t", "K_s", "K_a[<anchor>]" or "K_b[<anchor>]".
  std::string label() const;
};

/// The gadget graph G' with its block layout and target bound k'.
///
/// Numbering: source copy at 0..n-1, then K_t, then K_s, then the K_a blocks
/// in K_t order, then the K_b blocks in K_s order.
struct ReductionInstance {
  Graph g_prime;
  std::size_t k_prime = 0;
  ReductionParams params;
  std::vector<Block> blocks;

  const Block& source_block() const { return blocks[0]; }
  const Block& kt_block() const { return blocks[1]; }
  const Block& ks_block() const { return blocks[2]; }
  /// Degree every vertex of `block` has in G', from the construction.
  std::size_t expected_degree(const Block& block) const;
};

/// Builds the gadget instance (G', k') from a clique instance (G, k) on a
/// regular graph.
///
/// Throws PreconditionError if G is not regular, if k ≥ n, or if G is
/// complete. Returns nullopt when k > r + 1: an r-regular graph cannot hold
/// a k-clique, so the answer is no without a gadget.
std::optional<ReductionInstance> build_crg_reduction(const Graph& g, std::size_t k);

/// S = C ∪ K_t ∪ K_s for a k-clique C of the source copy. Throws
/// PreconditionError if C is not a k-clique there.
VertexSet forward_witness(const ReductionInstance& inst, const VertexSet& clique);

/// C = S ∩ V(G) for a solution S of (G', k'). Throws PreconditionError if S
/// is not a solution, and InternalInconsistency if C is not a k-clique.
VertexSet extract_clique(const ReductionInstance& inst, const VertexSet& s);

/// Whether `c` is a clique of `g`.
bool is_clique(const Graph& g, const VertexSet& c);

/// First k-clique in lexicographic order, by plain recursive enumeration.
std::optional<VertexSet> find_clique(const Graph& g, std::size_t k);

/// Every k-clique, in lexicographic order.
std::vector<VertexSet> all_cliques(const Graph& g, std::size_t k);

}  // namespace subcomp
