#include "subcomp/reduction.hpp"

#include <functional>

#include "subcomp/errors.hpp"
#include "subcomp/oracle.hpp"

namespace subcomp {

ReductionParams ReductionParams::derive(std::size_t n, std::size_t k, std::size_t r) {
  ReductionParams p;
  p.n = n;
  p.k = k;
  p.r = r;
  p.s = n;
  p.t = n - k + 1;
  p.a = r + 1;
  p.b = n + r + 1 - 2 * k;
  p.k_prime = n + r + 1 - k;
  return p;
}

VertexSet Block::members() const {
  std::vector<Vertex> ids;
  for (Vertex v = begin; v < end; ++v) ids.push_back(v);
  return VertexSet::from_sorted(std::move(ids));
}

std::string Block::label() const {
  switch (kind) {
    case BlockKind::SourceCopy: return "G";
    case BlockKind::Kt: return "K_t";
    case BlockKind::Ks: return "K_s";
    case BlockKind::Ka: return "K_a[" + std::to_string(anchor) + "]";
    case BlockKind::Kb: return "K_b[" + std::to_string(anchor) + "]";
  }
  return {};
}

std::size_t ReductionInstance::expected_degree(const Block& block) const {
  const auto& p = params;
  switch (block.kind) {
    case BlockKind::SourceCopy: return p.r + p.t;
    case BlockKind::Kt: return p.t - 1 + p.n + p.s + p.a;
    case BlockKind::Ks: return p.s - 1 + p.t + p.b;
    case BlockKind::Ka: return p.a;
    case BlockKind::Kb: return p.b;
  }
  return 0;
}

std::optional<ReductionInstance> build_crg_reduction(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("source graph is empty");
  const std::size_t r = max_degree(g);
  if (!is_regular(g, r)) throw PreconditionError("source graph is not regular");
  if (r == n - 1) throw PreconditionError("source graph is complete (r = n - 1)");
  if (k >= n)
    throw PreconditionError("clique size k = " + std::to_string(k) +
                            " must be smaller than n = " + std::to_string(n));
  if (k > r + 1) return std::nullopt;

  ReductionInstance inst;
  inst.params = ReductionParams::derive(n, k, r);
  inst.k_prime = inst.params.k_prime;
  const auto& p = inst.params;

  Vertex next = 0;
  auto take = [&](BlockKind kind, std::size_t size, Vertex anchor = 0) {
    inst.blocks.push_back({kind, anchor, next, static_cast<Vertex>(next + size)});
    next += static_cast<Vertex>(size);
  };
  take(BlockKind::SourceCopy, n);
  take(BlockKind::Kt, p.t);
  take(BlockKind::Ks, p.s);
  const Block kt = inst.blocks[1];
  const Block ks = inst.blocks[2];
  for (Vertex v = kt.begin; v < kt.end; ++v) take(BlockKind::Ka, p.a, v);
  for (Vertex u = ks.begin; u < ks.end; ++u) take(BlockKind::Kb, p.b, u);

  GraphBuilder b(next);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  const VertexSet source = inst.blocks[0].members();
  b.add_clique(kt.members());
  b.add_biclique(source, kt.members());
  b.add_clique(ks.members());
  b.add_biclique(kt.members(), ks.members());
  for (std::size_t i = 3; i < inst.blocks.size(); ++i) {
    const Block& block = inst.blocks[i];
    b.add_clique(block.members());
    b.add_biclique(block.members(), VertexSet{block.anchor});
  }
  inst.g_prime = std::move(b).build();
  return inst;
}

bool is_clique(const Graph& g, const VertexSet& c) {
  require_subset(g, c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

VertexSet forward_witness(const ReductionInstance& inst, const VertexSet& clique) {
  const Block& source = inst.source_block();
  if (clique.size() != inst.params.k || (!clique.empty() && clique.back() >= source.end) ||
      !is_clique(inst.g_prime, clique))
    throw PreconditionError("{" + clique.to_string() + "} is not a " +
                            std::to_string(inst.params.k) + "-clique of the source graph");
  return set_union(clique, set_union(inst.kt_block().members(), inst.ks_block().members()));
}

VertexSet extract_clique(const ReductionInstance& inst, const VertexSet& s) {
  if (!check(inst.g_prime, s, TargetPredicate::max_deg_at_most(inst.k_prime)))
    throw PreconditionError("set is not a solution of the gadget instance");
  const Block& source = inst.source_block();
  std::vector<Vertex> ids;
  for (Vertex v : s)
    if (source.contains(v)) ids.push_back(v);
  VertexSet c = VertexSet::from_sorted(std::move(ids));
  if (c.size() != inst.params.k)
    throw InternalInconsistency("solution meets the source graph in " +
                                std::to_string(c.size()) + " vertices, expected " +
                                std::to_string(inst.params.k));
  if (!is_clique(inst.g_prime, c))
    throw InternalInconsistency("{" + c.to_string() + "} is not a clique");
  return c;
}

namespace {

// Extends `current` with candidates above `from`; stops when `emit` returns false.
bool extend_cliques(const Graph& g, std::size_t k, std::vector<Vertex>& current, Vertex from,
                    const std::function<bool(const VertexSet&)>& emit) {
  if (current.size() == k) return emit(VertexSet::from_sorted(current));
  for (Vertex v = from; v < g.order(); ++v) {
    bool joins = true;
    for (Vertex u : current) joins = joins && g.adjacent(u, v);
    if (!joins) continue;
    current.push_back(v);
    const bool keep_going = extend_cliques(g, k, current, v + 1, emit);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, std::size_t k) {
  std::optional<VertexSet> found;
  std::vector<Vertex> current;
  extend_cliques(g, k, current, 0, [&](const VertexSet& c) {
    found = c;
    return false;
  });
  return found;
}

std::vector<VertexSet> all_cliques(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  extend_cliques(g, k, current, 0, [&](const VertexSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace subcomp
