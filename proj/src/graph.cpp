#include "subcomp/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = std::move(b).build();
}

void Graph::finalize() {
  adj_.assign(n_, {});
  m_ = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    const std::uint64_t* row = &rows_[u * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const int bit = std::countr_zero(bits);
        adj_[u].push_back(static_cast<Vertex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
    m_ += adj_[u].size();
  }
  m_ /= 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// --------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), words_(g.words_), rows_(g.rows_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside [0, " +
                     std::to_string(n_) + ")");
  if (u == v) throw GraphError("edge " + pair_text(u, v) + " is a self-loop");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

void GraphBuilder::add_clique(const VertexSet& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j) add_edge(block[i], block[j]);
}

void GraphBuilder::add_biclique(const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a)
    for (Vertex v : b) add_edge(u, v);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.rows_ = std::move(rows_);
  g.finalize();
  return g;
}

// ----------------------------------------------------------- primitives

void require_subset(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.order())
    throw GraphError("vertex set contains " + std::to_string(s.back()) +
                     ", outside graph of order " + std::to_string(g.order()));
}

Graph subgraph_complement(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  GraphBuilder b(g);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) b.toggle_edge(s[i], s[j]);
  return std::move(b).build();
}

std::size_t degree_after_complement(const Graph& g, const VertexSet& s, Vertex v) {
  require_vertex(g, v);
  require_subset(g, s);
  const std::size_t d = g.degree(v);
  if (!s.contains(v)) return d;
  std::size_t inside = 0;
  for (Vertex u : s)
    if (u != v && g.adjacent(u, v)) ++inside;
  return d + (s.size() - 1) - 2 * inside;
}

std::vector<std::size_t> degrees_after_complement(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  std::vector<std::size_t> deg(g.order());
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t inside = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i && g.adjacent(s[i], s[j])) ++inside;
    deg[s[i]] = deg[s[i]] + (s.size() - 1) - 2 * inside;
  }
  return deg;
}

std::size_t max_degree_after_complement(const Graph& g, const VertexSet& s) {
  const auto deg = degrees_after_complement(g, s);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

VertexSet vertices_by_degree(const Graph& g, DegreeRelation rel, std::size_t k) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    bool keep = false;
    switch (rel) {
      case DegreeRelation::Less: keep = d < k; break;
      case DegreeRelation::Greater: keep = d > k; break;
      case DegreeRelation::Equal: keep = d == k; break;
      case DegreeRelation::NotEqual: keep = d != k; break;
    }
    if (keep) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

VertexSet ball(const Graph& g, Vertex v, std::size_t r) {
  require_vertex(g, v);
  std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  std::vector<Vertex> out;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (dist[u] == r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != static_cast<std::size_t>(-1)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  auto in_s = s.mask(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  for (Vertex root : s) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!in_s[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

Graph complement_graph(const Graph& g) {
  return subgraph_complement(g, VertexSet::range(g.order()));
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  require_vertex(g, v);
  auto nb = g.neighbors(v);
  return VertexSet::from_sorted({nb.begin(), nb.end()});
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  return open_neighborhood(g, v).with(v);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  auto in_s = s.mask(g.order());
  std::vector<char> hit(g.order(), 0);
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (!in_s[w]) hit[w] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return set_union(s, open_neighborhood(g, s));
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) ++count;
  return count;
}

// ------------------------------------------------------------- families

namespace families {

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(Vertex(i), Vertex(i + 1));
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(Vertex(i), Vertex((i + 1) % n));
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  b.add_clique(VertexSet::range(n));
  return std::move(b).build();
}

Graph empty(std::size_t n) { return GraphBuilder(n).build(); }

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) b.add_edge(0, Vertex(i));
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return std::move(out).build();
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace families

}  // namespace subcomp
