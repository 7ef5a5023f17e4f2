#include "rainbow/core/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rainbow {

std::vector<Vertex> set_members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const Vertex> vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw CapacityError("vertex " + std::to_string(v) + " out of supported range");
    }
    s |= vertex_bit(v);
  }
  return s;
}

VertexSet make_set(std::initializer_list<Vertex> vertices) {
  return make_set(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t colex_rank(VertexSet edge) {
  std::uint64_t rank = 0;
  int i = 1;
  for (Vertex v : set_members(edge)) {
    rank += binomial(v, i);
    ++i;
  }
  return rank;
}

std::vector<VertexSet> all_r_subsets(int n, int r) {
  std::vector<VertexSet> out;
  if (r < 1 || r > n) return out;
  if (n > kMaxVertices) throw CapacityError("too many vertices");
  out.reserve(binomial(n, r));
  VertexSet s = (r == 64) ? ~VertexSet{0} : (vertex_bit(r) - 1);
  const VertexSet limit = (n == 64) ? 0 : vertex_bit(n);
  while (true) {
    out.push_back(s);
    // Gosper's hack: next larger integer with the same popcount.
    const VertexSet c = s & (~s + 1);
    const VertexSet rr = s + c;
    if (rr == 0) break;
    s = (((rr ^ s) >> 2) / c) | rr;
    if (limit != 0 && s >= limit) break;
  }
  return out;
}

HyperGraph::HyperGraph(int r, int n, std::vector<VertexSet> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
  if (r < 1) throw InvalidArgument("uniformity must be positive");
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  if (n > kMaxVertices) {
    throw CapacityError("at most " + std::to_string(kMaxVertices) + " vertices supported, got " +
                        std::to_string(n));
  }
  const VertexSet all = (n == 64) ? ~VertexSet{0} : vertex_bit(n) - 1;
  for (VertexSet e : edges_) {
    if (set_size(e) != r) throw InvalidArgument("edge does not have exactly r vertices");
    if ((e & ~all) != 0) throw InvalidArgument("edge uses a vertex outside 0..n-1");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }
}

HyperGraph HyperGraph::from_lists(int r, int n, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<VertexSet> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    for (Vertex v : e) {
      if (v < 0 || v >= n) throw InvalidArgument("edge uses a vertex outside 0..n-1");
    }
    const VertexSet m = make_set(e);
    if (set_size(m) != static_cast<int>(e.size())) throw InvalidArgument("repeated vertex in edge");
    masks.push_back(m);
  }
  return HyperGraph(r, n, std::move(masks));
}

HyperGraph HyperGraph::complete(int n, int r) {
  if (n > kMaxVertices) throw CapacityError("too many vertices");
  return HyperGraph(r, n, all_r_subsets(n, r));
}

HyperGraph HyperGraph::edgeless(int n, int r) { return HyperGraph(r, n, {}); }

bool HyperGraph::has_edge(VertexSet e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexSet HyperGraph::vertex_set() const {
  return (n_ == 64) ? ~VertexSet{0} : vertex_bit(n_) - 1;
}

VertexSet HyperGraph::support() const {
  VertexSet s = 0;
  for (VertexSet e : edges_) s |= e;
  return s;
}

HyperGraph HyperGraph::link(Vertex v) const {
  if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
  std::vector<VertexSet> out;
  for (VertexSet e : edges_) {
    if (e & vertex_bit(v)) out.push_back(e & ~vertex_bit(v));
  }
  return HyperGraph(r_ - 1, n_, std::move(out));
}

int HyperGraph::degree(Vertex v) const {
  if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
  int d = 0;
  for (VertexSet e : edges_) d += static_cast<int>((e >> v) & 1U);
  return d;
}

std::vector<int> HyperGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (VertexSet e : edges_) {
    for (VertexSet s = e; s != 0; s &= s - 1) ++deg[static_cast<std::size_t>(std::countr_zero(s))];
  }
  return deg;
}

int HyperGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

HyperGraph HyperGraph::induced(VertexSet keep) const {
  keep &= vertex_set();
  std::vector<Vertex> position(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (Vertex v : set_members(keep)) position[static_cast<std::size_t>(v)] = next++;
  std::vector<VertexSet> out;
  for (VertexSet e : edges_) {
    if ((e & ~keep) != 0) continue;
    VertexSet m = 0;
    for (VertexSet s = e; s != 0; s &= s - 1) {
      m |= vertex_bit(position[static_cast<std::size_t>(std::countr_zero(s))]);
    }
    out.push_back(m);
  }
  return HyperGraph(r_, next, std::move(out));
}

HyperGraph HyperGraph::remove(VertexSet drop) const { return induced(vertex_set() & ~drop); }

HyperGraph HyperGraph::relabel(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw InvalidArgument("permutation size mismatch");
  VertexSet seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || (seen & vertex_bit(p))) throw InvalidArgument("not a permutation");
    seen |= vertex_bit(p);
  }
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (VertexSet e : edges_) {
    VertexSet m = 0;
    for (VertexSet s = e; s != 0; s &= s - 1) {
      m |= vertex_bit(perm[static_cast<std::size_t>(std::countr_zero(s))]);
    }
    out.push_back(m);
  }
  return HyperGraph(r_, n_, std::move(out));
}

HyperGraph HyperGraph::with_order(int n) const {
  if (n < n_) throw InvalidArgument("cannot shrink vertex range");
  return HyperGraph(r_, n, edges_);
}

HyperGraph HyperGraph::without_edge(std::size_t index) const {
  if (index >= edges_.size()) throw InvalidArgument("edge index out of range");
  std::vector<VertexSet> out = edges_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return HyperGraph(r_, n_, std::move(out));
}

HyperGraph disjoint_union(const HyperGraph& a, const HyperGraph& b) {
  if (a.uniformity() != b.uniformity()) throw InvalidArgument("uniformity mismatch");
  const int n = a.order() + b.order();
  if (n > kMaxVertices) throw CapacityError("disjoint union exceeds vertex capacity");
  std::vector<VertexSet> edges(a.edges().begin(), a.edges().end());
  for (VertexSet e : b.edges()) edges.push_back(e << a.order());
  return HyperGraph(a.uniformity(), n, std::move(edges));
}

HyperGraph disjoint_union(const HyperGraph& f, int t) {
  if (t < 1) throw InvalidArgument("tiling needs t >= 1 copies");
  if (static_cast<long>(t) * f.order() > kMaxVertices) {
    throw CapacityError("tiling exceeds vertex capacity");
  }
  HyperGraph out = f;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, f);
  return out;
}

bool is_r_partite(const HyperGraph& h) {
  const int r = h.uniformity();
  const int n = h.order();
  if (h.empty()) return true;

  // Visit vertices so that edges fill up early: BFS through shared edges.
  std::vector<Vertex> order;
  VertexSet placed = 0;
  const VertexSet support = h.support();
  for (Vertex start : set_members(support)) {
    if (placed & vertex_bit(start)) continue;
    std::vector<Vertex> queue{start};
    placed |= vertex_bit(start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      order.push_back(v);
      for (VertexSet e : h.edges()) {
        if (!(e & vertex_bit(v))) continue;
        for (Vertex w : set_members(e & ~placed)) {
          placed |= vertex_bit(w);
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<std::vector<VertexSet>> incident(static_cast<std::size_t>(n));
  for (VertexSet e : h.edges()) {
    for (Vertex v : set_members(e)) incident[static_cast<std::size_t>(v)].push_back(e);
  }

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  // Each edge must see pairwise distinct colors among its colored vertices.
  auto consistent = [&](Vertex v) {
    for (VertexSet e : incident[static_cast<std::size_t>(v)]) {
      unsigned seen = 0;
      for (VertexSet s = e; s != 0; s &= s - 1) {
        const int c = color[static_cast<std::size_t>(std::countr_zero(s))];
        if (c < 0) continue;
        if (seen & (1U << c)) return false;
        seen |= 1U << c;
      }
    }
    return true;
  };

  // Colors are introduced in increasing order (restricted growth) per component.
  std::function<bool(std::size_t, int)> assign = [&](std::size_t k, int used) -> bool {
    if (k == order.size()) return true;
    const Vertex v = order[k];
    const int limit = std::min(r, used + 1);
    for (int c = 0; c < limit; ++c) {
      color[static_cast<std::size_t>(v)] = c;
      if (consistent(v) && assign(k + 1, std::max(used, c + 1))) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (r > 32) throw CapacityError("uniformity too large for partiteness check");
  return assign(0, 0);
}

std::string describe(const HyperGraph& h) {
  std::ostringstream os;
  os << h.uniformity() << "-graph, " << h.order() << " vertices, " << h.size() << " edges";
  return os.str();
}

}  // namespace rainbow
