#include "rainbow/constructions/operators.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow::constructions {

HyperGraphFamily minus_family(const HyperGraph& f) {
  if (f.empty()) throw InvalidArgument("minus family of an edgeless hypergraph");
  HyperGraphFamily out(f.uniformity());
  for (std::size_t i = 0; i < f.size(); ++i) out.insert(f.without_edge(i));
  return out;
}

HyperGraph edge_sum(const HyperGraph& f, std::size_t e_index, const HyperGraph& f2,
                    std::size_t e2_index, std::span<const int> phi) {
  const int r = f.uniformity();
  if (f2.uniformity() != r) throw InvalidArgument("edge-sum needs equal uniformity");
  if (e_index >= f.size() || e2_index >= f2.size()) throw InvalidArgument("edge index out of range");
  if (phi.size() != static_cast<std::size_t>(r)) throw InvalidArgument("bijection has the wrong size");
  const int n = f.order() + f2.order() - r;
  if (n > kMaxVertices) throw CapacityError("edge-sum exceeds vertex capacity");

  const auto e = set_members(f.edge(e_index));
  const auto e2 = set_members(f2.edge(e2_index));
  std::vector<Vertex> target(static_cast<std::size_t>(f2.order()), -1);
  std::vector<bool> hit(static_cast<std::size_t>(r), false);
  for (int i = 0; i < r; ++i) {
    const int j = phi[i];
    if (j < 0 || j >= r || hit[j]) throw InvalidArgument("phi is not a bijection");
    hit[j] = true;
    target[e2[j]] = e[i];
  }
  Vertex next = f.order();
  for (Vertex v = 0; v < f2.order(); ++v) {
    if (target[v] < 0) target[v] = next++;
  }

  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != e_index) edges.push_back(f.edge(i));
  }
  for (std::size_t i = 0; i < f2.size(); ++i) {
    if (i == e2_index) continue;
    VertexSet m = 0;
    for (Vertex v : set_members(f2.edge(i))) m |= vertex_bit(target[v]);
    edges.push_back(m);
  }
  return HyperGraph(r, n, std::move(edges));
}

HyperGraphFamily edge_sum_family(const HyperGraph& f, const HyperGraph& f2) {
  if (f.uniformity() != f2.uniformity()) throw InvalidArgument("edge-sum needs equal uniformity");
  if (f.empty() || f2.empty()) throw InvalidArgument("edge-sum of an edgeless hypergraph");
  const int r = f.uniformity();
  HyperGraphFamily out(r);
  std::vector<int> phi(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f2.size(); ++j) {
      std::iota(phi.begin(), phi.end(), 0);
      do {
        out.insert(edge_sum(f, i, f2, j, phi));
      } while (std::next_permutation(phi.begin(), phi.end()));
    }
  }
  return out;
}

HyperGraphFamily with_edge_sums(const HyperGraph& f) {
  return HyperGraphFamily::single(f).united_with(edge_sum_family(f, f));
}

HyperGraph blow_up(const HyperGraph& f, int k) {
  if (k < 1) throw InvalidArgument("blow-up factor must be at least 1");
  const int n = f.order() * k;
  if (n > kMaxVertices) throw CapacityError("blow-up exceeds vertex capacity");
  const int r = f.uniformity();
  std::vector<VertexSet> edges;
  for (VertexSet e : f.edges()) {
    const auto vs = set_members(e);
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    while (true) {
      VertexSet m = 0;
      for (int i = 0; i < r; ++i) m |= vertex_bit(vs[i] * k + pick[i]);
      edges.push_back(m);
      int i = 0;
      while (i < r && ++pick[i] == k) pick[i++] = 0;
      if (i == r) break;
    }
  }
  return HyperGraph(r, n, std::move(edges));
}

HyperGraph expansion_graph(const HyperGraph& g, int r) {
  if (g.uniformity() != 2) throw InvalidArgument("expansion needs a graph");
  if (r < 3) throw InvalidArgument("expansion needs r >= 3");
  const long n = g.order() + static_cast<long>(r - 2) * static_cast<long>(g.size());
  if (n > kMaxVertices) throw CapacityError("expansion exceeds vertex capacity");
  Vertex next = g.order();
  std::vector<VertexSet> edges;
  for (VertexSet e : g.edges()) {
    for (int i = 0; i < r - 2; ++i) e |= vertex_bit(next++);
    edges.push_back(e);
  }
  return HyperGraph(r, static_cast<int>(n), std::move(edges));
}

HyperGraph expansion_clique(const HyperGraph& f) {
  const int r = f.uniformity();
  if (r < 3) throw InvalidArgument("expansion needs r >= 3");
  std::vector<VertexSet> uncovered;
  for (Vertex u = 0; u < f.order(); ++u) {
    for (Vertex v = u + 1; v < f.order(); ++v) {
      const VertexSet pair = vertex_bit(u) | vertex_bit(v);
      const bool covered = std::any_of(f.edges().begin(), f.edges().end(),
                                       [&](VertexSet e) { return (e & pair) == pair; });
      if (!covered) uncovered.push_back(pair);
    }
  }
  const long n = f.order() + static_cast<long>(r - 2) * static_cast<long>(uncovered.size());
  if (n > kMaxVertices) throw CapacityError("expansion exceeds vertex capacity");
  std::vector<VertexSet> edges(f.edges().begin(), f.edges().end());
  Vertex next = f.order();
  for (VertexSet pair : uncovered) {
    for (int i = 0; i < r - 2; ++i) pair |= vertex_bit(next++);
    edges.push_back(pair);
  }
  return HyperGraph(r, static_cast<int>(n), std::move(edges));
}

bool is_tree(const HyperGraph& g) {
  if (g.uniformity() != 2 || g.order() == 0) return false;
  if (g.size() != static_cast<std::size_t>(g.order() - 1)) return false;
  VertexSet reached = vertex_bit(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet e : g.edges()) {
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == g.vertex_set();
}

HyperGraph ext_tree(const HyperGraph& tree, int r) {
  if (r < 3) throw InvalidArgument("extension needs r >= 3");
  if (!is_tree(tree)) throw InvalidArgument("ext_tree input is not a tree");
  const int n = tree.order() + r - 2;
  if (n > kMaxVertices) throw CapacityError("extension exceeds vertex capacity");
  VertexSet pad = 0;
  for (int i = 0; i < r - 2; ++i) pad |= vertex_bit(tree.order() + i);
  std::vector<VertexSet> edges;
  for (VertexSet e : tree.edges()) edges.push_back(e | pad);
  return HyperGraph(r, n, std::move(edges));
}

}  // namespace rainbow::constructions
