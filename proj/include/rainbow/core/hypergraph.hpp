#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rainbow/core/errors.hpp"

namespace rainbow {

using Vertex = int;

// A set of vertices of a host on at most 64 vertices. Edges are stored in this
// form: for r-sets, ascending numeric order of the mask is exactly colex order.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << v; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

std::vector<Vertex> set_members(VertexSet s);

VertexSet make_set(std::span<const Vertex> vertices);
VertexSet make_set(std::initializer_list<Vertex> vertices);

// Binomial coefficient for small arguments; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

// Position of an r-set in the colex order of all r-subsets of the naturals.
std::uint64_t colex_rank(VertexSet edge);

// All r-subsets of {0..n-1} in colex order.
std::vector<VertexSet> all_r_subsets(int n, int r);

// An r-uniform hypergraph on vertices 0..n-1. Immutable once built.
class HyperGraph {
 public:
  HyperGraph() = default;

  // Edges may be given in any order; they are sorted into colex order.
  // Throws InvalidArgument on a malformed or duplicate edge and
  // CapacityError when n exceeds kMaxVertices.
  HyperGraph(int r, int n, std::vector<VertexSet> edges);

  static HyperGraph from_lists(int r, int n,
                               const std::vector<std::vector<Vertex>>& edges);
  static HyperGraph complete(int n, int r);
  static HyperGraph edgeless(int n, int r);

  int uniformity() const { return r_; }
  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::span<const VertexSet> edges() const { return edges_; }
  VertexSet edge(std::size_t i) const { return edges_[i]; }
  bool has_edge(VertexSet e) const;

  VertexSet vertex_set() const;
  // Vertices lying in at least one edge.
  VertexSet support() const;

  // (r-1)-uniform link of v.
  HyperGraph link(Vertex v) const;
  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  int max_degree() const;

  // Keeps exactly the edges inside `keep`, relabeling kept vertices in order.
  HyperGraph induced(VertexSet keep) const;
  // induced() on the complement of `drop`.
  HyperGraph remove(VertexSet drop) const;

  // Vertex v goes to perm[v]; perm must be a permutation of 0..n-1.
  HyperGraph relabel(std::span<const Vertex> perm) const;

  // Same edges on a larger vertex range (new vertices isolated).
  HyperGraph with_order(int n) const;

  HyperGraph without_edge(std::size_t index) const;

  bool operator==(const HyperGraph&) const = default;

 private:
  int r_ = 2;
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// tF: t vertex-disjoint copies of f. Throws InvalidArgument for t < 1.
HyperGraph disjoint_union(const HyperGraph& f, int t);

// Disjoint union of two hypergraphs of the same uniformity.
HyperGraph disjoint_union(const HyperGraph& a, const HyperGraph& b);

bool is_r_partite(const HyperGraph& h);

std::string describe(const HyperGraph& h);

}  // namespace rainbow
