#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/core/family.hpp"
#include "rainbow/core/hypergraph.hpp"

namespace rainbow {

// Set of edges of K_n^r, bit i = the i-th r-set in colex order.
using EdgeBits = std::uint64_t;

inline constexpr int kMaxHostEdges = 64;

// Every copy of every family member inside K_n^r, as a set of edge indices.
// Copies are indexed by their highest (colex-last) edge so that a search
// assigning edges in colex order can test each copy exactly when it closes.
class CopyTable {
 public:
  // Throws CapacityError when C(n, r) > kMaxHostEdges.
  CopyTable(int n, const HyperGraphFamily& family);

  int order() const { return n_; }
  int uniformity() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet edge(int index) const { return edges_[index]; }
  std::span<const VertexSet> edges() const { return edges_; }
  int index_of(VertexSet edge) const;

  std::span<const EdgeBits> copies() const { return copies_; }
  // Copies whose highest edge is `index`, with that edge cleared.
  std::span<const EdgeBits> closing_at(int index) const { return closing_[index]; }
  // Full copies containing edge `index`.
  std::span<const EdgeBits> containing(int index) const { return containing_[index]; }

  EdgeBits to_bits(const HyperGraph& h) const;
  HyperGraph to_graph(EdgeBits bits) const;

  // Some copy lies entirely inside `bits`.
  bool contains_copy(EdgeBits bits) const;

 private:
  int n_;
  int r_;
  std::vector<VertexSet> edges_;
  std::vector<EdgeBits> copies_;
  std::vector<std::vector<EdgeBits>> closing_;
  std::vector<std::vector<EdgeBits>> containing_;
};

constexpr EdgeBits edge_bit(int i) { return EdgeBits{1} << i; }

}  // namespace rainbow
