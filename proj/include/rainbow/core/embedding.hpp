#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rainbow/core/hypergraph.hpp"

namespace rainbow {

// Injective map from the pattern's vertices to the host's vertices;
// map[v] is the image of pattern vertex v.
struct Embedding {
  std::vector<Vertex> map;

  VertexSet image() const;
  VertexSet image_of(VertexSet pattern_set) const;
  bool operator==(const Embedding&) const = default;
};

// Lookup structures over a host, reusable across many searches.
class HostIndex {
 public:
  explicit HostIndex(const HyperGraph& host);

  const HyperGraph& host() const { return *host_; }
  int degree(Vertex v) const { return degree_[v]; }
  // Vertices w such that rest + {w} is an edge. `rest` has r-1 vertices.
  VertexSet completions(VertexSet rest) const;

 private:
  const HyperGraph* host_;
  std::vector<int> degree_;
  std::unordered_map<VertexSet, VertexSet> completions_;
};

// Returning false from the visitor stops the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

// Backtracking over the pattern's non-isolated vertices in a connectivity-first,
// descending-degree order. Candidates are cut down by host degree and by the
// completion sets of every pattern edge closed at the current step. Isolated
// pattern vertices only need enough spare host vertices; they take the lowest
// free ones. Every embedding of the non-isolated part is visited once.
void for_each_embedding(const HyperGraph& pattern, const HostIndex& host, VertexSet forbidden,
                        const EmbeddingVisitor& visit);

std::optional<Embedding> find_embedding(const HyperGraph& pattern, const HostIndex& host,
                                        VertexSet forbidden = 0);
std::optional<Embedding> find_embedding(const HyperGraph& pattern, const HyperGraph& host,
                                        VertexSet forbidden = 0);

// Checks that `e` is injective, avoids `forbidden`, and maps edges to edges.
bool is_valid_embedding(const HyperGraph& pattern, const HyperGraph& host, const Embedding& e,
                        VertexSet forbidden = 0);

class HyperGraphFamily;

// True iff some member of the family is a subgraph of h.
bool contains_member(const HyperGraph& h, const HyperGraphFamily& family);

// Size of a largest set of pairwise vertex-disjoint copies of `pattern` in `host`.
int max_disjoint_copies(const HyperGraph& pattern, const HyperGraph& host);

}  // namespace rainbow
