#pragma once

#include <string>
#include <vector>

#include "rainbow/core/hypergraph.hpp"

namespace rainbow {

// Byte string that is equal for two hypergraphs iff they are isomorphic.
using CanonicalLabel = std::string;

struct Canonization {
  CanonicalLabel label;
  // Vertex v of the input is vertex labeling[v] of the canonical graph.
  std::vector<Vertex> labeling;
  // Generators of (a subgroup of) the automorphism group found on the way.
  std::vector<std::vector<Vertex>> automorphisms;
};

// Partition refinement on edge signatures followed by individualization
// backtracking, pruned by automorphisms discovered at the leaves. Supports
// every hypergraph representable here (n <= kMaxVertices); cost grows with
// the size of the residual search tree, which stays small for the zoo and
// for highly symmetric graphs thanks to the pruning.
Canonization canonize(const HyperGraph& h);

CanonicalLabel canonical_form(const HyperGraph& h);

// The canonical representative: canonize(h).labeling applied to h.
HyperGraph canonical_relabel(const HyperGraph& h);

// Throws InvalidArgument on uniformity mismatch.
bool is_isomorphic(const HyperGraph& a, const HyperGraph& b);

}  // namespace rainbow
