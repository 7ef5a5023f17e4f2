#pragma once

#include <span>
#include <vector>

#include "rainbow/core/family.hpp"
#include "rainbow/core/hypergraph.hpp"

namespace rainbow::constructions {

// {F - e : e in F} up to isomorphism. Isolated vertices are kept, so every
// member still has v(F) vertices. Throws for an edgeless F.
HyperGraphFamily minus_family(const HyperGraph& f);

// F (+)_phi F': F minus edge `e_index` and F' minus edge `e2_index`, glued by
// identifying the i-th vertex of e (ascending) with phi[i]-th vertex of e'.
// Vertices of F keep their labels; the remaining vertices of F' follow in order.
HyperGraph edge_sum(const HyperGraph& f, std::size_t e_index, const HyperGraph& f2,
                    std::size_t e2_index, std::span<const int> phi);

// All edge-sums over ordered edge pairs and all r! bijections, deduplicated
// up to isomorphism. Members isomorphic to F are kept.
HyperGraphFamily edge_sum_family(const HyperGraph& f, const HyperGraph& f2);

// {F} together with F (+) F.
HyperGraphFamily with_edge_sums(const HyperGraph& f);

// F[k]: vertex v becomes clones v*k .. v*k+k-1; each edge becomes the complete
// r-partite r-graph on its clone classes.
HyperGraph blow_up(const HyperGraph& f, int k);

// H_G^r: pads each edge of the graph G with r-2 fresh vertices, pads pairwise disjoint.
HyperGraph expansion_graph(const HyperGraph& g, int r);

// H^F_{l+1}: for each pair of vertices of F covered by no edge, adds that pair
// plus r-2 fresh vertices as a new edge; pads pairwise disjoint.
HyperGraph expansion_clique(const HyperGraph& f);

// Ext(T): every edge of the tree T joined with one common (r-2)-set of fresh vertices.
// Throws InvalidArgument if T is not a tree on all of its vertices.
HyperGraph ext_tree(const HyperGraph& tree, int r);

bool is_tree(const HyperGraph& g);

}  // namespace rainbow::constructions
