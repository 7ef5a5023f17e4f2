#pragma once

#include "rainbow/antiramsey/coloring.hpp"
#include "rainbow/core/hypergraph.hpp"
#include "rainbow/turan/record.hpp"

namespace rainbow::antiramsey {

// The extremal tF-free graph H on n vertices colored rainbow with
// 1..ex(n,tF) in colex order, every other edge colored ex(n,tF)+1.
// Needs an exact record for the family {tF} at n and t * v(F) <= n.
EdgeColoring build_coloring_fact21(int n, int t, const HyperGraph& f, const turan::TuranRecord& extremal);

// K_n^r with the first n-t vertices colored by `inner` (M colors) and each
// edge meeting the last t vertices given its own fresh color M+1, M+2, ...
// in colex order. Throws VerificationError if `inner` has a rainbow 2F.
EdgeColoring build_coloring_fact31(int n, int t, const HyperGraph& f, const EdgeColoring& inner);

}  // namespace rainbow::antiramsey
