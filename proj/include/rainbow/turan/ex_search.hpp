#pragma once

#include <cstdint>

#include "rainbow/core/family.hpp"
#include "rainbow/turan/record.hpp"

namespace rainbow::turan {

struct SearchOptions {
  // Maximum number of search nodes; 0 means unlimited. When exhausted the
  // record is returned with status LowerBoundOnly.
  std::uint64_t budget = 0;
  // Skip subtrees whose decided prefix (all edges inside the first k
  // vertices) is isomorphic to one already visited.
  bool canonical_augmentation = false;
  // OpenMP thread count for the parallel search; 0 uses the runtime default.
  int threads = 0;
};

// Branch and bound over the edges of K_n^r in colex order, deciding each edge
// include-first. An edge that would complete a copy of a member is blocked;
// a node is cut when its edge count plus the unblocked remaining edges cannot
// beat the best so far. The first edge is forced in when allowed, since any
// nonempty extremal graph can be relabeled to contain it.
//
// The witness is the first extremal graph in include-first order, rewritten
// in canonical labeling, so it does not depend on the thread schedule.
//
// Requires n >= r, C(n, r) <= 64 and every member to have an edge.
TuranRecord ex_exact(int n, const HyperGraphFamily& family, const SearchOptions& options = {});

// Single-threaded reference implementation of the same search.
TuranRecord ex_exact_serial(int n, const HyperGraphFamily& family, const SearchOptions& options = {});

}  // namespace rainbow::turan
