#pragma once

#include <string>
#include <vector>

#include "rainbow/core/hypergraph.hpp"

namespace rainbow::constructions {

enum class ZooKind {
  kFano,
  kGeneralizedTriangle,  // T_r: r-graph on 2r-1 vertices, 3 edges
  kExpandedTriangle,     // C_3^{2r}: 2r-graph on 3r vertices, 3 edges
  kF7,                   // 4-book with 3 pages
  kF32,                  // 3-book with 3 pages
  kF43,                  // 4-book with 4 pages
  kK43SqcupK33,
  kMatching,             // M_k^r
  kSunflower,            // L_k^r
  kComplete,             // K_l^r
  kCompleteMinus,        // K_l^{r-}
  kTightCycle,           // C_k^3
  kTightCycleMinus,      // C_k^{3-}
  kEvenCycle,            // graph C_{2k}
  kCycle,                // graph C_k
  kPath,                 // graph path with k edges
  kStar,                 // graph K_{1,k}
};

struct ZooId {
  ZooKind kind;
  std::vector<int> params;

  std::string name() const;
};

struct ZooEntry {
  std::string name;
  ZooKind kind;
  std::vector<std::string> param_names;
  std::string description;
};

const std::vector<ZooEntry>& zoo_catalog();

// Parses "<name>" plus integer parameters, e.g. ("matching", {2, 3}).
ZooId parse_zoo_id(const std::string& name, const std::vector<int>& params);

// Vertices are 0-based; appendix vertex i becomes i-1.
// Throws InvalidArgument for parameters outside the definition's range.
HyperGraph zoo(const ZooId& id);

HyperGraph fano();
HyperGraph generalized_triangle(int r);
HyperGraph expanded_triangle(int r);
HyperGraph matching(int k, int r);
HyperGraph sunflower(int k, int r);
HyperGraph complete(int l, int r);
HyperGraph complete_minus(int l, int r);
HyperGraph tight_cycle(int k);
HyperGraph tight_cycle_minus(int k);
HyperGraph cycle(int k);
HyperGraph path(int edges);
HyperGraph star(int leaves);

}  // namespace rainbow::constructions
