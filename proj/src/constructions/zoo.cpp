#include "rainbow/constructions/zoo.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow::constructions {

namespace {

// 1-based vertex lists as printed in the appendix.
HyperGraph from_one_based(int r, int n, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<std::vector<Vertex>> shifted = edges;
  for (auto& e : shifted) {
    for (auto& v : e) --v;
  }
  return HyperGraph::from_lists(r, n, shifted);
}

std::vector<Vertex> range(int from, int to) {
  std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, to - from)));
  std::iota(out.begin(), out.end(), from);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

HyperGraph fano() {
  return from_one_based(3, 7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {1, 7, 4}, {2, 7, 5}, {3, 7, 6}, {2, 4, 6}});
}

HyperGraph generalized_triangle(int r) {
  require(r >= 3, "generalized triangle needs r >= 3");
  // {1..r-1, r}, {1..r-1, r+1}, {r, ..., 2r-1}
  std::vector<Vertex> a = range(0, r - 1);
  std::vector<Vertex> b = a;
  a.push_back(r - 1);
  b.push_back(r);
  return HyperGraph::from_lists(r, 2 * r - 1, {a, b, range(r - 1, 2 * r - 1)});
}

HyperGraph expanded_triangle(int r) {
  require(r >= 2, "expanded triangle needs r >= 2");
  const auto first = range(0, r), second = range(r, 2 * r), third = range(2 * r, 3 * r);
  auto join = [](std::vector<Vertex> x, const std::vector<Vertex>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  return HyperGraph::from_lists(2 * r, 3 * r, {join(first, second), join(second, third), join(first, third)});
}

HyperGraph matching(int k, int r) {
  require(k >= 1 && r >= 2, "matching needs k >= 1, r >= 2");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < k; ++i) edges.push_back(range(i * r, (i + 1) * r));
  return HyperGraph::from_lists(r, k * r, edges);
}

HyperGraph sunflower(int k, int r) {
  require(k >= 1 && r >= 2, "sunflower needs k >= 1, r >= 2");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> e{0};
    const auto petal = range(1 + i * (r - 1), 1 + (i + 1) * (r - 1));
    e.insert(e.end(), petal.begin(), petal.end());
    edges.push_back(e);
  }
  return HyperGraph::from_lists(r, 1 + k * (r - 1), edges);
}

HyperGraph complete(int l, int r) {
  require(r >= 1 && l >= r, "complete graph needs l >= r >= 1");
  return HyperGraph::complete(l, r);
}

HyperGraph complete_minus(int l, int r) {
  const HyperGraph k = complete(l, r);
  return k.without_edge(k.size() - 1);
}

HyperGraph tight_cycle(int k) {
  require(k >= 4, "tight cycle needs k >= 4");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> e{i, (i + 1) % k, (i + 2) % k};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return HyperGraph::from_lists(3, k, edges);
}

HyperGraph tight_cycle_minus(int k) {
  const HyperGraph c = tight_cycle(k);
  return c.without_edge(c.size() - 1);
}

HyperGraph cycle(int k) {
  require(k >= 3, "cycle needs k >= 3");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return HyperGraph::from_lists(2, k, edges);
}

HyperGraph path(int edges) {
  require(edges >= 1, "path needs at least one edge");
  std::vector<std::vector<Vertex>> out;
  for (int i = 0; i < edges; ++i) out.push_back({i, i + 1});
  return HyperGraph::from_lists(2, edges + 1, out);
}

HyperGraph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<std::vector<Vertex>> out;
  for (int i = 1; i <= leaves; ++i) out.push_back({0, i});
  return HyperGraph::from_lists(2, leaves + 1, out);
}

const std::vector<ZooEntry>& zoo_catalog() {
  static const std::vector<ZooEntry> catalog{
      {"fano", ZooKind::kFano, {}, "Fano plane, 3-graph on 7 vertices"},
      {"generalized-triangle", ZooKind::kGeneralizedTriangle, {"r"}, "T_r, r >= 3"},
      {"expanded-triangle", ZooKind::kExpandedTriangle, {"r"}, "C_3^{2r}, a 2r-graph on 3r vertices, r >= 2"},
      {"f7", ZooKind::kF7, {}, "4-book with 3 pages {1234,1235,1236,4567}"},
      {"f32", ZooKind::kF32, {}, "3-book with 3 pages {123,124,125,345}"},
      {"f43", ZooKind::kF43, {}, "4-book with 4 pages {1234,1235,1236,1237,4567}"},
      {"k43-k33", ZooKind::kK43SqcupK33, {}, "K_4^3 disjoint-union K_3^3 as listed: {123,124,234,567}"},
      {"matching", ZooKind::kMatching, {"k", "r"}, "M_k^r, k disjoint r-edges"},
      {"sunflower", ZooKind::kSunflower, {"k", "r"}, "L_k^r, k r-edges pairwise meeting in one fixed vertex"},
      {"complete", ZooKind::kComplete, {"l", "r"}, "K_l^r"},
      {"complete-minus", ZooKind::kCompleteMinus, {"l", "r"}, "K_l^r minus one edge"},
      {"tight-cycle", ZooKind::kTightCycle, {"k"}, "C_k^3, k >= 4"},
      {"tight-cycle-minus", ZooKind::kTightCycleMinus, {"k"}, "C_k^3 minus one edge"},
      {"even-cycle", ZooKind::kEvenCycle, {"k"}, "graph C_{2k}, k >= 2"},
      {"cycle", ZooKind::kCycle, {"k"}, "graph C_k, k >= 3"},
      {"path", ZooKind::kPath, {"k"}, "graph path with k edges"},
      {"star", ZooKind::kStar, {"k"}, "graph K_{1,k}"},
  };
  return catalog;
}

std::string ZooId::name() const {
  for (const auto& e : zoo_catalog()) {
    if (e.kind != kind) continue;
    std::string out = e.name;
    for (int p : params) out += "-" + std::to_string(p);
    return out;
  }
  return "unknown";
}

ZooId parse_zoo_id(const std::string& name, const std::vector<int>& params) {
  for (const auto& e : zoo_catalog()) {
    if (e.name != name) continue;
    if (params.size() != e.param_names.size()) {
      throw InvalidArgument(name + " takes " + std::to_string(e.param_names.size()) + " parameter(s)");
    }
    return ZooId{e.kind, params};
  }
  throw InvalidArgument("unknown zoo object '" + name + "'");
}

HyperGraph zoo(const ZooId& id) {
  const auto& p = id.params;
  auto param = [&](std::size_t i) {
    require(i < p.size(), "missing parameter for " + id.name());
    return p[i];
  };
  switch (id.kind) {
    case ZooKind::kFano:
      return fano();
    case ZooKind::kGeneralizedTriangle:
      return generalized_triangle(param(0));
    case ZooKind::kExpandedTriangle:
      return expanded_triangle(param(0));
    case ZooKind::kF7:
      return from_one_based(4, 7, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {4, 5, 6, 7}});
    case ZooKind::kF32:
      return from_one_based(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}});
    case ZooKind::kF43:
      return from_one_based(4, 7, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 3, 7}, {4, 5, 6, 7}});
    case ZooKind::kK43SqcupK33:
      return from_one_based(3, 7, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {5, 6, 7}});
    case ZooKind::kMatching:
      return matching(param(0), param(1));
    case ZooKind::kSunflower:
      return sunflower(param(0), param(1));
    case ZooKind::kComplete:
      return complete(param(0), param(1));
    case ZooKind::kCompleteMinus:
      return complete_minus(param(0), param(1));
    case ZooKind::kTightCycle:
      return tight_cycle(param(0));
    case ZooKind::kTightCycleMinus:
      return tight_cycle_minus(param(0));
    case ZooKind::kEvenCycle:
      require(param(0) >= 2, "even cycle C_{2k} needs k >= 2");
      return cycle(2 * param(0));
    case ZooKind::kCycle:
      return cycle(param(0));
    case ZooKind::kPath:
      return path(param(0));
    case ZooKind::kStar:
      return star(param(0));
  }
  throw InvalidArgument("unknown zoo kind");
}

}  // namespace rainbow::constructions
