#include "rainbow/antiramsey/rainbow.hpp"

#include <algorithm>
#include <vector>

#include "rainbow/core/errors.hpp"

namespace rainbow::antiramsey {

std::optional<Embedding> find_rainbow_copy(const EdgeColoring& chi, const HyperGraph& target) {
  if (target.uniformity() != chi.uniformity()) throw InvalidArgument("uniformity mismatch");
  if (target.order() > chi.order() || target.size() > static_cast<std::size_t>(chi.color_count())) {
    return std::nullopt;
  }
  const HyperGraph host = HyperGraph::complete(chi.order(), chi.uniformity());
  const HostIndex index(host);
  std::vector<bool> seen(chi.color_count() + 1, false);
  std::optional<Embedding> found;
  for_each_embedding(target, index, 0, [&](const Embedding& e) {
    std::fill(seen.begin(), seen.end(), false);
    for (VertexSet edge : target.edges()) {
      const int c = chi.color_of(e.image_of(edge));
      if (seen[c]) return true;
      seen[c] = true;
    }
    found = e;
    return false;
  });
  return found;
}

HyperGraph max_rainbow_subgraph(const EdgeColoring& chi) {
  const std::vector<VertexSet> all = all_r_subsets(chi.order(), chi.uniformity());
  std::vector<bool> taken(chi.color_count() + 1, false);
  std::vector<VertexSet> edges;
  for (int i = 0; i < chi.edge_count(); ++i) {
    if (taken[chi.color(i)]) continue;
    taken[chi.color(i)] = true;
    edges.push_back(all[i]);
  }
  return HyperGraph(chi.uniformity(), chi.order(), std::move(edges));
}

}  // namespace rainbow::antiramsey
