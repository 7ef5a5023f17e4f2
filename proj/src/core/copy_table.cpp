#include "rainbow/core/copy_table.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "rainbow/core/embedding.hpp"

namespace rainbow {

CopyTable::CopyTable(int n, const HyperGraphFamily& family) : n_(n), r_(family.uniformity()) {
  if (binomial(n, r_) > static_cast<std::uint64_t>(kMaxHostEdges)) {
    throw CapacityError("K_" + std::to_string(n) + "^" + std::to_string(r_) + " has more than " +
                        std::to_string(kMaxHostEdges) + " edges");
  }
  edges_ = all_r_subsets(n, r_);
  std::unordered_map<VertexSet, int> position;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) position[edges_[i]] = i;

  const HyperGraph host = HyperGraph::complete(n, r_);
  const HostIndex index(host);
  for (const HyperGraph& member : family.members()) {
    if (member.empty()) throw InvalidArgument("forbidden family member has no edges");
    if (member.order() > n) continue;
    // Only the non-isolated part matters for the edge set of a copy.
    const HyperGraph core = member.induced(member.support());
    for_each_embedding(core, index, 0, [&](const Embedding& e) {
      EdgeBits bits = 0;
      for (VertexSet edge : core.edges()) bits |= edge_bit(position.at(e.image_of(edge)));
      copies_.push_back(bits);
      return true;
    });
  }
  std::sort(copies_.begin(), copies_.end());
  copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());

  closing_.resize(edges_.size());
  containing_.resize(edges_.size());
  for (EdgeBits c : copies_) {
    const int top = 63 - std::countl_zero(c);
    closing_[top].push_back(c & ~edge_bit(top));
    for (EdgeBits s = c; s != 0; s &= s - 1) containing_[std::countr_zero(s)].push_back(c);
  }
}

int CopyTable::index_of(VertexSet edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) throw InvalidArgument("not an edge of the host");
  return static_cast<int>(it - edges_.begin());
}

EdgeBits CopyTable::to_bits(const HyperGraph& h) const {
  if (h.order() != n_ || h.uniformity() != r_) throw InvalidArgument("host shape mismatch");
  EdgeBits bits = 0;
  for (VertexSet e : h.edges()) bits |= edge_bit(index_of(e));
  return bits;
}

HyperGraph CopyTable::to_graph(EdgeBits bits) const {
  std::vector<VertexSet> out;
  for (; bits != 0; bits &= bits - 1) out.push_back(edges_[std::countr_zero(bits)]);
  return HyperGraph(r_, n_, std::move(out));
}

bool CopyTable::contains_copy(EdgeBits bits) const {
  return std::any_of(copies_.begin(), copies_.end(), [&](EdgeBits c) { return (c & ~bits) == 0; });
}

}  // namespace rainbow
