#pragma once

#include <string>
#include <vector>

#include "rainbow/core/canonical.hpp"
#include "rainbow/core/hypergraph.hpp"

namespace rainbow {

// Pairwise non-isomorphic hypergraphs of one uniformity, kept in insertion order.
class HyperGraphFamily {
 public:
  explicit HyperGraphFamily(int r) : r_(r) {}
  HyperGraphFamily(int r, const std::vector<HyperGraph>& members);

  static HyperGraphFamily single(const HyperGraph& h);

  int uniformity() const { return r_; }
  const std::vector<HyperGraph>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Adds h unless an isomorphic member is present; returns whether it was added.
  bool insert(const HyperGraph& h);
  bool contains_isomorphic(const HyperGraph& h) const;

  HyperGraphFamily united_with(const HyperGraphFamily& other) const;

  // Stable 16-hex-digit key derived from the sorted canonical labels.
  std::string key() const;

  // Same members up to isomorphism.
  bool equivalent(const HyperGraphFamily& other) const;

 private:
  int r_;
  std::vector<HyperGraph> members_;
  std::vector<CanonicalLabel> labels_;
};

// First 16 hex digits of the SHA-256 of `bytes`.
std::string short_digest(const std::string& bytes);

// Key of a single hypergraph up to isomorphism.
std::string graph_key(const HyperGraph& h);

}  // namespace rainbow
