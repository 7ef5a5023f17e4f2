#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rainbow/core/hypergraph.hpp"

namespace rainbow::antiramsey {

// Surjective coloring of E(K_n^r) with colors 1..N, indexed by colex rank.
class EdgeColoring {
 public:
  // Throws InvalidArgument unless there are C(n, r) colors, all >= 1, and
  // every value from 1 to the maximum occurs.
  EdgeColoring(int n, int r, std::vector<int> colors);

  // From a restricted growth string (0-based, first occurrences increasing).
  static EdgeColoring from_rgs(int n, int r, const std::vector<int>& rgs);
  static EdgeColoring constant(int n, int r);

  int order() const { return n_; }
  int uniformity() const { return r_; }
  int color_count() const { return count_; }
  int edge_count() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  int color(int index) const { return colors_[index]; }
  int color_of(VertexSet edge) const;

  // Classes a and b joined; the colors above the removed one shift down.
  EdgeColoring merged(int a, int b) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  int n_;
  int r_;
  int count_ = 0;
  std::vector<int> colors_;
};

// Line 1: "r n N"; line 2: the C(n, r) color ids in colex edge order.
std::string coloring_text(const EdgeColoring& chi);
EdgeColoring parse_coloring(std::string_view text);

}  // namespace rainbow::antiramsey
