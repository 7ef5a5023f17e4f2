#include "rainbow/antiramsey/constructions.hpp"

#include <vector>

#include "rainbow/antiramsey/rainbow.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/family.hpp"

namespace rainbow::antiramsey {

EdgeColoring build_coloring_fact21(int n, int t, const HyperGraph& f, const turan::TuranRecord& extremal) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (static_cast<std::int64_t>(t) * f.order() > n) throw InvalidArgument("t * v(F) exceeds n");
  if (!extremal.exact()) throw MissingRecord("the Turan record for tF is not exact");
  const HyperGraphFamily family = HyperGraphFamily::single(disjoint_union(f, t));
  if (extremal.n != n || extremal.family_key != family.key()) {
    throw InvalidArgument("the Turan record is not ex(n, tF) for these parameters");
  }
  const int r = f.uniformity();
  const std::vector<VertexSet> all = all_r_subsets(n, r);
  const int extra = extremal.value + 1;
  std::vector<int> colors(all.size(), extra);
  int next = 1;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (extremal.witness.has_edge(all[i])) colors[i] = next++;
  }
  return EdgeColoring(n, r, std::move(colors));
}

EdgeColoring build_coloring_fact31(int n, int t, const HyperGraph& f, const EdgeColoring& inner) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  if (inner.order() != n - t || inner.uniformity() != f.uniformity()) {
    throw InvalidArgument("inner coloring must be on n - t vertices");
  }
  const HyperGraph two_f = disjoint_union(f, 2);
  if (find_rainbow_copy(inner, two_f)) throw VerificationError("inner coloring contains a rainbow 2F");
  // The edges inside the first n-t vertices are exactly the first C(n-t, r) in colex order.
  std::vector<int> colors = inner.colors();
  const std::uint64_t total = binomial(n, f.uniformity());
  int next = inner.color_count() + 1;
  while (colors.size() < total) colors.push_back(next++);
  return EdgeColoring(n, f.uniformity(), std::move(colors));
}

}  // namespace rainbow::antiramsey
