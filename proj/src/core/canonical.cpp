#include "rainbow/core/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

constexpr std::size_t kMaxStoredAutomorphisms = 4096;

class Canonizer {
 public:
  explicit Canonizer(const HyperGraph& h)
      : h_(h), n_(h.order()), incident_(static_cast<std::size_t>(h.order())) {
    for (VertexSet e : h.edges()) {
      for (Vertex v : set_members(e)) incident_[static_cast<std::size_t>(v)].push_back(e);
    }
  }

  Canonization run() {
    Partition root;
    if (n_ > 0) {
      Cell all(static_cast<std::size_t>(n_));
      std::iota(all.begin(), all.end(), 0);
      root.push_back(std::move(all));
    }
    std::vector<Vertex> prefix;
    search(std::move(root), prefix);

    Canonization out;
    out.labeling = best_labeling_;
    out.automorphisms = automorphisms_;
    out.label = encode(best_edges_);
    return out;
  }

 private:
  // Splits cells by the multiset of cell-index tuples of each vertex's edges
  // until no cell splits. Cell order depends only on the signatures, so the
  // result is independent of the input labels.
  void refine(Partition& p) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (Vertex v : p[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      }
      Partition next;
      next.reserve(p.size());
      for (const Cell& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::vector<int>>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::vector<int>> sig;
          sig.reserve(incident_[static_cast<std::size_t>(v)].size());
          for (VertexSet e : incident_[static_cast<std::size_t>(v)]) {
            std::vector<int> tuple;
            for (VertexSet s = e & ~vertex_bit(v); s != 0; s &= s - 1) {
              tuple.push_back(cell_of[static_cast<std::size_t>(std::countr_zero(s))]);
            }
            std::sort(tuple.begin(), tuple.end());
            sig.push_back(std::move(tuple));
          }
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        Cell current{keyed.front().second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(current));
            current.clear();
          }
          current.push_back(keyed[i].second);
        }
        next.push_back(std::move(current));
      }
      const bool stable = next.size() == p.size();
      p = std::move(next);
      if (stable) return;
    }
  }

  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& g : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v), b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    std::vector<Vertex> roots(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) roots[static_cast<std::size_t>(v)] = find(v);
    return roots;
  }

  // Keeps the generator list small: g is stored only if it joins two orbits of
  // the stored generators that fix the longest prefix g itself fixes.
  bool merges_orbits(const std::vector<Vertex>& g, const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> fixed;
    for (Vertex v : prefix) {
      if (g[static_cast<std::size_t>(v)] != v) break;
      fixed.push_back(v);
    }
    const auto roots = orbit_roots(fixed);
    for (Vertex v = 0; v < n_; ++v) {
      if (roots[static_cast<std::size_t>(v)] != roots[static_cast<std::size_t>(g[static_cast<std::size_t>(v)])]) return true;
    }
    return false;
  }

  void search(Partition p, std::vector<Vertex>& prefix) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      leaf(p, prefix);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    Cell candidates = p[idx];
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty()) {
        const auto roots = orbit_roots(prefix);
        const bool equivalent = std::any_of(explored.begin(), explored.end(), [&](Vertex u) {
          return roots[static_cast<std::size_t>(u)] == roots[static_cast<std::size_t>(v)];
        });
        if (equivalent) continue;
      }
      explored.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != idx) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (Vertex w : p[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition& p, const std::vector<Vertex>& prefix) {
    std::vector<Vertex> labeling(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < p.size(); ++c) labeling[static_cast<std::size_t>(p[c].front())] = static_cast<Vertex>(c);
    std::vector<VertexSet> edges;
    edges.reserve(h_.size());
    for (VertexSet e : h_.edges()) {
      VertexSet m = 0;
      for (VertexSet s = e; s != 0; s &= s - 1) {
        m |= vertex_bit(labeling[static_cast<std::size_t>(std::countr_zero(s))]);
      }
      edges.push_back(m);
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best_ || edges < best_edges_) {
      have_best_ = true;
      best_edges_ = std::move(edges);
      best_labeling_ = std::move(labeling);
      return;
    }
    if (edges == best_edges_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      std::vector<Vertex> inverse_best(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) inverse_best[static_cast<std::size_t>(best_labeling_[static_cast<std::size_t>(v)])] = v;
      std::vector<Vertex> g(static_cast<std::size_t>(n_));
      bool identity = true;
      for (Vertex v = 0; v < n_; ++v) {
        g[static_cast<std::size_t>(v)] = inverse_best[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])];
        identity = identity && g[static_cast<std::size_t>(v)] == v;
      }
      if (!identity && merges_orbits(g, prefix)) automorphisms_.push_back(std::move(g));
    }
  }

  std::string encode(const std::vector<VertexSet>& edges) const {
    std::string out;
    out.reserve(10 + 8 * edges.size());
    out.push_back(static_cast<char>(h_.uniformity()));
    out.push_back(static_cast<char>(n_));
    const std::uint64_t m = edges.size();
    for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((m >> (8 * b)) & 0xFF));
    for (VertexSet e : edges) {
      for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((e >> (8 * b)) & 0xFF));
    }
    return out;
  }

  const HyperGraph& h_;
  int n_;
  std::vector<std::vector<VertexSet>> incident_;
  bool have_best_ = false;
  std::vector<VertexSet> best_edges_;
  std::vector<Vertex> best_labeling_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

Canonization canonize(const HyperGraph& h) { return Canonizer(h).run(); }

CanonicalLabel canonical_form(const HyperGraph& h) { return canonize(h).label; }

HyperGraph canonical_relabel(const HyperGraph& h) { return h.relabel(canonize(h).labeling); }

bool is_isomorphic(const HyperGraph& a, const HyperGraph& b) {
  if (a.uniformity() != b.uniformity()) throw InvalidArgument("uniformity mismatch");
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace rainbow
