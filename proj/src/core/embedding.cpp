#include "rainbow/core/embedding.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "rainbow/core/family.hpp"

namespace rainbow {

VertexSet Embedding::image() const {
  VertexSet s = 0;
  for (Vertex w : map) s |= vertex_bit(w);
  return s;
}

VertexSet Embedding::image_of(VertexSet pattern_set) const {
  VertexSet s = 0;
  for (; pattern_set != 0; pattern_set &= pattern_set - 1) {
    s |= vertex_bit(map[std::countr_zero(pattern_set)]);
  }
  return s;
}

HostIndex::HostIndex(const HyperGraph& host) : host_(&host), degree_(host.degrees()) {
  completions_.reserve(host.size() * static_cast<std::size_t>(host.uniformity()));
  for (VertexSet e : host.edges()) {
    for (VertexSet s = e; s != 0; s &= s - 1) {
      const VertexSet v = s & (~s + 1);
      completions_[e & ~v] |= v;
    }
  }
}

VertexSet HostIndex::completions(VertexSet rest) const {
  auto it = completions_.find(rest);
  return it == completions_.end() ? 0 : it->second;
}

namespace {

struct SearchPlan {
  std::vector<Vertex> order;
  // Pattern edges whose last vertex in `order` is order[k].
  std::vector<std::vector<VertexSet>> closing;
  std::vector<int> degree;
  std::vector<Vertex> isolated;
};

SearchPlan make_plan(const HyperGraph& pattern) {
  SearchPlan plan;
  plan.degree = pattern.degrees();
  const VertexSet support = pattern.support();
  for (Vertex v = 0; v < pattern.order(); ++v) {
    if (!(support & vertex_bit(v))) plan.isolated.push_back(v);
  }
  VertexSet ordered = 0;
  VertexSet remaining = support;
  while (remaining != 0) {
    Vertex best = -1;
    std::tuple<int, int, int> best_score{-1, -1, -1};
    for (Vertex v : set_members(remaining)) {
      int closes = 0, touches = 0;
      for (VertexSet e : pattern.edges()) {
        if (!(e & vertex_bit(v))) continue;
        const VertexSet others = e & ~vertex_bit(v);
        if ((others & ~ordered) == 0) ++closes;
        if (others & ordered) ++touches;
      }
      const std::tuple<int, int, int> score{closes, touches, plan.degree[v]};
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    plan.order.push_back(best);
    ordered |= vertex_bit(best);
    remaining &= ~vertex_bit(best);
    std::vector<VertexSet> closes;
    for (VertexSet e : pattern.edges()) {
      if ((e & vertex_bit(best)) && (e & ~ordered) == 0) closes.push_back(e);
    }
    plan.closing.push_back(std::move(closes));
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const HyperGraph& pattern, const HostIndex& host, VertexSet forbidden,
          const EmbeddingVisitor& visit)
      : plan_(make_plan(pattern)),
        host_(host),
        available_(host.host().vertex_set() & ~forbidden),
        visit_(visit) {
    current_.map.assign(static_cast<std::size_t>(pattern.order()), -1);
  }

  void run() {
    if (static_cast<int>(plan_.order.size() + plan_.isolated.size()) > set_size(available_)) return;
    extend(0, 0);
  }

 private:
  bool extend(std::size_t k, VertexSet used) {
    if (k == plan_.order.size()) return finish(used);
    const Vertex v = plan_.order[k];
    VertexSet candidates = available_ & ~used;
    for (VertexSet e : plan_.closing[k]) {
      candidates &= host_.completions(current_.image_of(e & ~vertex_bit(v)));
      if (candidates == 0) return true;
    }
    for (; candidates != 0; candidates &= candidates - 1) {
      const Vertex w = std::countr_zero(candidates);
      if (host_.degree(w) < plan_.degree[v]) continue;
      current_.map[v] = w;
      if (!extend(k + 1, used | vertex_bit(w))) return false;
    }
    current_.map[v] = -1;
    return true;
  }

  bool finish(VertexSet used) {
    VertexSet spare = available_ & ~used;
    if (set_size(spare) < static_cast<int>(plan_.isolated.size())) return true;
    for (Vertex v : plan_.isolated) {
      current_.map[v] = std::countr_zero(spare);
      spare &= spare - 1;
    }
    const bool go_on = visit_(current_);
    for (Vertex v : plan_.isolated) current_.map[v] = -1;
    return go_on;
  }

  SearchPlan plan_;
  const HostIndex& host_;
  VertexSet available_;
  const EmbeddingVisitor& visit_;
  Embedding current_;
};

}  // namespace

void for_each_embedding(const HyperGraph& pattern, const HostIndex& host, VertexSet forbidden,
                        const EmbeddingVisitor& visit) {
  if (pattern.uniformity() != host.host().uniformity()) throw InvalidArgument("uniformity mismatch");
  Matcher(pattern, host, forbidden, visit).run();
}

std::optional<Embedding> find_embedding(const HyperGraph& pattern, const HostIndex& host,
                                        VertexSet forbidden) {
  std::optional<Embedding> found;
  for_each_embedding(pattern, host, forbidden, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::optional<Embedding> find_embedding(const HyperGraph& pattern, const HyperGraph& host,
                                        VertexSet forbidden) {
  const HostIndex index(host);
  return find_embedding(pattern, index, forbidden);
}

bool is_valid_embedding(const HyperGraph& pattern, const HyperGraph& host, const Embedding& e,
                        VertexSet forbidden) {
  if (e.map.size() != static_cast<std::size_t>(pattern.order())) return false;
  VertexSet seen = 0;
  for (Vertex w : e.map) {
    if (w < 0 || w >= host.order()) return false;
    if (seen & vertex_bit(w)) return false;
    if (forbidden & vertex_bit(w)) return false;
    seen |= vertex_bit(w);
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(),
                     [&](VertexSet edge) { return host.has_edge(e.image_of(edge)); });
}

bool contains_member(const HyperGraph& h, const HyperGraphFamily& family) {
  if (family.uniformity() != h.uniformity()) throw InvalidArgument("uniformity mismatch");
  const HostIndex index(h);
  return std::any_of(family.members().begin(), family.members().end(),
                     [&](const HyperGraph& m) { return find_embedding(m, index).has_value(); });
}

int max_disjoint_copies(const HyperGraph& pattern, const HyperGraph& host) {
  const HostIndex index(host);
  std::vector<VertexSet> images;
  for_each_embedding(pattern, index, 0, [&](const Embedding& e) {
    images.push_back(e.image());
    return true;
  });
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  int best = 0;
  std::function<void(std::size_t, VertexSet, int)> pack = [&](std::size_t from, VertexSet used, int count) {
    best = std::max(best, count);
    const int room = set_size(host.vertex_set() & ~used) / std::max(1, pattern.order());
    if (count + room <= best) return;
    for (std::size_t i = from; i < images.size(); ++i) {
      if (images[i] & used) continue;
      pack(i + 1, used | images[i], count + 1);
    }
  };
  pack(0, 0, 0);
  return best;
}

}  // namespace rainbow
