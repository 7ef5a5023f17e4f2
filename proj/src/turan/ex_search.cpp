#include "rainbow/turan/ex_search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "rainbow/core/canonical.hpp"
#include "rainbow/core/copy_table.hpp"
#include "rainbow/core/errors.hpp"

namespace rainbow::turan {

namespace {

constexpr std::size_t kMaxVisitedPrefixes = std::size_t{1} << 20;
constexpr std::uint64_t kNodeFlush = 4096;

struct Problem {
  Problem(int n_, const HyperGraphFamily& family) : n(n_), r(family.uniformity()), table(n_, family) {
    edges = table.edge_count();
    for (EdgeBits c : table.copies()) {
      if (std::has_single_bit(c)) initial_blocked |= c;
    }
    tail.assign(edges + 1, 0);
    for (int i = edges - 1; i >= 0; --i) tail[i] = tail[i + 1] | edge_bit(i);
    for (int k = r + 1; k < n; ++k) boundary_vertices.emplace_back(static_cast<int>(binomial(k, r)), k);
  }

  int vertices_at_boundary(int i) const {
    for (auto [at, k] : boundary_vertices)
      if (at == i) return k;
    return 0;
  }

  // Blocked set after adding edge i to `chosen` (which already holds i).
  EdgeBits block(int i, EdgeBits chosen, EdgeBits blocked) const {
    for (EdgeBits c : table.containing(i)) {
      const EdgeBits missing = c & ~chosen;
      if (std::has_single_bit(missing)) blocked |= missing;
    }
    return blocked;
  }

  int open_from(int i, EdgeBits chosen, EdgeBits blocked) const {
    return std::popcount(tail[i] & ~(chosen | blocked));
  }

  int n;
  int r;
  CopyTable table;
  int edges = 0;
  EdgeBits initial_blocked = 0;
  std::vector<EdgeBits> tail;
  std::vector<std::pair<int, int>> boundary_vertices;
};

void validate(int n, const HyperGraphFamily& family) {
  if (n < family.uniformity()) throw InvalidArgument("ex_exact needs n >= r");
  if (family.empty()) throw InvalidArgument("empty forbidden family");
}

// Labels of decided prefixes seen so far, shared between threads.
class VisitedPrefixes {
 public:
  bool first_visit(const Problem& p, int k, EdgeBits chosen) {
    std::vector<VertexSet> edges;
    for (EdgeBits s = chosen; s != 0; s &= s - 1) edges.push_back(p.table.edge(std::countr_zero(s)));
    CanonicalLabel label = canonical_form(HyperGraph(p.r, k, std::move(edges)));
    std::lock_guard lock(mutex_);
    if (seen_.count(label)) return false;
    if (seen_.size() < kMaxVisitedPrefixes) seen_.insert(std::move(label));
    return true;
  }

 private:
  std::mutex mutex_;
  std::unordered_set<CanonicalLabel> seen_;
};

// First graph in include-first order with exactly `target` edges.
EdgeBits first_with_value(const Problem& p, int target) {
  EdgeBits found = 0;
  bool done = false;
  auto dfs = [&](auto&& self, int i, EdgeBits chosen, EdgeBits blocked, int count) -> void {
    if (done || count + p.open_from(i, chosen, blocked) < target) return;
    if (count == target) {
      found = chosen;
      done = true;
      return;
    }
    if (!(blocked & edge_bit(i))) {
      const EdgeBits next = chosen | edge_bit(i);
      self(self, i + 1, next, p.block(i, next, blocked), count + 1);
    }
    if (i == 0 && !(blocked & edge_bit(0))) return;
    self(self, i + 1, chosen, blocked, count);
  };
  dfs(dfs, 0, 0, p.initial_blocked, 0);
  if (!done) throw Error("internal: no graph attains the computed Turan value");
  return found;
}

TuranRecord make_record(const Problem& p, const HyperGraphFamily& family, EdgeBits witness, bool exact,
                        std::uint64_t nodes) {
  TuranRecord rec;
  rec.n = p.n;
  rec.family_key = family.key();
  rec.value = std::popcount(witness);
  rec.witness = canonical_relabel(p.table.to_graph(witness));
  rec.status = exact ? RecordStatus::Exact : RecordStatus::LowerBoundOnly;
  rec.nodes = nodes;
  return rec;
}

class SerialSearch {
 public:
  SerialSearch(const Problem& p, const SearchOptions& options) : p_(p), options_(options) {}

  void run() { dfs(0, 0, p_.initial_blocked, 0); }

  int best = -1;
  EdgeBits best_bits = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  void dfs(int i, EdgeBits chosen, EdgeBits blocked, int count) {
    if (aborted) return;
    if (options_.budget != 0 && nodes >= options_.budget) {
      aborted = true;
      return;
    }
    ++nodes;
    if (count + p_.open_from(i, chosen, blocked) <= best) return;
    if (i == p_.edges) {
      best = count;
      best_bits = chosen;
      return;
    }
    if (options_.canonical_augmentation) {
      const int k = p_.vertices_at_boundary(i);
      if (k != 0 && !visited_.first_visit(p_, k, chosen)) return;
    }
    if (!(blocked & edge_bit(i))) {
      const EdgeBits next = chosen | edge_bit(i);
      dfs(i + 1, next, p_.block(i, next, blocked), count + 1);
      if (i == 0) return;
    }
    dfs(i + 1, chosen, blocked, count);
  }

  const Problem& p_;
  const SearchOptions& options_;
  VisitedPrefixes visited_;
};

struct Task {
  int depth;
  EdgeBits chosen;
  EdgeBits blocked;
  int count;
};

struct Shared {
  std::atomic<int> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::mutex witness_mutex;
  EdgeBits best_bits = 0;

  void offer(int count, EdgeBits bits) {
    std::lock_guard lock(witness_mutex);
    if (count > best.load(std::memory_order_relaxed)) {
      best_bits = bits;
      best.store(count, std::memory_order_relaxed);
    }
  }
};

class ParallelWorker {
 public:
  ParallelWorker(const Problem& p, const SearchOptions& options, Shared& shared, VisitedPrefixes& visited)
      : p_(p), options_(options), shared_(shared), visited_(visited) {}

  void run(const Task& t) { dfs(t.depth, t.chosen, t.blocked, t.count); }

  void flush() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

 private:
  void dfs(int i, EdgeBits chosen, EdgeBits blocked, int count) {
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    if (++local_nodes_ == kNodeFlush) {
      const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
      local_nodes_ = 0;
      if (options_.budget != 0 && total >= options_.budget) {
        shared_.aborted.store(true, std::memory_order_relaxed);
        return;
      }
    }
    if (count + p_.open_from(i, chosen, blocked) <= shared_.best.load(std::memory_order_relaxed)) return;
    if (i == p_.edges) {
      shared_.offer(count, chosen);
      return;
    }
    if (options_.canonical_augmentation) {
      const int k = p_.vertices_at_boundary(i);
      if (k != 0 && !visited_.first_visit(p_, k, chosen)) return;
    }
    if (!(blocked & edge_bit(i))) {
      const EdgeBits next = chosen | edge_bit(i);
      dfs(i + 1, next, p_.block(i, next, blocked), count + 1);
      if (i == 0) return;
    }
    dfs(i + 1, chosen, blocked, count);
  }

  const Problem& p_;
  const SearchOptions& options_;
  Shared& shared_;
  VisitedPrefixes& visited_;
  std::uint64_t local_nodes_ = 0;
};

// Prefixes of the search tree at a fixed depth, in include-first order.
std::vector<Task> split(const Problem& p, int depth) {
  std::vector<Task> tasks;
  auto rec = [&](auto&& self, int i, EdgeBits chosen, EdgeBits blocked, int count) -> void {
    if (i == depth) {
      tasks.push_back({i, chosen, blocked, count});
      return;
    }
    if (!(blocked & edge_bit(i))) {
      const EdgeBits next = chosen | edge_bit(i);
      self(self, i + 1, next, p.block(i, next, blocked), count + 1);
      if (i == 0) return;
    }
    self(self, i + 1, chosen, blocked, count);
  };
  rec(rec, 0, 0, p.initial_blocked, 0);
  return tasks;
}

// Greedy include-first leaf: a quick starting lower bound.
EdgeBits greedy(const Problem& p) {
  EdgeBits chosen = 0, blocked = p.initial_blocked;
  for (int i = 0; i < p.edges; ++i) {
    if (blocked & edge_bit(i)) continue;
    chosen |= edge_bit(i);
    blocked = p.block(i, chosen, blocked);
  }
  return chosen;
}

}  // namespace

TuranRecord ex_exact_serial(int n, const HyperGraphFamily& family, const SearchOptions& options) {
  validate(n, family);
  const Problem p(n, family);
  SerialSearch search(p, options);
  search.run();
  if (search.aborted) return make_record(p, family, search.best_bits, false, search.nodes);
  return make_record(p, family, first_with_value(p, search.best), true, search.nodes);
}

TuranRecord ex_exact(int n, const HyperGraphFamily& family, const SearchOptions& options) {
  validate(n, family);
  const Problem p(n, family);
  Shared shared;
  const EdgeBits start = greedy(p);
  shared.offer(std::popcount(start), start);
  // A starting value of `best` would cut every leaf that only ties it, so the
  // search proper begins one below.
  shared.best.store(std::popcount(start) - 1);

  VisitedPrefixes visited;
  const std::vector<Task> tasks = split(p, std::min(p.edges, 14));
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    ParallelWorker worker(p, options, shared, visited);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t t = 0; t < tasks.size(); ++t) worker.run(tasks[t]);
    worker.flush();
  }
  const std::uint64_t nodes = shared.nodes.load();
  if (shared.aborted.load()) return make_record(p, family, shared.best_bits, false, nodes);
  return make_record(p, family, first_with_value(p, shared.best.load()), true, nodes);
}

}  // namespace rainbow::turan
