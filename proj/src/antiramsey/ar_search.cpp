#include "rainbow/antiramsey/ar_search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <mutex>
#include <sstream>
#include <vector>

#include "rainbow/antiramsey/rainbow.hpp"
#include "rainbow/core/copy_table.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/family.hpp"

namespace rainbow::antiramsey {

namespace {

constexpr std::uint64_t kNodeFlush = 4096;

using Colors = std::array<std::uint8_t, kMaxHostEdges>;

struct Problem {
  Problem(int n_, const HyperGraph& target) : n(n_), r(target.uniformity()), table(n_, HyperGraphFamily::single(target)) {
    edges = table.edge_count();
  }

  // Bit c set iff color c may go on edge i; bit `classes` stands for a new color.
  std::uint64_t allowed(int i, const Colors& colors, int classes) const {
    std::uint64_t ok = classes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << classes) - 1;
    bool constrained = false;
    for (EdgeBits rest : table.closing_at(i)) {
      std::uint64_t seen = 0;
      bool rainbow = true;
      for (EdgeBits b = rest; b != 0; b &= b - 1) {
        const std::uint64_t bit = std::uint64_t{1} << colors[std::countr_zero(b)];
        if (seen & bit) {
          rainbow = false;
          break;
        }
        seen |= bit;
      }
      if (!rainbow) continue;
      constrained = true;
      ok &= seen;
      if (ok == 0) break;
    }
    if (!constrained && classes < 64) ok |= std::uint64_t{1} << classes;
    return ok;
  }

  EdgeColoring to_coloring(const Colors& colors) const {
    std::vector<int> rgs(colors.begin(), colors.begin() + edges);
    return EdgeColoring::from_rgs(n, r, rgs);
  }

  int n;
  int r;
  CopyTable table;
  int edges = 0;
};

void check_capacity(int n, const HyperGraph& target) {
  if (target.empty()) throw InvalidArgument("target needs an edge");
  if (n < target.uniformity()) throw InvalidArgument("host needs n >= r");
}

// Lexicographically least restricted growth string with `target` classes.
std::optional<EdgeColoring> least_with_classes(const Problem& p, int target) {
  if (target == 0) return std::nullopt;
  Colors colors{};
  bool done = false;
  auto dfs = [&](auto&& self, int i, int classes) -> void {
    if (done || classes + (p.edges - i) < target) return;
    if (i == p.edges) {
      done = classes == target;
      return;
    }
    const std::uint64_t ok = p.allowed(i, colors, classes);
    for (int c = 0; c <= classes && !done; ++c) {
      if (!((ok >> c) & 1U)) continue;
      colors[i] = static_cast<std::uint8_t>(c);
      self(self, i + 1, c == classes ? classes + 1 : classes);
    }
  };
  dfs(dfs, 0, 0);
  if (!done) throw Error("internal: no partition attains the computed class count");
  return p.to_coloring(colors);
}

class SerialSearch {
 public:
  SerialSearch(const Problem& p, const ArOptions& options) : p_(p), options_(options) {}

  void run() { dfs(0, 0); }

  int best = 0;
  Colors best_colors{};
  bool have_best = false;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  void dfs(int i, int classes) {
    if (aborted) return;
    if (options_.budget != 0 && nodes >= options_.budget) {
      aborted = true;
      return;
    }
    ++nodes;
    if (classes + (p_.edges - i) <= best) return;
    if (i == p_.edges) {
      best = classes;
      best_colors = colors_;
      have_best = true;
      return;
    }
    const std::uint64_t ok = p_.allowed(i, colors_, classes);
    if ((ok >> classes) & 1U) {
      colors_[i] = static_cast<std::uint8_t>(classes);
      dfs(i + 1, classes + 1);
    }
    for (int c = 0; c < classes; ++c) {
      if (!((ok >> c) & 1U)) continue;
      colors_[i] = static_cast<std::uint8_t>(c);
      dfs(i + 1, classes);
    }
  }

  const Problem& p_;
  const ArOptions& options_;
  Colors colors_{};
};

struct Task {
  int depth;
  int classes;
  Colors colors;
};

struct Shared {
  std::atomic<int> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::mutex mutex;
  Colors best_colors{};
  bool have_best = false;

  void offer(int classes, const Colors& colors) {
    std::lock_guard lock(mutex);
    if (classes > best.load(std::memory_order_relaxed)) {
      best_colors = colors;
      have_best = true;
      best.store(classes, std::memory_order_relaxed);
    }
  }
};

class ParallelWorker {
 public:
  ParallelWorker(const Problem& p, const ArOptions& options, Shared& shared)
      : p_(p), options_(options), shared_(shared) {}

  void run(const Task& t) {
    colors_ = t.colors;
    dfs(t.depth, t.classes);
  }

  void flush() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

 private:
  void dfs(int i, int classes) {
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    if (++local_nodes_ == kNodeFlush) {
      const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
      local_nodes_ = 0;
      if (options_.budget != 0 && total >= options_.budget) {
        shared_.aborted.store(true, std::memory_order_relaxed);
        return;
      }
    }
    if (classes + (p_.edges - i) <= shared_.best.load(std::memory_order_relaxed)) return;
    if (i == p_.edges) {
      shared_.offer(classes, colors_);
      return;
    }
    const std::uint64_t ok = p_.allowed(i, colors_, classes);
    if ((ok >> classes) & 1U) {
      colors_[i] = static_cast<std::uint8_t>(classes);
      dfs(i + 1, classes + 1);
    }
    for (int c = 0; c < classes; ++c) {
      if (!((ok >> c) & 1U)) continue;
      colors_[i] = static_cast<std::uint8_t>(c);
      dfs(i + 1, classes);
    }
  }

  const Problem& p_;
  const ArOptions& options_;
  Shared& shared_;
  Colors colors_{};
  std::uint64_t local_nodes_ = 0;
};

std::vector<Task> split(const Problem& p, int depth) {
  std::vector<Task> tasks;
  Colors colors{};
  auto rec = [&](auto&& self, int i, int classes) -> void {
    if (i == depth) {
      tasks.push_back({i, classes, colors});
      return;
    }
    const std::uint64_t ok = p.allowed(i, colors, classes);
    if ((ok >> classes) & 1U) {
      colors[i] = static_cast<std::uint8_t>(classes);
      self(self, i + 1, classes + 1);
    }
    for (int c = 0; c < classes; ++c) {
      if (!((ok >> c) & 1U)) continue;
      colors[i] = static_cast<std::uint8_t>(c);
      self(self, i + 1, classes);
    }
  };
  rec(rec, 0, 0);
  return tasks;
}

// First leaf of the new-color-first order, taking the first allowed color
// everywhere: a quick starting lower bound (0 when some edge has no color).
int greedy(const Problem& p, Colors& colors) {
  int classes = 0;
  for (int i = 0; i < p.edges; ++i) {
    const std::uint64_t ok = p.allowed(i, colors, classes);
    if (ok == 0) return 0;
    const int c = ((ok >> classes) & 1U) ? classes : std::countr_zero(ok);
    colors[i] = static_cast<std::uint8_t>(c);
    if (c == classes) ++classes;
  }
  return classes;
}

PartitionResult finish(const Problem& p, int best, const Colors& best_colors, bool have_best, bool aborted,
                       std::uint64_t nodes) {
  PartitionResult out;
  out.classes = best;
  out.nodes = nodes;
  out.complete = !aborted;
  if (aborted) {
    if (have_best) out.witness = p.to_coloring(best_colors);
  } else {
    out.witness = least_with_classes(p, best);
  }
  return out;
}

ArRecord to_record(int n, int t, const HyperGraph& f, const PartitionResult& res) {
  ArRecord rec;
  rec.n = n;
  rec.t = t;
  rec.f_key = graph_key(f);
  rec.witness = res.witness;
  rec.nodes = res.nodes;
  rec.value = res.classes + 1;
  rec.lo = rec.value;
  if (res.complete) {
    rec.status = ArStatus::Exact;
    rec.hi = rec.value;
  } else {
    rec.status = ArStatus::Bounds;
    rec.hi = static_cast<int>(binomial(n, f.uniformity())) + 1;
  }
  return rec;
}

HyperGraph tiling_target(int n, int t, const HyperGraph& f) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (f.empty()) throw InvalidArgument("F needs an edge");
  if (static_cast<std::int64_t>(t) * f.order() > n) throw InvalidArgument("target cannot embed");
  return disjoint_union(f, t);
}

std::string_view field(std::string_view token, std::string_view name) {
  if (token.size() <= name.size() + 1 || token.substr(0, name.size()) != name || token[name.size()] != '=') {
    throw ParseError("expected field '" + std::string(name) + "=' in AR header");
  }
  return token.substr(name.size() + 1);
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

PartitionResult max_classes_without_rainbow_serial(int n, const HyperGraph& target, const ArOptions& options) {
  check_capacity(n, target);
  const Problem p(n, target);
  SerialSearch search(p, options);
  search.run();
  return finish(p, search.best, search.best_colors, search.have_best, search.aborted, search.nodes);
}

PartitionResult max_classes_without_rainbow(int n, const HyperGraph& target, const ArOptions& options) {
  check_capacity(n, target);
  const Problem p(n, target);
  Shared shared;
  Colors start{};
  const int start_classes = greedy(p, start);
  if (start_classes > 0) {
    shared.offer(start_classes, start);
    // Leaves that only tie the greedy value must still be reachable.
    shared.best.store(start_classes - 1);
  }
  const std::vector<Task> tasks = split(p, std::min(p.edges, 8));
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    ParallelWorker worker(p, options, shared);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t k = 0; k < tasks.size(); ++k) worker.run(tasks[k]);
    worker.flush();
  }
  return finish(p, shared.best.load(), shared.best_colors, shared.have_best, shared.aborted.load(),
                shared.nodes.load());
}

ArRecord ar_exact(int n, int t, const HyperGraph& f, const ArOptions& options) {
  return to_record(n, t, f, max_classes_without_rainbow(n, tiling_target(n, t, f), options));
}

ArRecord ar_exact_serial(int n, int t, const HyperGraph& f, const ArOptions& options) {
  return to_record(n, t, f, max_classes_without_rainbow_serial(n, tiling_target(n, t, f), options));
}

std::string_view ar_status_name(ArStatus s) { return s == ArStatus::Exact ? "exact" : "bounds"; }

std::string ar_record_text(const ArRecord& rec) {
  std::ostringstream out;
  out << "AR n=" << rec.n << " t=" << rec.t << " F=" << rec.f_key << " value=" << rec.value
      << " status=" << ar_status_name(rec.status) << " lo=" << rec.lo << " hi=" << rec.hi << " solver=" << rec.solver
      << " manifest=" << rec.manifest << '\n';
  out << (rec.witness ? coloring_text(*rec.witness) : std::string("none\n"));
  return out.str();
}

ArRecord parse_ar_record(std::string_view text) {
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw ParseError("missing AR header line");
  std::vector<std::string_view> tokens;
  std::string_view head = text.substr(0, eol);
  for (std::size_t pos = 0;;) {
    const std::size_t next = head.find(' ', pos);
    tokens.push_back(head.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (tokens.size() != 10 || tokens[0] != "AR") throw ParseError("malformed AR header");
  ArRecord rec;
  rec.n = parse_int(field(tokens[1], "n"));
  rec.t = parse_int(field(tokens[2], "t"));
  rec.f_key = std::string(field(tokens[3], "F"));
  rec.value = parse_int(field(tokens[4], "value"));
  const std::string_view status = field(tokens[5], "status");
  if (status == "exact") rec.status = ArStatus::Exact;
  else if (status == "bounds") rec.status = ArStatus::Bounds;
  else throw ParseError("unknown AR status '" + std::string(status) + "'");
  rec.lo = parse_int(field(tokens[6], "lo"));
  rec.hi = parse_int(field(tokens[7], "hi"));
  rec.solver = std::string(field(tokens[8], "solver"));
  rec.manifest = std::string(field(tokens[9], "manifest"));
  const std::string_view body = text.substr(eol + 1);
  if (body != "none\n") rec.witness = parse_coloring(body);
  return rec;
}

void verify_ar_record(const ArRecord& rec, const HyperGraph& f) {
  if (rec.f_key != graph_key(f)) throw VerificationError("record belongs to another F");
  if (rec.lo > rec.hi || rec.value != rec.lo || (rec.exact() && rec.hi != rec.lo)) {
    throw VerificationError("inconsistent AR bounds");
  }
  const HyperGraph target = tiling_target(rec.n, rec.t, f);
  if (!rec.witness) {
    if (rec.value != 1 || target.size() != 1) throw VerificationError("only a one-edge target may lack a witness");
    return;
  }
  const EdgeColoring& chi = *rec.witness;
  if (chi.order() != rec.n || chi.uniformity() != f.uniformity()) throw VerificationError("witness has the wrong shape");
  if (chi.color_count() != rec.value - 1) throw VerificationError("witness color count differs from value - 1");
  if (find_rainbow_copy(chi, target)) throw VerificationError("witness contains a rainbow copy of the target");
}

}  // namespace rainbow::antiramsey
