#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rainbow/antiramsey/coloring.hpp"
#include "rainbow/core/hypergraph.hpp"

namespace rainbow::antiramsey {

inline constexpr std::string_view kArSolverVersion = "rgs-colex-1";

struct ArOptions {
  // Maximum number of search nodes; 0 means unlimited.
  std::uint64_t budget = 0;
  // OpenMP thread count for the parallel search; 0 uses the runtime default.
  int threads = 0;
};

enum class ArStatus { Exact, Bounds };

// ar(n, tF). For an exact record `value` = ar and the witness has value - 1
// colors. For a truncated search value = lo = witness colors + 1 and
// hi = C(n, r) + 1. The witness is absent when no coloring avoids a rainbow
// target at all (a one-edge target), in which case ar = 1.
struct ArRecord {
  int n = 0;
  int t = 0;
  std::string f_key;
  int value = 0;
  int lo = 0;
  int hi = 0;
  std::optional<EdgeColoring> witness;
  ArStatus status = ArStatus::Exact;
  std::string solver{kArSolverVersion};
  std::string manifest = "none";
  std::uint64_t nodes = 0;

  bool exact() const { return status == ArStatus::Exact; }
};

// Largest number of classes of a partition of E(K_n^r) with no rainbow copy
// of `target`, by restricted-growth-string search over the colex edge order.
// Each copy of the target is indexed by its last edge; when that edge gets a
// color, a copy whose other edges are already rainbow restricts it to one of
// their colors. Nodes with classes + remaining edges <= best are cut.
//
// The witness is the lexicographically least restricted growth string with
// the maximum class count. Requires C(n, r) <= 64.
struct PartitionResult {
  int classes = 0;
  std::optional<EdgeColoring> witness;
  bool complete = true;
  std::uint64_t nodes = 0;
};

PartitionResult max_classes_without_rainbow(int n, const HyperGraph& target, const ArOptions& options = {});
PartitionResult max_classes_without_rainbow_serial(int n, const HyperGraph& target, const ArOptions& options = {});

// Throws InvalidArgument("target cannot embed") when t * v(F) > n.
ArRecord ar_exact(int n, int t, const HyperGraph& f, const ArOptions& options = {});
ArRecord ar_exact_serial(int n, int t, const HyperGraph& f, const ArOptions& options = {});

std::string_view ar_status_name(ArStatus s);

// AR n=<n> t=<t> F=<key> value=<v> status=<exact|bounds> lo=<lo> hi=<hi> solver=<id> manifest=<id>
// followed by the witness coloring, or the single line "none".
std::string ar_record_text(const ArRecord& rec);
ArRecord parse_ar_record(std::string_view text);

// Throws VerificationError unless the key matches, the witness color count
// fits the status, and the witness has no rainbow tF.
void verify_ar_record(const ArRecord& rec, const HyperGraph& f);

}  // namespace rainbow::antiramsey
