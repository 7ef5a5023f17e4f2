#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "rainbow/core/family.hpp"
#include "rainbow/core/hypergraph.hpp"

namespace rainbow::turan {

inline constexpr std::string_view kSolverVersion = "bb-colex-1";

enum class RecordStatus { Exact, LowerBoundOnly };

std::string_view status_name(RecordStatus s);
RecordStatus parse_status(std::string_view name);

// ex(n, family) with a family-free witness on n vertices.
struct TuranRecord {
  int n = 0;
  std::string family_key;
  int value = 0;
  HyperGraph witness;
  RecordStatus status = RecordStatus::Exact;
  std::string solver{kSolverVersion};
  std::string manifest = "none";
  // Search nodes visited; not part of the stored form.
  std::uint64_t nodes = 0;

  bool exact() const { return status == RecordStatus::Exact; }
};

// TURAN n=<n> fam=<key> value=<v> status=<s> solver=<id> manifest=<id>
// followed by the witness in the hypergraph text format.
std::string record_text(const TuranRecord& rec);
TuranRecord parse_turan_record(std::string_view text);

// Throws VerificationError unless the witness has n vertices, contains no
// member of the family, has exactly `value` edges, and the key matches.
void verify_record(const TuranRecord& rec, const HyperGraphFamily& family);

// Records of one forbidden family, indexed by n.
class TuranTable {
 public:
  TuranTable() = default;
  explicit TuranTable(std::string family_key) : key_(std::move(family_key)) {}

  const std::string& family_key() const { return key_; }
  void add(TuranRecord rec);
  const TuranRecord* find(int n) const;
  // The exact value at n; throws MissingRecord otherwise.
  int exact(int n) const;
  const std::map<int, TuranRecord>& records() const { return records_; }

 private:
  std::string key_;
  std::map<int, TuranRecord> records_;
};

}  // namespace rainbow::turan
