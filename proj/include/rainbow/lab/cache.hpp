#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/antiramsey/ar_search.hpp"
#include "rainbow/antiramsey/coloring.hpp"
#include "rainbow/core/family.hpp"
#include "rainbow/turan/record.hpp"

namespace rainbow::lab {

// What one CLI invocation did. The id hashes only the deterministic fields,
// so records written by a re-run reference the same manifest.
struct RunManifest {
  std::vector<std::string> command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest of contents
  std::string solver;
  std::string started;  // UTC, ISO 8601
  double wall_seconds = 0;
  std::vector<std::string> verdicts;
  std::vector<std::string> outputs;

  std::string id() const;
  std::string json() const;
};

// On-disk record store:
//
//   <root>/turan/<family key>-n<n>.rec
//   <root>/ar/<F key>-n<n>-t<t>.rec
//   <root>/colorings/<digest>.col
//   <root>/manifests/<id>.json
//
// Writes go through a temporary and a rename. Every load re-verifies the
// certificate and throws VerificationError when it does not check out.
class Cache {
 public:
  explicit Cache(std::filesystem::path root);

  // $LAB_CACHE_DIR, or ./cache when unset or empty.
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path turan_file(int n, const std::string& family_key) const;
  std::filesystem::path ar_file(int n, int t, const std::string& f_key) const;

  std::optional<turan::TuranRecord> load_turan(int n, const HyperGraphFamily& family) const;
  // Keeps an existing record unless the new one is exact where the old one
  // was not, or a larger lower bound. Returns the record left on disk.
  turan::TuranRecord store_turan(const turan::TuranRecord& rec, const HyperGraphFamily& family) const;

  // All stored records of the family.
  turan::TuranTable turan_table(const HyperGraphFamily& family) const;

  std::optional<antiramsey::ArRecord> load_ar(int n, int t, const HyperGraph& f) const;
  antiramsey::ArRecord store_ar(const antiramsey::ArRecord& rec, const HyperGraph& f) const;

  std::filesystem::path store_coloring(const antiramsey::EdgeColoring& chi) const;
  std::filesystem::path store_manifest(const RunManifest& manifest) const;

 private:
  std::filesystem::path root_;
};

}  // namespace rainbow::lab
