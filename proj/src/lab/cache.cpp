#include "rainbow/lab/cache.hpp"

#include <cstdlib>

#include <json.hpp>

#include "rainbow/core/errors.hpp"
#include "rainbow/core/io.hpp"

namespace rainbow::lab {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

ordered_json stable_part(const RunManifest& m) {
  ordered_json j;
  j["command"] = m.command;
  ordered_json inputs = ordered_json::array();
  for (const auto& [path, digest] : m.inputs) inputs.push_back({{"path", path}, {"digest", digest}});
  j["inputs"] = inputs;
  j["solver"] = m.solver;
  return j;
}

std::string load_text(const fs::path& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw VerificationError("unreadable cache file " + path.string() + ": " + e.what());
  }
}

template <class Parse>
auto parse_cached(const fs::path& path, Parse parse) {
  try {
    return parse(load_text(path));
  } catch (const ParseError& e) {
    throw VerificationError("corrupt cache file " + path.string() + ": " + e.what());
  }
}

bool turan_better(const turan::TuranRecord& a, const turan::TuranRecord& b) {
  if (a.exact() != b.exact()) return a.exact();
  return !a.exact() && a.value > b.value;
}

bool ar_better(const antiramsey::ArRecord& a, const antiramsey::ArRecord& b) {
  if (a.exact() != b.exact()) return a.exact();
  return !a.exact() && a.lo > b.lo;
}

}  // namespace

std::string RunManifest::id() const { return short_digest(stable_part(*this).dump()); }

std::string RunManifest::json() const {
  ordered_json j = stable_part(*this);
  j["id"] = id();
  j["started"] = started;
  j["wall_seconds"] = wall_seconds;
  j["verdicts"] = verdicts;
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

Cache::Cache(fs::path root) : root_(std::move(root)) {}

fs::path Cache::default_root() {
  const char* env = std::getenv("LAB_CACHE_DIR");
  if (env != nullptr && *env != '\0') return fs::path(env);
  return fs::path("cache");
}

fs::path Cache::turan_file(int n, const std::string& family_key) const {
  return root_ / "turan" / (family_key + "-n" + std::to_string(n) + ".rec");
}

fs::path Cache::ar_file(int n, int t, const std::string& f_key) const {
  return root_ / "ar" / (f_key + "-n" + std::to_string(n) + "-t" + std::to_string(t) + ".rec");
}

std::optional<turan::TuranRecord> Cache::load_turan(int n, const HyperGraphFamily& family) const {
  const fs::path path = turan_file(n, family.key());
  if (!fs::exists(path)) return std::nullopt;
  turan::TuranRecord rec = parse_cached(path, turan::parse_turan_record);
  if (rec.n != n) throw VerificationError("cache file " + path.string() + " holds another n");
  turan::verify_record(rec, family);
  return rec;
}

turan::TuranRecord Cache::store_turan(const turan::TuranRecord& rec, const HyperGraphFamily& family) const {
  turan::verify_record(rec, family);
  if (auto old = load_turan(rec.n, family); old && !turan_better(rec, *old)) return *old;
  write_file_atomic(turan_file(rec.n, rec.family_key), turan::record_text(rec));
  return rec;
}

turan::TuranTable Cache::turan_table(const HyperGraphFamily& family) const {
  const std::string key = family.key();
  turan::TuranTable table(key);
  const fs::path dir = root_ / "turan";
  if (!fs::is_directory(dir)) return table;
  const std::string prefix = key + "-n";
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".rec") continue;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    if (auto rec = load_turan(std::stoi(digits), family)) table.add(*rec);
  }
  return table;
}

std::optional<antiramsey::ArRecord> Cache::load_ar(int n, int t, const HyperGraph& f) const {
  const fs::path path = ar_file(n, t, graph_key(f));
  if (!fs::exists(path)) return std::nullopt;
  antiramsey::ArRecord rec = parse_cached(path, antiramsey::parse_ar_record);
  if (rec.n != n || rec.t != t) throw VerificationError("cache file " + path.string() + " holds another (n, t)");
  antiramsey::verify_ar_record(rec, f);
  return rec;
}

antiramsey::ArRecord Cache::store_ar(const antiramsey::ArRecord& rec, const HyperGraph& f) const {
  antiramsey::verify_ar_record(rec, f);
  if (auto old = load_ar(rec.n, rec.t, f); old && !ar_better(rec, *old)) return *old;
  write_file_atomic(ar_file(rec.n, rec.t, rec.f_key), antiramsey::ar_record_text(rec));
  return rec;
}

fs::path Cache::store_coloring(const antiramsey::EdgeColoring& chi) const {
  const std::string text = antiramsey::coloring_text(chi);
  const fs::path path = root_ / "colorings" / (short_digest(text) + ".col");
  if (!fs::exists(path)) write_file_atomic(path, text);
  return path;
}

fs::path Cache::store_manifest(const RunManifest& manifest) const {
  const fs::path path = root_ / "manifests" / (manifest.id() + ".json");
  write_file_atomic(path, manifest.json());
  return path;
}

}  // namespace rainbow::lab
