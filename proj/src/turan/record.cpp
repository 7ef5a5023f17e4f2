#include "rainbow/turan/record.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "rainbow/core/embedding.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/io.hpp"

namespace rainbow::turan {

namespace {

std::string_view field(std::string_view token, std::string_view name) {
  if (token.size() <= name.size() + 1 || token.substr(0, name.size()) != name || token[name.size()] != '=') {
    throw ParseError("expected field '" + std::string(name) + "=' in TURAN header");
  }
  return token.substr(name.size() + 1);
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
    throw ParseError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    out.push_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::string_view status_name(RecordStatus s) {
  return s == RecordStatus::Exact ? "exact" : "lower_bound_only";
}

RecordStatus parse_status(std::string_view name) {
  if (name == "exact") return RecordStatus::Exact;
  if (name == "lower_bound_only") return RecordStatus::LowerBoundOnly;
  throw ParseError("unknown status '" + std::string(name) + "'");
}

std::string record_text(const TuranRecord& rec) {
  std::ostringstream out;
  out << "TURAN n=" << rec.n << " fam=" << rec.family_key << " value=" << rec.value
      << " status=" << status_name(rec.status) << " solver=" << rec.solver << " manifest=" << rec.manifest << '\n'
      << to_text(rec.witness);
  return out.str();
}

TuranRecord parse_turan_record(std::string_view text) {
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw ParseError("missing TURAN header line");
  const auto tokens = split_spaces(text.substr(0, eol));
  if (tokens.size() != 7 || tokens[0] != "TURAN") throw ParseError("malformed TURAN header");
  TuranRecord rec;
  rec.n = parse_int(field(tokens[1], "n"));
  rec.family_key = std::string(field(tokens[2], "fam"));
  rec.value = parse_int(field(tokens[3], "value"));
  rec.status = parse_status(field(tokens[4], "status"));
  rec.solver = std::string(field(tokens[5], "solver"));
  rec.manifest = std::string(field(tokens[6], "manifest"));
  rec.witness = parse_hypergraph(text.substr(eol + 1));
  if (rec.witness.order() != rec.n) throw ParseError("witness order differs from n");
  return rec;
}

void verify_record(const TuranRecord& rec, const HyperGraphFamily& family) {
  if (rec.family_key != family.key()) throw VerificationError("record belongs to another family");
  if (rec.witness.order() != rec.n || rec.witness.uniformity() != family.uniformity()) {
    throw VerificationError("witness has the wrong shape");
  }
  if (static_cast<int>(rec.witness.size()) != rec.value) {
    throw VerificationError("witness edge count differs from the recorded value");
  }
  if (rec.value > static_cast<int>(binomial(rec.n, family.uniformity()))) {
    throw VerificationError("value exceeds C(n, r)");
  }
  if (contains_member(rec.witness, family)) throw VerificationError("witness contains a forbidden member");
}

void TuranTable::add(TuranRecord rec) {
  if (!key_.empty() && rec.family_key != key_) throw InvalidArgument("record belongs to another family");
  if (key_.empty()) key_ = rec.family_key;
  const int n = rec.n;
  records_.insert_or_assign(n, std::move(rec));
}

const TuranRecord* TuranTable::find(int n) const {
  auto it = records_.find(n);
  return it == records_.end() ? nullptr : &it->second;
}

int TuranTable::exact(int n) const {
  const TuranRecord* rec = find(n);
  if (rec == nullptr) throw MissingRecord("no Turan record at n=" + std::to_string(n));
  if (!rec->exact()) throw MissingRecord("Turan record at n=" + std::to_string(n) + " is only a lower bound");
  return rec->value;
}

}  // namespace rainbow::turan
