#include "rainbow/lab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rainbow/antiramsey/ar_search.hpp"
#include "rainbow/antiramsey/constructions.hpp"
#include "rainbow/antiramsey/rainbow.hpp"
#include "rainbow/antiramsey/verify.hpp"
#include "rainbow/constructions/operators.hpp"
#include "rainbow/constructions/zoo.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/io.hpp"
#include "rainbow/lab/cache.hpp"
#include "rainbow/turan/checks.hpp"
#include "rainbow/turan/ex_search.hpp"

namespace rainbow::lab {

namespace fs = std::filesystem;
using antiramsey::ArRecord;
using antiramsey::EdgeColoring;
using turan::Rational;
using turan::TuranRecord;
using turan::TuranTable;

namespace {

struct NRange {
  int lo = 0;
  int hi = 0;
};

NRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument("bad n range '" + text + "'");
    }
    return std::stoi(s);
  };
  NRange out;
  if (colon == std::string::npos) {
    out.lo = out.hi = number(text);
  } else {
    out.lo = number(text.substr(0, colon));
    out.hi = number(text.substr(colon + 1));
  }
  if (out.lo > out.hi) throw InvalidArgument("empty n range '" + text + "'");
  return out;
}

std::string decimal(const Rational& q, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << q.convert_to<double>();
  return s.str();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool left = false) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      if (left && c + 1 == cells.size()) {
        out << cells[c];
      } else {
        out << (left ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << cells[c];
      }
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// State shared by every subcommand of one invocation.
class Lab {
 public:
  Lab(fs::path cache_root, std::ostream& out) : cache_(std::move(cache_root)), out_(out) {}

  int threads = 0;
  std::uint64_t budget = 0;
  bool canonical_aug = false;
  bool cache_only = false;

  RunManifest& manifest() { return manifest_; }
  const Cache& cache() const { return cache_; }
  std::ostream& out() { return out_; }

  HyperGraph read_input(const std::string& path) {
    const std::string text = read_file(path);
    manifest_.inputs.emplace_back(path, short_digest(text));
    return parse_hypergraph(text);
  }

  EdgeColoring read_coloring(const std::string& path) {
    const std::string text = read_file(path);
    manifest_.inputs.emplace_back(path, short_digest(text));
    return antiramsey::parse_coloring(text);
  }

  void output(const fs::path& path) { manifest_.outputs.push_back(path.string()); }
  void verdict(const std::string& v) { manifest_.verdicts.push_back(v); }

  TuranRecord turan_record(int n, const HyperGraphFamily& fam) {
    if (n < fam.uniformity()) throw InvalidArgument("n is smaller than the uniformity");
    auto cached = cache_.load_turan(n, fam);
    if (cached && (cached->exact() || cache_only)) return *cached;
    if (cache_only) throw MissingRecord("no cached record for ex(" + std::to_string(n) + ", " + fam.key() + ")");
    turan::SearchOptions o;
    o.budget = budget;
    o.threads = threads;
    o.canonical_augmentation = canonical_aug;
    TuranRecord rec = turan::ex_exact(n, fam, o);
    rec.manifest = manifest_.id();
    rec = cache_.store_turan(rec, fam);
    output(cache_.turan_file(n, fam.key()));
    return rec;
  }

  TuranRecord exact_turan(int n, const HyperGraphFamily& fam) {
    TuranRecord rec = turan_record(n, fam);
    if (!rec.exact()) {
      throw MissingRecord("ex(" + std::to_string(n) + ", " + fam.key() + ") is only a lower bound; raise --budget");
    }
    return rec;
  }

  // Exact records for every k in [max(lo, r), hi].
  TuranTable table(const HyperGraphFamily& fam, int lo, int hi) {
    TuranTable t(fam.key());
    for (int k = std::max(lo, fam.uniformity()); k <= hi; ++k) t.add(exact_turan(k, fam));
    return t;
  }

  ArRecord ar_record(int n, int t, const HyperGraph& f) {
    auto cached = cache_.load_ar(n, t, f);
    if (cached && (cached->exact() || cache_only)) return *cached;
    if (cache_only) {
      throw MissingRecord("no cached record for ar(" + std::to_string(n) + ", " + std::to_string(t) + "F)");
    }
    antiramsey::ArOptions o;
    o.budget = budget;
    o.threads = threads;
    ArRecord rec = antiramsey::ar_exact(n, t, f, o);
    rec.manifest = manifest_.id();
    rec = cache_.store_ar(rec, f);
    output(cache_.ar_file(n, t, rec.f_key));
    return rec;
  }

  ArRecord exact_ar(int n, int t, const HyperGraph& f) {
    ArRecord rec = ar_record(n, t, f);
    if (!rec.exact()) {
      throw MissingRecord("ar(" + std::to_string(n) + ", " + std::to_string(t) + "F) is only bounded; raise --budget");
    }
    return rec;
  }

  turan::GapReport gap(const HyperGraph& f, int n) {
    const HyperGraphFamily fam = HyperGraphFamily::single(f);
    const HyperGraphFamily sums = constructions::with_edge_sums(f);
    TuranTable f_table(fam.key()), sum_table(sums.key());
    f_table.add(exact_turan(n, fam));
    const bool edgeless = std::any_of(sums.members().begin(), sums.members().end(),
                                      [&](const HyperGraph& m) { return m.empty() && m.order() <= n; });
    if (!edgeless) sum_table.add(exact_turan(n, sums));
    return turan::edge_sensitivity_gap(f, n, f_table, sum_table);
  }

 private:
  Cache cache_;
  RunManifest manifest_;
  std::ostream& out_;
};

HyperGraphFamily tiling(const HyperGraph& f, int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  return HyperGraphFamily::single(disjoint_union(f, t));
}

std::string record_line(const TuranRecord& rec) {
  return "ex(" + std::to_string(rec.n) + ") = " + std::to_string(rec.value) + " [" +
         std::string(turan::status_name(rec.status)) + "]";
}

std::string ar_line(const ArRecord& rec) {
  std::string s = "ar(" + std::to_string(rec.n) + ", " + std::to_string(rec.t) + "F) = ";
  if (rec.exact()) return s + std::to_string(rec.value) + " [exact]";
  return s + "[" + std::to_string(rec.lo) + ", " + std::to_string(rec.hi) + "] [bounds]";
}

// ---- zoo ----

int zoo_list(Lab& lab) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : constructions::zoo_catalog()) {
    std::string params;
    for (const auto& p : e.param_names) params += (params.empty() ? "" : " ") + p;
    rows.push_back({e.name, params, e.description});
  }
  print_table(lab.out(), {"name", "params", "description"}, rows, true);
  return kOk;
}

int zoo_emit(Lab& lab, const std::string& name, const std::vector<int>& params, const std::string& out_path) {
  const HyperGraph h = constructions::zoo(constructions::parse_zoo_id(name, params));
  if (out_path.empty()) {
    lab.out() << to_text(h);
  } else {
    write_hypergraph(out_path, h);
    lab.output(out_path);
    lab.out() << describe(h) << " -> " << out_path << '\n';
  }
  return kOk;
}

// ---- turan / ar ----

int turan_cmd(Lab& lab, const std::vector<std::string>& files, const std::string& range) {
  std::vector<HyperGraph> members;
  for (const auto& path : files) members.push_back(lab.read_input(path));
  const int r = members.front().uniformity();
  for (const auto& m : members) {
    if (m.uniformity() != r) throw InvalidArgument("forbidden graphs have different uniformities");
  }
  const HyperGraphFamily fam(r, members);
  const NRange nr = parse_range(range);
  lab.out() << "family " << fam.key() << " (" << fam.size() << " member(s), r = " << r << ")\n";
  for (int n = nr.lo; n <= nr.hi; ++n) {
    const TuranRecord rec = lab.turan_record(n, fam);
    lab.out() << record_line(rec) << "  " << lab.cache().turan_file(n, fam.key()).string() << '\n';
    lab.verdict(record_line(rec));
  }
  const auto bad = turan::table_violations(lab.cache().turan_table(fam), r);
  for (const auto& v : bad) {
    lab.out() << "VIOLATION " << v << '\n';
    lab.verdict("violation: " + v);
  }
  return bad.empty() ? kOk : kViolation;
}

int ar_cmd(Lab& lab, int n, int t, const std::string& f_path) {
  const HyperGraph f = lab.read_input(f_path);
  const ArRecord rec = lab.ar_record(n, t, f);
  lab.out() << ar_line(rec) << "  " << lab.cache().ar_file(n, t, rec.f_key).string() << '\n';
  lab.verdict(ar_line(rec));
  return kOk;
}

// ---- construct ----

int certify(Lab& lab, const EdgeColoring& chi, const HyperGraph& target, int tiles, const std::string& out_path) {
  const fs::path stored = lab.cache().store_coloring(chi);
  lab.output(stored);
  if (!out_path.empty()) {
    write_file_atomic(out_path, antiramsey::coloring_text(chi));
    lab.output(out_path);
  }
  lab.out() << "coloring with " << chi.color_count() << " colors -> " << stored.string() << '\n';
  const std::string what = "rainbow " + std::to_string(tiles) + "F";
  if (target.order() > chi.order()) {
    lab.out() << what << " does not fit on " << chi.order() << " vertices: certified vacuously\n";
    lab.verdict("certified (vacuous)");
  } else if (antiramsey::find_rainbow_copy(chi, target)) {
    lab.out() << "FAIL: the coloring contains a " << what << '\n';
    lab.verdict("fail");
    return kViolation;
  } else {
    lab.out() << "certified: no " << what << '\n';
    lab.verdict("certified");
  }
  lab.out() << "ar(" << chi.order() << ", " << tiles << "F) >= " << chi.color_count() + 1 << '\n';
  return kOk;
}

int construct_extremal(Lab& lab, int n, int t, const std::string& f_path, const std::string& out_path) {
  const HyperGraph f = lab.read_input(f_path);
  const TuranRecord ex = lab.exact_turan(n, tiling(f, t));
  const EdgeColoring chi = antiramsey::build_coloring_fact21(n, t, f, ex);
  lab.out() << "ex(" << n << ", " << t << "F) = " << ex.value << '\n';
  return certify(lab, chi, disjoint_union(f, t + 1), t + 1, out_path);
}

int construct_padded(Lab& lab, int n, int t, const std::string& f_path, const std::string& inner_path,
                     const std::string& out_path) {
  const HyperGraph f = lab.read_input(f_path);
  if (t < 0 || t >= n) throw InvalidArgument("need 0 <= t < n");
  EdgeColoring inner = EdgeColoring::constant(1, 1);
  if (!inner_path.empty()) {
    inner = lab.read_coloring(inner_path);
  } else {
    const ArRecord rec = lab.ar_record(n - t, 2, f);
    if (!rec.witness) throw MissingRecord("ar(n-t, 2F) has no witness coloring");
    inner = *rec.witness;
    lab.out() << "inner: " << ar_line(rec) << '\n';
  }
  const EdgeColoring chi = antiramsey::build_coloring_fact31(n, t, f, inner);
  lab.out() << "crossing edges: " << binomial(n, f.uniformity()) - binomial(n - t, f.uniformity()) << '\n';
  return certify(lab, chi, disjoint_union(f, t + 2), t + 2, out_path);
}

// ---- verify ----

int verify_sandwich(Lab& lab, int n, int t, const std::string& f_path) {
  const HyperGraph f = lab.read_input(f_path);
  const ArRecord ar = lab.exact_ar(n, t, f);
  std::optional<int> below;
  if (t > 1) below = lab.exact_turan(n, tiling(f, t - 1)).value;
  const int at = lab.exact_turan(n, tiling(f, t)).value;
  const antiramsey::SandwichReport rep = antiramsey::check_sandwich(ar, below, at);
  auto& out = lab.out();
  out << "ar(" << n << ", " << t << "F) = " << rep.ar << '\n';
  if (rep.ex_below) {
    out << "lower: ex(" << n << ", " << t - 1 << "F) + 2 = " << *rep.ex_below + 2 << " <= " << rep.ar << "  "
        << (rep.lower ? "holds" : "FAILS") << '\n';
  } else {
    out << "lower: vacuous for t = 1\n";
  }
  out << "upper: " << rep.ar << " <= ex(" << n << ", " << t << "F) + 1 = " << rep.ex_at + 1 << "  "
      << (rep.upper ? "holds" : "FAILS") << '\n';
  lab.verdict(rep.holds() ? "sandwich holds" : "sandwich fails");
  return rep.holds() ? kOk : kViolation;
}

int verify_identity(Lab& lab, int n, int t, const std::string& f_path) {
  const HyperGraph f = lab.read_input(f_path);
  if (t < 1) throw InvalidArgument("t must be at least 1");
  const ArRecord ar = lab.exact_ar(n, t + 1, f);
  const HyperGraphFamily tf = tiling(f, t);
  TuranTable table(tf.key());
  table.add(lab.exact_turan(n, tf));
  const turan::GapReport gap = lab.gap(f, n);
  const antiramsey::IdentityReport rep = antiramsey::verify_identity_thm15(n, t, f, ar, table, gap);
  auto& out = lab.out();
  out << "ar(" << n << ", " << t + 1 << "F) = " << rep.ar << ", ex(" << n << ", " << t << "F) + 2 = " << rep.ex + 2
      << '\n';
  out << "gap = " << gap.gap << ", threshold = " << gap.threshold << ", t_max = " << gap.t_max << '\n';
  out << "identity: " << (rep.identity ? "equal" : "differs") << ", lower bound: "
      << (rep.lower_bound ? "holds" : "FAILS") << '\n';
  out << "verdict: " << antiramsey::identity_verdict_name(rep.verdict) << '\n';
  lab.verdict(std::string(antiramsey::identity_verdict_name(rep.verdict)));
  return rep.violation() ? kViolation : kOk;
}

int verify_reduction(Lab& lab, int n, int t, const std::string& f_path) {
  const HyperGraph f = lab.read_input(f_path);
  if (t < 0 || t >= n) throw InvalidArgument("need 0 <= t < n");
  const ArRecord big = lab.exact_ar(n, t + 2, f);
  const ArRecord small = lab.exact_ar(n - t, 2, f);
  const antiramsey::ReductionReport rep = antiramsey::check_reduction(big, small, f.uniformity());
  lab.out() << "ar(" << n << ", " << t + 2 << "F) = " << rep.ar_big << " >= " << rep.crossing << " + ar(" << n - t
            << ", 2F) = " << rep.crossing + static_cast<std::uint64_t>(rep.ar_small) << "  "
            << (rep.holds ? "holds" : "FAILS") << '\n';
  lab.verdict(rep.holds ? "reduction holds" : "reduction fails");
  return rep.holds ? kOk : kViolation;
}

// ---- report / derived ----

int report_gap(Lab& lab, const std::string& f_path, const std::string& range) {
  const HyperGraph f = lab.read_input(f_path);
  const NRange nr = parse_range(range);
  std::vector<std::vector<std::string>> rows;
  for (int n = std::max(nr.lo, f.uniformity()); n <= nr.hi; ++n) {
    const turan::GapReport g = lab.gap(f, n);
    rows.push_back({std::to_string(n), std::to_string(g.gap), std::to_string(g.threshold), std::to_string(g.t_max)});
  }
  print_table(lab.out(), {"n", "gap", "threshold", "t_max"}, rows);
  return kOk;
}

Rational pi_option(const std::string& text, const TuranTable& table, int r) {
  return text.empty() ? turan::default_pi(table, r) : turan::parse_rational(text);
}

int report_smooth(Lab& lab, const std::string& f_path, const std::string& range, const std::string& pi_text) {
  const HyperGraph f = lab.read_input(f_path);
  const NRange nr = parse_range(range);
  const int r = f.uniformity();
  const int lo = std::max(nr.lo, r + 1);
  const TuranTable table = lab.table(HyperGraphFamily::single(f), lo - 1, nr.hi);
  turan::CheckParams params;
  params.pi = pi_option(pi_text, table, r);
  params.m = f.order();
  params.validate();
  const turan::SmoothnessReport rep = turan::smoothness_check(f, params, table, lo, nr.hi);
  lab.out() << "pi = " << turan::to_string(params.pi) << (rep.degenerate ? " (r-partite F: smooth by convention)" : "")
            << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rep.rows) {
    rows.push_back({std::to_string(row.n), turan::to_string(row.check.lhs), decimal(row.check.rhs),
                    yes_no(row.check.holds)});
  }
  print_table(lab.out(), {"n", "|delta(n) - d(n-1)|", "bound", "within"}, rows);
  return kOk;
}

int report_facts(Lab& lab, const std::string& f_path, const std::string& range, const std::string& pi_text) {
  const HyperGraph f = lab.read_input(f_path);
  const NRange nr = parse_range(range);
  const int r = f.uniformity();
  bool violated = false;

  std::vector<std::vector<std::string>> rows;
  for (int n = std::max(nr.lo, r); n <= nr.hi; ++n) {
    for (int t = 0; t * (5 * r + 1) <= n - r; ++t) {
      const turan::Fact51Result res = turan::fact51_check(n, t, r);
      violated |= res.verdict == turan::Verdict::Fails;
      rows.push_back({std::to_string(n), std::to_string(t), turan::to_string(res.lhs),
                      "[" + decimal(res.rhs_lo) + ", " + decimal(res.rhs_hi) + "]",
                      std::string(turan::verdict_name(res.verdict))});
    }
  }
  lab.out() << "C(n-t, r) >= e^(-1/5) C(n, r), r = " << r << '\n';
  print_table(lab.out(), {"n", "t", "C(n-t,r)", "e^(-1/5) C(n,r)", "verdict"}, rows);

  const TuranTable table = lab.table(HyperGraphFamily::single(f), r, nr.hi);
  rows.clear();
  for (int n = std::max(nr.lo, r); n <= nr.hi; ++n) {
    for (int t = 0; r * (t + 1) <= n; ++t) {
      const turan::Inequality q = turan::fact52_check(f, n, t, table);
      violated |= !q.holds;
      rows.push_back({std::to_string(n), std::to_string(t), turan::to_string(q.lhs), turan::to_string(q.rhs),
                      q.holds ? "holds" : "FAILS"});
    }
  }
  lab.out() << "\n|d(n) - d(n-t)| <= 4t C(n-t, r-2)\n";
  print_table(lab.out(), {"n", "t", "lhs", "rhs", "verdict"}, rows);

  const Rational pi = pi_option(pi_text, table, r);
  rows.clear();
  for (int n = std::max(nr.lo, r); n <= nr.hi; ++n) {
    for (int t = 1; r * (t + 1) <= n; ++t) {
      const turan::Inequality q = turan::lemma53_report(f, n, t, table, pi);
      rows.push_back({std::to_string(n), std::to_string(t), turan::to_string(q.lhs), decimal(q.rhs),
                      yes_no(q.holds)});
    }
  }
  lab.out() << "\n|ex(n) - ex(n-t) - t d(n)| vs ((1-pi)/(8m) t + 4(r-1) t^2/n) C(n, r-1), pi = "
            << turan::to_string(pi) << " (report only)\n";
  print_table(lab.out(), {"n", "t", "lhs", "rhs", "within"}, rows);
  lab.verdict(violated ? "violation" : "all unconditional checks hold");
  return violated ? kViolation : kOk;
}

int report_census(Lab& lab, const std::string& h_path, const std::string& f_path, const std::string& pi_text) {
  const HyperGraph h = lab.read_input(h_path);
  const HyperGraph f = lab.read_input(f_path);
  const int n = h.order();
  const TuranTable table = lab.table(HyperGraphFamily::single(f), n, n);
  const Rational pi = pi_option(pi_text, table, f.uniformity());
  const antiramsey::Census c = antiramsey::stability_degree_census(h, f, pi, table);
  lab.out() << "threshold = " << turan::to_string(c.threshold) << " (" << decimal(c.threshold) << ")\n";
  lab.out() << "high-degree vertices (" << c.high.size() << "):";
  for (Vertex v : c.high) lab.out() << ' ' << v;
  lab.out() << '\n';
  return kOk;
}

int report_bounded(Lab& lab, const std::string& f_path, int n, const std::string& c1, const std::string& c2,
                   const std::string& pi_text, int samples, std::uint64_t seed) {
  const HyperGraph f = lab.read_input(f_path);
  const TuranTable table = lab.table(HyperGraphFamily::single(f), n, n);
  turan::CheckParams params;
  params.c1 = turan::parse_rational(c1);
  params.c2 = turan::parse_rational(c2);
  params.pi = pi_option(pi_text, table, f.uniformity());
  params.m = f.order();
  params.validate();
  const auto hits = turan::boundedness_falsifier(f, params, n, table, samples, seed);
  lab.out() << "F-free graphs meeting both premises: " << hits.size() << '\n';
  for (const auto& g : hits) lab.out() << to_text(g);
  return kOk;
}

int derived_cmd(Lab& lab, const std::string& f_path, const std::string& range) {
  const HyperGraph f = lab.read_input(f_path);
  const NRange nr = parse_range(range);
  const int r = f.uniformity();
  const int lo = std::max(nr.lo, r + 1);
  const HyperGraphFamily fam = HyperGraphFamily::single(f);
  const TuranTable table = lab.table(fam, lo - 1, nr.hi);
  std::vector<std::vector<std::string>> rows;
  for (int n = lo; n <= nr.hi; ++n) {
    const turan::DerivedQuantities q = turan::derived_quantities(f, table, n);
    rows.push_back({std::to_string(n), std::to_string(table.exact(n)), turan::to_string(q.delta_n),
                    turan::to_string(q.d_n), turan::to_string(q.pi_hat), decimal(q.pi_hat, 4)});
  }
  print_table(lab.out(), {"n", "ex", "delta", "d", "pi_hat", "~"}, rows);
  const auto bad = turan::table_violations(table, r);
  for (const auto& v : bad) lab.out() << "VIOLATION " << v << '\n';
  return bad.empty() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Turan and anti-Ramsey computations with cached, re-verified certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  int threads = 0;
  std::string cache_dir;
  app.add_option("--threads", threads, "Cap on worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", cache_dir, "Cache root (default $LAB_CACHE_DIR or ./cache)");

  std::function<int(Lab&)> action;
  bool writes_manifest = true;

  std::uint64_t budget = 0;
  bool cache_only = false;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Search node budget per record (0 = unlimited)");
  };
  auto add_cache_only = [&](CLI::App* sub) {
    sub->add_flag("--cache-only", cache_only, "Use cached records only; never search");
  };

  // zoo
  CLI::App* zoo = app.add_subcommand("zoo", "Named hypergraphs");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "List the catalog")->callback([&] {
    writes_manifest = false;
    action = zoo_list;
  });
  std::string zoo_name, out_path;
  std::vector<int> zoo_params;
  CLI::App* emit = zoo->add_subcommand("emit", "Write a named hypergraph in the text format");
  emit->add_option("name", zoo_name, "Catalog name")->required();
  emit->add_option("params", zoo_params, "Integer parameters");
  emit->add_option("-o,--output", out_path, "Output file (default stdout)");
  emit->callback([&] {
    writes_manifest = !out_path.empty();
    action = [&](Lab& lab) { return zoo_emit(lab, zoo_name, zoo_params, out_path); };
  });

  // turan
  std::string n_range;
  std::vector<std::string> forbid;
  bool canonical_aug = false;
  CLI::App* tur = app.add_subcommand("turan", "Exact ex(n, family) by branch and bound");
  tur->add_option("-n", n_range, "n or a:b")->required();
  tur->add_option("--forbid", forbid, "Forbidden hypergraph files")->required()->expected(1, -1);
  tur->add_flag("--canonical-aug", canonical_aug, "Prune isomorphic prefixes by canonical labels");
  add_budget(tur);
  tur->callback([&] { action = [&](Lab& lab) { return turan_cmd(lab, forbid, n_range); }; });

  // ar
  int n = 0, t = 0;
  std::string f_path;
  CLI::App* ar = app.add_subcommand("ar", "Exact ar(n, tF) by set-partition search");
  ar->add_option("-n", n, "Host order")->required();
  ar->add_option("-t", t, "Number of disjoint copies")->required();
  ar->add_option("-F", f_path, "Hypergraph file for F")->required();
  add_budget(ar);
  ar->callback([&] { action = [&](Lab& lab) { return ar_cmd(lab, n, t, f_path); }; });

  // construct
  std::string inner_path;
  CLI::App* construct = app.add_subcommand("construct", "Lower-bound colorings, certified by exhaustive search");
  construct->require_subcommand(1);
  CLI::App* c21 = construct->add_subcommand("fact21", "Rainbow extremal tF-free graph, one extra color elsewhere");
  CLI::App* c31 = construct->add_subcommand("fact31", "Inner coloring of K_{n-t} plus fresh colors on the rest");
  for (CLI::App* sub : {c21, c31}) {
    sub->add_option("-n", n, "Host order")->required();
    sub->add_option("-t", t, "t")->required();
    sub->add_option("-F", f_path, "Hypergraph file for F")->required();
    sub->add_option("-o,--output", out_path, "Also write the coloring here");
    add_budget(sub);
    add_cache_only(sub);
  }
  c31->add_option("--inner", inner_path, "Coloring of K_{n-t} (default: the ar(n-t, 2F) witness)");
  c21->callback([&] { action = [&](Lab& lab) { return construct_extremal(lab, n, t, f_path, out_path); }; });
  c31->callback(
      [&] { action = [&](Lab& lab) { return construct_padded(lab, n, t, f_path, inner_path, out_path); }; });

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Check identities and inequalities on exact records");
  verify->require_subcommand(1);
  CLI::App* v_id = verify->add_subcommand("identity", "ar(n,(t+1)F) = ex(n,tF) + 2 inside the gap range");
  CLI::App* v_sw = verify->add_subcommand("sandwich", "ex(n,(t-1)F) + 2 <= ar(n,tF) <= ex(n,tF) + 1");
  CLI::App* v_red = verify->add_subcommand("reduction", "ar(n,(t+2)F) >= C(n,r) - C(n-t,r) + ar(n-t,2F)");
  for (CLI::App* sub : {v_id, v_sw, v_red}) {
    sub->add_option("-n", n, "Host order")->required();
    sub->add_option("-t", t, "t")->required();
    sub->add_option("-F", f_path, "Hypergraph file for F")->required();
    add_budget(sub);
    add_cache_only(sub);
  }
  v_id->callback([&] { action = [&](Lab& lab) { return verify_identity(lab, n, t, f_path); }; });
  v_sw->callback([&] { action = [&](Lab& lab) { return verify_sandwich(lab, n, t, f_path); }; });
  v_red->callback([&] { action = [&](Lab& lab) { return verify_reduction(lab, n, t, f_path); }; });

  // report
  std::string pi_text, h_path, c1 = "0", c2 = "1";
  int samples = 20;
  std::uint64_t seed = 1;
  CLI::App* report = app.add_subcommand("report", "Per-n tables");
  report->require_subcommand(1);
  CLI::App* r_gap = report->add_subcommand("gap", "Edge-sensitivity gap and t_max");
  CLI::App* r_smooth = report->add_subcommand("smooth", "Smoothness inequality per n");
  CLI::App* r_facts = report->add_subcommand("facts", "Binomial and degree inequalities per (n, t)");
  for (CLI::App* sub : {r_gap, r_smooth, r_facts}) {
    sub->add_option("-F", f_path, "Hypergraph file for F")->required();
    sub->add_option("--n-range", n_range, "a:b")->required();
    add_budget(sub);
    add_cache_only(sub);
  }
  for (CLI::App* sub : {r_smooth, r_facts}) sub->add_option("--pi", pi_text, "pi(F) (default pi_hat at largest n)");
  CLI::App* r_census = report->add_subcommand("census", "High-degree vertices of a host graph");
  r_census->add_option("-H", h_path, "Host hypergraph file")->required();
  r_census->add_option("-F", f_path, "Hypergraph file for F")->required();
  r_census->add_option("--pi", pi_text, "pi(F) (default pi_hat at n)");
  CLI::App* r_bounded = report->add_subcommand("bounded", "Search for F-free graphs meeting the boundedness premises");
  r_bounded->add_option("-F", f_path, "Hypergraph file for F")->required();
  r_bounded->add_option("-n", n, "Host order")->required();
  r_bounded->add_option("--c1", c1, "Degree excess coefficient");
  r_bounded->add_option("--c2", c2, "Size deficit coefficient");
  r_bounded->add_option("--pi", pi_text, "pi(F) (default pi_hat at n)");
  r_bounded->add_option("--samples", samples, "Random restarts")->check(CLI::PositiveNumber);
  r_bounded->add_option("--seed", seed, "Random seed");
  for (CLI::App* sub : {r_census, r_bounded}) {
    add_budget(sub);
    add_cache_only(sub);
  }
  r_gap->callback([&] { action = [&](Lab& lab) { return report_gap(lab, f_path, n_range); }; });
  r_smooth->callback([&] { action = [&](Lab& lab) { return report_smooth(lab, f_path, n_range, pi_text); }; });
  r_facts->callback([&] { action = [&](Lab& lab) { return report_facts(lab, f_path, n_range, pi_text); }; });
  r_census->callback([&] { action = [&](Lab& lab) { return report_census(lab, h_path, f_path, pi_text); }; });
  r_bounded->callback([&] {
    action = [&](Lab& lab) { return report_bounded(lab, f_path, n, c1, c2, pi_text, samples, seed); };
  });

  // derived
  CLI::App* derived = app.add_subcommand("derived", "ex, delta(n), d(n) and pi_hat per n");
  derived->add_option("-F", f_path, "Hypergraph file for F")->required();
  derived->add_option("--n-range", n_range, "a:b")->required();
  add_budget(derived);
  add_cache_only(derived);
  derived->callback([&] { action = [&](Lab& lab) { return derived_cmd(lab, f_path, n_range); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Lab lab(cache_dir.empty() ? Cache::default_root() : fs::path(cache_dir), out);
  lab.threads = threads;
  lab.budget = budget;
  lab.canonical_aug = canonical_aug;
  lab.cache_only = cache_only;
  RunManifest& manifest = lab.manifest();
  manifest.command.push_back("lab");
  manifest.command.insert(manifest.command.end(), args.begin(), args.end());
  manifest.solver = std::string(turan::kSolverVersion) + " " + std::string(antiramsey::kArSolverVersion);
  manifest.started = utc_now();
  const auto start = std::chrono::steady_clock::now();

  int code = kOk;
  try {
    code = action(lab);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    manifest.verdicts.push_back(std::string("verification failed: ") + e.what());
    code = kViolation;
  } catch (const MissingRecord& e) {
    err << "insufficient records: " << e.what() << '\n';
    code = kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kBadInput;
  }

  if (writes_manifest && (!manifest.outputs.empty() || !manifest.verdicts.empty())) {
    manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
      lab.cache().store_manifest(manifest);
    } catch (const std::exception& e) {
      err << "cannot write manifest: " << e.what() << '\n';
      if (code == kOk) code = kBadInput;
    }
  }
  return code;
}

}  // namespace rainbow::lab
