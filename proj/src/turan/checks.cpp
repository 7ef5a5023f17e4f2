#include "rainbow/turan/checks.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "rainbow/constructions/operators.hpp"
#include "rainbow/core/copy_table.hpp"
#include "rainbow/core/embedding.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/family.hpp"

namespace rainbow::turan {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational e_fifth_lo() { return Rational(Integer(12214027), Integer(10000000)); }
Rational e_fifth_hi() { return Rational(Integer(12214028), Integer(10000000)); }

Inequality compare(Rational lhs, Rational rhs) {
  Inequality out{std::move(lhs), std::move(rhs), false};
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
  try {
    const std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    }
    const std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Rational(Integer(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw std::runtime_error("");
    std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer denom = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
    Rational magnitude = Rational(abs(Integer(whole))) + Rational(Integer(frac), denom);
    return negative ? Rational(-magnitude) : magnitude;
  } catch (const std::exception&) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
}

Rational binomial_q(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return Rational(out);
}

int ex_value(const TuranTable& table, int k, int r) { return k < r ? 0 : table.exact(k); }

Rational average_degree(const TuranTable& table, int n, int r) {
  if (n <= 0) return 0;
  return Rational(Integer(r) * ex_value(table, n, r), Integer(n));
}

DerivedQuantities derived_quantities(const HyperGraph& f, const TuranTable& table, int n) {
  const int r = f.uniformity();
  if (n < r) throw InvalidArgument("derived quantities need n >= r");
  DerivedQuantities out;
  out.n = n;
  const int now = table.exact(n);
  out.delta_n = Rational(now - ex_value(table, n - 1, r));
  out.d_n = average_degree(table, n, r);
  out.pi_hat = Rational(now) / binomial_q(n, r);
  return out;
}

Rational default_pi(const TuranTable& table, int r) {
  for (auto it = table.records().rbegin(); it != table.records().rend(); ++it) {
    if (it->second.exact() && it->first >= r) return Rational(it->second.value) / binomial_q(it->first, r);
  }
  throw MissingRecord("no exact record to estimate the density from");
}

void CheckParams::validate() const {
  if (c1 < 0) throw InvalidArgument("c1 must be >= 0");
  if (c2 <= 0) throw InvalidArgument("c2 must be > 0");
  if (pi < 0 || pi > 1) throw InvalidArgument("pi must lie in [0, 1]");
  if (m < 1) throw InvalidArgument("m = v(F) must be positive");
}

SmoothnessReport smoothness_check(const HyperGraph& f, const CheckParams& params, const TuranTable& table, int n_lo,
                                  int n_hi) {
  params.validate();
  const int r = f.uniformity();
  SmoothnessReport report;
  report.degenerate = is_r_partite(f);
  const Rational coeff = (Rational(1) - params.pi) / (8 * params.m);
  for (int n = std::max(n_lo, r); n <= n_hi; ++n) {
    const Rational delta = Rational(table.exact(n) - ex_value(table, n - 1, r));
    const Rational lhs = abs_q(delta - average_degree(table, n - 1, r));
    report.rows.push_back({n, compare(lhs, coeff * binomial_q(n, r - 1))});
  }
  return report;
}

std::vector<HyperGraph> boundedness_falsifier(const HyperGraph& f, const CheckParams& params, int n,
                                              const TuranTable& table, int samples, std::uint64_t seed) {
  params.validate();
  const int r = f.uniformity();
  const int ex = table.exact(n);
  const Rational degree_floor = average_degree(table, n, r) + params.c1 * binomial_q(n - 1, r - 1);
  const Rational size_floor = (Rational(1) - params.c2) * ex;

  const HyperGraphFamily family = HyperGraphFamily::single(f);
  const CopyTable copies(n, family);
  const int edges = copies.edge_count();

  auto blocked_by = [&](EdgeBits chosen) {
    EdgeBits blocked = 0;
    for (EdgeBits c : copies.copies()) {
      const EdgeBits missing = c & ~chosen;
      if (std::popcount(missing) <= 1) blocked |= missing;
    }
    return blocked;
  };
  auto fill = [&](EdgeBits chosen, const std::vector<int>& order) {
    EdgeBits blocked = blocked_by(chosen);
    for (int i : order) {
      if ((chosen | blocked) & edge_bit(i)) continue;
      chosen |= edge_bit(i);
      for (EdgeBits c : copies.containing(i)) {
        const EdgeBits missing = c & ~chosen;
        if (std::popcount(missing) == 1) blocked |= missing;
      }
    }
    return chosen;
  };

  std::vector<HyperGraph> hits;
  HyperGraphFamily seen(r);
  auto consider = [&](const HyperGraph& h) {
    if (Rational(h.max_degree()) < degree_floor || Rational(static_cast<int>(h.size())) < size_floor) return;
    if (contains_member(h, family)) return;
    if (seen.insert(h)) hits.push_back(h);
  };

  if (const TuranRecord* rec = table.find(n); rec != nullptr) consider(rec->witness);

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vertex hub = static_cast<Vertex>(s % n);
    std::vector<int> at_hub, rest;
    for (int i = 0; i < edges; ++i) ((copies.edge(i) >> hub) & 1U ? at_hub : rest).push_back(i);
    std::shuffle(at_hub.begin(), at_hub.end(), rng);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> order = at_hub;
    order.insert(order.end(), rest.begin(), rest.end());
    EdgeBits h = fill(0, order);
    consider(copies.to_graph(h));

    // Local moves: drop an edge away from the hub, then refill hub edges first.
    for (int step = 0; step < 2 * edges; ++step) {
      std::vector<int> away;
      for (EdgeBits b = h; b != 0; b &= b - 1) {
        const int i = std::countr_zero(b);
        if (!((copies.edge(i) >> hub) & 1U)) away.push_back(i);
      }
      if (away.empty()) break;
      const int drop = away[std::uniform_int_distribution<std::size_t>(0, away.size() - 1)(rng)];
      std::shuffle(at_hub.begin(), at_hub.end(), rng);
      std::shuffle(rest.begin(), rest.end(), rng);
      order = at_hub;
      order.insert(order.end(), rest.begin(), rest.end());
      const EdgeBits next = fill(h & ~edge_bit(drop), order);
      if (copies.to_graph(next).degree(hub) >= copies.to_graph(h).degree(hub)) h = next;
      consider(copies.to_graph(h));
    }
  }
  return hits;
}

GapReport edge_sensitivity_gap(const HyperGraph& f, int n, const TuranTable& f_table, const TuranTable& sum_table) {
  if (f.empty()) throw InvalidArgument("edge sensitivity needs an edge");
  const int r = f.uniformity();
  const HyperGraphFamily sums = constructions::with_edge_sums(f);
  const bool edgeless_member = std::any_of(sums.members().begin(), sums.members().end(),
                                           [&](const HyperGraph& m) { return m.empty() && m.order() <= n; });
  GapReport out;
  out.n = n;
  out.gap = static_cast<std::int64_t>(ex_value(f_table, n, r)) - (edgeless_member ? 0 : ex_value(sum_table, n, r));
  if (out.gap < 0) throw VerificationError("superfamily has a larger Turan number");
  out.threshold = 2ULL * static_cast<std::uint64_t>(f.order()) * f.size() * binomial(n - 1, r - 1);
  while (static_cast<std::uint64_t>(out.t_max + 1) * (out.t_max + 1) * out.threshold <=
         static_cast<std::uint64_t>(out.gap)) {
    ++out.t_max;
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    default:
      return "undetermined";
  }
}

Fact51Result fact51_check(int n, int t, int r) {
  if (n < 1 || r < 1 || t < 0) throw InvalidArgument("the exponential bound needs n, r >= 1 and t >= 0");
  if (static_cast<std::int64_t>(t) * (5 * r + 1) > n - r) throw InvalidArgument("t exceeds (n-r)/(5r+1)");
  Fact51Result out;
  out.lhs = binomial_q(n - t, r);
  const Rational full = binomial_q(n, r);
  out.rhs_lo = full / e_fifth_hi();
  out.rhs_hi = full / e_fifth_lo();
  if (out.lhs >= out.rhs_hi) {
    out.verdict = Verdict::Holds;
  } else if (out.lhs < out.rhs_lo) {
    out.verdict = Verdict::Fails;
  } else {
    out.verdict = Verdict::Undetermined;
  }
  return out;
}

Inequality fact52_check(const HyperGraph& f, int n, int t, const TuranTable& table) {
  const int r = f.uniformity();
  if (t < 0 || r * (t + 1) > n) throw InvalidArgument("the binomial difference bound needs 0 <= t <= n/r - 1");
  const Rational lhs = abs_q(average_degree(table, n, r) - average_degree(table, n - t, r));
  return compare(lhs, Rational(4 * t) * binomial_q(n - t, r - 2));
}

Inequality lemma53_report(const HyperGraph& f, int n, int t, const TuranTable& table, const Rational& pi) {
  const int r = f.uniformity();
  if (t < 1 || t > n) throw InvalidArgument("the degree report needs 1 <= t <= n");
  if (pi < 0 || pi > 1) throw InvalidArgument("pi must lie in [0, 1]");
  const Rational lhs =
      abs_q(Rational(ex_value(table, n, r) - ex_value(table, n - t, r)) - t * average_degree(table, n, r));
  const Rational coeff = (Rational(1) - pi) / (8 * f.order()) * t + Rational(4 * (r - 1) * t * t, n);
  return compare(lhs, coeff * binomial_q(n, r - 1));
}

std::vector<std::string> table_violations(const TuranTable& table, int r) {
  std::vector<std::string> out;
  for (const auto& [n, rec] : table.records()) {
    const TuranRecord* next = table.find(n + 1);
    if (next == nullptr || !rec.exact() || !next->exact() || n < r) continue;
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (next->value < rec.value) out.push_back(at + "ex decreases");
    if (Rational(next->value) > Rational(rec.value) + binomial_q(n, r - 1)) {
      out.push_back(at + "ex grows by more than C(n, r-1)");
    }
    if (Rational(next->value) / binomial_q(n + 1, r) > Rational(rec.value) / binomial_q(n, r)) {
      out.push_back(at + "density increases");
    }
  }
  return out;
}

}  // namespace rainbow::turan
