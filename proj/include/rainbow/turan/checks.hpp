#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/core/hypergraph.hpp"
#include "rainbow/turan/record.hpp"

namespace rainbow::turan {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);
// Accepts "a", "a/b" and finite decimals such as "0.25".
Rational parse_rational(const std::string& text);

Rational binomial_q(int n, int k);

// ex(k) from the table, or 0 when k < r (K_k^r has no edges).
int ex_value(const TuranTable& table, int k, int r);

// d(n, F) = r * ex(n, F) / n.
Rational average_degree(const TuranTable& table, int n, int r);

struct DerivedQuantities {
  int n = 0;
  Rational delta_n;  // ex(n) - ex(n-1)
  Rational d_n;      // r * ex(n) / n
  Rational pi_hat;   // ex(n) / C(n, r)
};

// Needs exact records at n-1 and n; throws MissingRecord otherwise.
DerivedQuantities derived_quantities(const HyperGraph& f, const TuranTable& table, int n);

// pi_hat at the largest n with an exact record.
Rational default_pi(const TuranTable& table, int r);

struct CheckParams {
  Rational c1;
  Rational c2{1};
  Rational pi;
  int m = 0;  // v(F)

  // Throws InvalidArgument unless c1 >= 0, c2 > 0 and 0 <= pi <= 1.
  void validate() const;
};

struct Inequality {
  Rational lhs;
  Rational rhs;
  bool holds = false;  // lhs <= rhs
};

struct SmoothnessRow {
  int n = 0;
  Inequality check;  // |delta(n) - d(n-1)| <= (1 - pi) / (8m) * C(n, r-1)
};

struct SmoothnessReport {
  // r-partite F counts as smooth by convention; the rows are then informative only.
  bool degenerate = false;
  std::vector<SmoothnessRow> rows;
};

SmoothnessReport smoothness_check(const HyperGraph& f, const CheckParams& params, const TuranTable& table, int n_lo,
                                  int n_hi);

// Randomized greedy and local-move search for F-free graphs H on n vertices
// with max degree >= d(n,F) + c1 * C(n-1, r-1) and |H| >= (1 - c2) * ex(n,F).
// Every returned graph is re-checked F-free by an embedding search and meets
// both premises exactly. An empty result proves nothing.
std::vector<HyperGraph> boundedness_falsifier(const HyperGraph& f, const CheckParams& params, int n,
                                              const TuranTable& table, int samples, std::uint64_t seed);

struct GapReport {
  int n = 0;
  std::int64_t gap = 0;         // ex(n, F) - ex(n, {F} u F+F)
  std::uint64_t threshold = 0;  // 2 v(F) |F| C(n-1, r-1)
  int t_max = 0;                // largest t with t^2 * threshold <= gap
};

// `sum_table` holds ex(n, {F} u F+F). When F+F has an edgeless member every
// graph contains it, so that value is 0 and the table is not consulted.
GapReport edge_sensitivity_gap(const HyperGraph& f, int n, const TuranTable& f_table, const TuranTable& sum_table);

enum class Verdict { Holds, Fails, Undetermined };
std::string_view verdict_name(Verdict v);

struct Fact51Result {
  Rational lhs;     // C(n-t, r)
  Rational rhs_lo;  // C(n, r) / e^{1/5}, enclosed in [rhs_lo, rhs_hi]
  Rational rhs_hi;
  Verdict verdict = Verdict::Undetermined;
};

// C(n-t, r) >= e^{-1/5} C(n, r) for t <= (n-r)/(5r+1), evaluated with
// e^{1/5} in [1.2214027, 1.2214028].
Fact51Result fact51_check(int n, int t, int r);

// |d(n) - d(n-t)| <= 4t C(n-t, r-2) for 0 <= t <= n/r - 1.
Inequality fact52_check(const HyperGraph& f, int n, int t, const TuranTable& table);

// |ex(n) - ex(n-t) - t d(n)| <= ((1-pi)/(8m) t + 4(r-1) t^2 / n) C(n, r-1),
// 1 <= t <= n. The statement is asymptotic; this only reports.
Inequality lemma53_report(const HyperGraph& f, int n, int t, const TuranTable& table, const Rational& pi);

// Violations of ex(n) <= ex(n+1) <= ex(n) + C(n, r-1) and of the density
// ex(n)/C(n,r) being non-increasing, over consecutive exact records.
std::vector<std::string> table_violations(const TuranTable& table, int r);

}  // namespace rainbow::turan
