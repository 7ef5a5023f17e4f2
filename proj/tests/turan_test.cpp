#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/constructions/operators.hpp"
#include "rainbow/constructions/zoo.hpp"
#include "rainbow/core/canonical.hpp"
#include "rainbow/core/embedding.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/turan/checks.hpp"
#include "rainbow/turan/ex_search.hpp"

using namespace rainbow;
using namespace rainbow::turan;
using constructions::complete;
using constructions::cycle;

namespace {

HyperGraphFamily family_of(std::vector<HyperGraph> members) {
  return HyperGraphFamily(members.front().uniformity(), members);
}

TuranTable table_for(const HyperGraphFamily& fam, int n_lo, int n_hi) {
  TuranTable table(fam.key());
  for (int n = n_lo; n <= n_hi; ++n) table.add(ex_exact(n, fam));
  return table;
}

HyperGraph complete_bipartite(int a, int b) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return HyperGraph::from_lists(2, a + b, edges);
}

struct Case {
  std::string name;
  HyperGraphFamily fam;
  int n;
};

std::vector<Case> small_matrix() {
  std::vector<Case> out;
  const HyperGraphFamily k3 = family_of({cycle(3)});
  const HyperGraphFamily k3c4 = family_of({cycle(3), cycle(4)});
  const HyperGraphFamily edge2 = family_of({HyperGraph::complete(2, 2)});
  const HyperGraphFamily edge3 = family_of({HyperGraph::complete(3, 3)});
  const HyperGraphFamily two_k3 = family_of({disjoint_union(cycle(3), 2)});
  const HyperGraphFamily k43 = family_of({complete(4, 3)});
  const HyperGraphFamily p3 = family_of({constructions::path(2)});
  for (int n = 3; n <= 6; ++n) out.push_back({"K3", k3, n});
  for (int n = 3; n <= 6; ++n) out.push_back({"K3,C4", k3c4, n});
  for (int n = 2; n <= 6; ++n) out.push_back({"edge", edge2, n});
  for (int n = 3; n <= 6; ++n) out.push_back({"3-edge", edge3, n});
  out.push_back({"2K3", two_k3, 6});
  for (int n = 4; n <= 6; ++n) out.push_back({"K4^3", k43, n});
  for (int n = 3; n <= 6; ++n) out.push_back({"P3", p3, n});
  return out;
}

}  // namespace

TEST_CASE("ex_exact agrees with full enumeration on every small instance") {
  for (const Case& c : small_matrix()) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    const int r = c.fam.uniformity();
    REQUIRE(binomial(c.n, r) <= 20);
    const TuranRecord rec = ex_exact(c.n, c.fam);
    CHECK(rec.exact());
    CHECK(rec.value == oracle::turan_by_enumeration(c.n, r, c.fam.members()));
    CHECK_NOTHROW(verify_record(rec, c.fam));
    CHECK_FALSE(oracle::contains_any(rec.witness, c.fam.members()));
    CHECK(ex_exact_serial(c.n, c.fam).value == rec.value);
  }
}

TEST_CASE("known small Turan numbers") {
  const HyperGraphFamily k3 = family_of({cycle(3)});
  for (int n = 3; n <= 9; ++n) CHECK(ex_exact(n, k3).value == n * n / 4);
  CHECK(is_isomorphic(ex_exact(5, k3).witness, complete_bipartite(2, 3)));
  for (int n = 3; n <= 7; ++n) CHECK(ex_exact(n, family_of({HyperGraph::complete(3, 3)})).value == 0);
  // K_6 minus a triangle: two disjoint triangles would need one of its edges.
  CHECK(ex_exact(6, family_of({disjoint_union(cycle(3), 2)})).value == 12);
  CHECK(ex_exact(4, family_of({disjoint_union(HyperGraph::complete(2, 2), 2)})).value == 3);
}

TEST_CASE("members too large for the host are never copies") {
  const HyperGraphFamily fano = family_of({constructions::fano()});
  const TuranRecord rec = ex_exact(6, fano);
  CHECK(rec.value == 20);
  CHECK(rec.witness == HyperGraph::complete(6, 3));
}

TEST_CASE("ex_exact input errors") {
  CHECK_THROWS_AS(ex_exact(2, family_of({HyperGraph::complete(3, 3)})), InvalidArgument);
  CHECK_THROWS_AS(ex_exact(5, family_of({HyperGraph::edgeless(2, 2)})), InvalidArgument);
  CHECK_THROWS_AS(ex_exact(12, family_of({cycle(3)})), CapacityError);
  CHECK_THROWS_AS(ex_exact(5, HyperGraphFamily(2)), InvalidArgument);
}

TEST_CASE("search variants agree") {
  const std::vector<std::pair<HyperGraphFamily, int>> runs{
      {family_of({cycle(3)}), 8},
      {family_of({cycle(4)}), 7},
      {family_of({complete(4, 3)}), 7},
      {family_of({disjoint_union(cycle(3), 2)}), 8},
      {family_of({constructions::generalized_triangle(3)}), 6},
      {family_of({constructions::fano()}), 7},
  };
  for (const auto& [fam, n] : runs) {
    CAPTURE(n);
    const TuranRecord base = ex_exact_serial(n, fam);
    SearchOptions aug;
    aug.canonical_augmentation = true;
    for (int threads : {1, 2, 8}) {
      SearchOptions o;
      o.threads = threads;
      const TuranRecord par = ex_exact(n, fam, o);
      CHECK(par.value == base.value);
      CHECK(par.witness == base.witness);
      aug.threads = threads;
      const TuranRecord with_aug = ex_exact(n, fam, aug);
      CHECK(with_aug.value == base.value);
      CHECK(with_aug.witness == base.witness);
    }
    CHECK(ex_exact_serial(n, fam, aug).witness == base.witness);
  }
}

TEST_CASE("a small budget gives a certified lower bound") {
  const HyperGraphFamily k43 = family_of({complete(4, 3)});
  SearchOptions o;
  o.budget = 100;
  for (const TuranRecord& rec : {ex_exact_serial(7, k43, o), ex_exact(7, k43, o)}) {
    CHECK(rec.status == RecordStatus::LowerBoundOnly);
    CHECK(rec.value <= 23);
    CHECK(static_cast<int>(rec.witness.size()) == rec.value);
    CHECK_FALSE(contains_member(rec.witness, k43));
  }
}

TEST_CASE("record text round trip and rejection") {
  const HyperGraphFamily k3 = family_of({cycle(3)});
  TuranRecord rec = ex_exact(5, k3);
  rec.manifest = "m1";
  const std::string text = record_text(rec);
  CHECK(text.rfind("TURAN n=5 fam=" + k3.key() + " value=6 status=exact solver=", 0) == 0);
  const TuranRecord back = parse_turan_record(text);
  CHECK(back.n == 5);
  CHECK(back.value == 6);
  CHECK(back.family_key == k3.key());
  CHECK(back.manifest == "m1");
  CHECK(back.witness == rec.witness);
  CHECK(record_text(back) == text);
  CHECK_NOTHROW(verify_record(back, k3));

  CHECK_THROWS_AS(parse_turan_record("TURAN n=5\n"), ParseError);
  CHECK_THROWS_AS(parse_turan_record(text.substr(0, text.size() - 1)), ParseError);
  std::string bad_status = text;
  bad_status.replace(bad_status.find("exact"), 5, "maybe");
  CHECK_THROWS_AS(parse_turan_record(bad_status), ParseError);

  TuranRecord lying = rec;
  lying.value = 7;
  CHECK_THROWS_AS(verify_record(lying, k3), VerificationError);
  TuranRecord with_triangle = rec;
  with_triangle.witness = HyperGraph::complete(5, 2).without_edge(0);
  with_triangle.value = 9;
  CHECK_THROWS_AS(verify_record(with_triangle, k3), VerificationError);
  CHECK_THROWS_AS(verify_record(rec, family_of({cycle(4)})), VerificationError);
}

TEST_CASE("derived quantities") {
  const HyperGraph k3 = cycle(3);
  const TuranTable table = table_for(family_of({k3}), 3, 9);
  const DerivedQuantities d6 = derived_quantities(k3, table, 6);
  CHECK(d6.delta_n == 3);
  CHECK(d6.d_n == 3);
  CHECK(d6.pi_hat == Rational(9, 15));
  CHECK(derived_quantities(k3, table, 5).d_n == Rational(12, 5));
  CHECK_THROWS_AS(derived_quantities(k3, table, 10), MissingRecord);

  const HyperGraph edge = HyperGraph::complete(2, 2);
  const TuranTable zero = table_for(family_of({edge}), 2, 6);
  for (int n = 3; n <= 6; ++n) {
    const DerivedQuantities d = derived_quantities(edge, zero, n);
    CHECK(d.delta_n == 0);
    CHECK(d.d_n == 0);
    CHECK(d.pi_hat == 0);
  }

  TuranTable partial(table.family_key());
  TuranRecord rough = ex_exact(6, family_of({k3}));
  rough.status = RecordStatus::LowerBoundOnly;
  partial.add(table.records().at(5));
  partial.add(rough);
  CHECK_THROWS_AS(derived_quantities(k3, partial, 6), MissingRecord);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1."), InvalidArgument);
}

TEST_CASE("smoothness check") {
  const HyperGraph k3 = cycle(3);
  const TuranTable table = table_for(family_of({k3}), 3, 9);
  CheckParams params{Rational(1, 10), Rational(1, 10), Rational(1, 2), 3};
  const SmoothnessReport rep = smoothness_check(k3, params, table, 5, 9);
  CHECK_FALSE(rep.degenerate);
  REQUIRE(rep.rows.size() == 5);
  for (const auto& row : rep.rows) {
    const int n = row.n;
    const Rational delta(n * n / 4 - (n - 1) * (n - 1) / 4);
    const Rational d_prev(2 * ((n - 1) * (n - 1) / 4), n - 1);
    const Rational lhs = delta > d_prev ? Rational(delta - d_prev) : Rational(d_prev - delta);
    CHECK(row.check.lhs == lhs);
    CHECK(row.check.rhs == Rational(n, 48));
    CHECK(row.check.holds == (lhs <= Rational(n, 48)));
  }

  params.pi = 1;
  for (const auto& row : smoothness_check(k3, params, table, 5, 9).rows) {
    CHECK(row.check.rhs == 0);
    CHECK(row.check.holds == (row.check.lhs == 0));
  }

  const HyperGraph c4 = cycle(4);
  const TuranTable c4_table = table_for(family_of({c4}), 2, 6);
  params.m = 4;
  CHECK(smoothness_check(c4, params, c4_table, 4, 6).degenerate);
  params.c2 = 0;
  CHECK_THROWS_AS(smoothness_check(c4, params, c4_table, 4, 6), InvalidArgument);
}

TEST_CASE("boundedness falsifier") {
  const HyperGraph k3 = cycle(3);
  const TuranTable table = table_for(family_of({k3}), 3, 8);

  CheckParams huge{Rational(1000), Rational(1, 2), Rational(1, 2), 3};
  CHECK(boundedness_falsifier(k3, huge, 7, table, 20, 1).empty());

  // With c1 = 0 and c2 = 1 the extremal bipartite graph itself qualifies:
  // its maximum degree ceil(n/2) is at least d(n, K3) = 2 floor(n^2/4) / n.
  CheckParams loose{Rational(0), Rational(1), Rational(1, 2), 3};
  for (int n = 5; n <= 8; ++n) {
    const auto hits = boundedness_falsifier(k3, loose, n, table, 10, 7);
    REQUIRE_FALSE(hits.empty());
    bool has_bipartite = false;
    for (const auto& h : hits) {
      CHECK_FALSE(oracle::contains_any(h, {k3}));
      CHECK(Rational(h.max_degree()) >= average_degree(table, n, 2));
      has_bipartite = has_bipartite || is_isomorphic(h, complete_bipartite(n / 2, n - n / 2));
    }
    CHECK(has_bipartite);
  }

  // Degree above d(n) + C(n-1,1)/4 with at least half the extremal size:
  // stars with a few extra edges qualify; each hit must be certified.
  CheckParams mid{Rational(1, 4), Rational(1, 2), Rational(1, 2), 3};
  for (const auto& h : boundedness_falsifier(k3, mid, 8, table, 30, 3)) {
    CHECK_FALSE(oracle::contains_any(h, {k3}));
    CHECK(Rational(h.max_degree()) >= Rational(4) + Rational(7, 4));
    CHECK(h.size() >= 8);
  }

  const HyperGraph edge = HyperGraph::complete(2, 2);
  const TuranTable zero = table_for(family_of({edge}), 2, 6);
  CheckParams positive{Rational(1, 100), Rational(1, 2), Rational(0), 2};
  CHECK(boundedness_falsifier(edge, positive, 6, zero, 10, 5).empty());
}

TEST_CASE("edge sensitivity gap") {
  const HyperGraph k3 = cycle(3);
  const HyperGraphFamily sums = constructions::with_edge_sums(k3);
  CHECK(sums.equivalent(family_of({cycle(3), cycle(4)})));
  const TuranTable k3_table = table_for(family_of({k3}), 3, 8);
  const TuranTable sum_table = table_for(sums, 3, 8);
  for (int n = 4; n <= 8; ++n) {
    const GapReport g = edge_sensitivity_gap(k3, n, k3_table, sum_table);
    CHECK(g.gap >= 0);
    CHECK(g.gap == k3_table.exact(n) - sum_table.exact(n));
    CHECK(g.threshold == 2ULL * 3 * 3 * (n - 1));
    CHECK(g.t_max == 0);
  }
  const GapReport seven = edge_sensitivity_gap(k3, 7, k3_table, sum_table);
  CHECK(seven.gap == 12 - oracle::turan_by_enumeration(7, 2, {cycle(3), cycle(4)}));

  const HyperGraph edge = HyperGraph::complete(2, 2);
  const TuranTable edge_table = table_for(family_of({edge}), 2, 6);
  const GapReport e = edge_sensitivity_gap(edge, 6, edge_table, TuranTable());
  CHECK(e.gap == 0);
  CHECK(e.t_max == 0);
  CHECK_THROWS_AS(edge_sensitivity_gap(k3, 9, k3_table, sum_table), MissingRecord);
}

TEST_CASE("exponential binomial bound on a grid") {
  const Fact51Result zero = fact51_check(30, 0, 3);
  CHECK(zero.verdict == Verdict::Holds);
  CHECK(fact51_check(100, 3, 2).verdict == Verdict::Holds);
  for (int r = 2; r <= 4; ++r)
    for (int n = 20; n <= 60; ++n)
      for (int t = 0; t * (5 * r + 1) <= n - r; ++t) {
        const Fact51Result res = fact51_check(n, t, r);
        CHECK(res.verdict == Verdict::Holds);
        CHECK(res.rhs_lo < res.rhs_hi);
      }
  CHECK_THROWS_AS(fact51_check(20, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(fact51_check(20, -1, 2), InvalidArgument);
}

TEST_CASE("binomial difference bound and degree report") {
  const HyperGraph k3 = cycle(3);
  const TuranTable table = table_for(family_of({k3}), 2, 9);
  const Inequality eight = fact52_check(k3, 8, 2, table);
  CHECK(eight.lhs == 1);  // d(8) = 4, d(6) = 3
  CHECK(eight.rhs == 8);
  CHECK(eight.holds);
  for (int n = 6; n <= 9; ++n)
    for (int t = 1; 2 * (t + 1) <= n; ++t) {
      const Inequality res = fact52_check(k3, n, t, table);
      const Rational expect_lhs = Rational(2 * (n * n / 4), n) - Rational(2 * ((n - t) * (n - t) / 4), n - t);
      CHECK(res.lhs == (expect_lhs < 0 ? Rational(-expect_lhs) : expect_lhs));
      CHECK(res.rhs == 4 * t);
      CHECK(res.holds);
    }
  CHECK_THROWS_AS(fact52_check(k3, 8, 4, table), InvalidArgument);

  for (int n = 6; n <= 9; ++n)
    for (int t = 1; t <= n; ++t) {
      const Inequality rep = lemma53_report(k3, n, t, table, Rational(1, 2));
      CHECK(rep.rhs > 0);
      CHECK(rep.holds == (rep.lhs <= rep.rhs));
    }
  CHECK_THROWS_AS(lemma53_report(k3, 6, 0, table, Rational(1, 2)), InvalidArgument);
}

TEST_CASE("property: monotonicity and density on computed tables") {
  const std::vector<HyperGraphFamily> fams{family_of({cycle(3)}), family_of({cycle(4)}),
                                           family_of({cycle(3), cycle(4)}), family_of({complete(4, 3)}),
                                           family_of({constructions::generalized_triangle(3)})};
  for (const auto& fam : fams) {
    const int r = fam.uniformity();
    const TuranTable table = table_for(fam, r, r == 2 ? 8 : 7);
    CHECK(table_violations(table, r).empty());
  }
  // Superfamily monotonicity.
  const TuranTable small = table_for(family_of({cycle(3)}), 3, 8);
  const TuranTable big = table_for(family_of({cycle(3), cycle(4)}), 3, 8);
  for (int n = 3; n <= 8; ++n) CHECK(big.exact(n) <= small.exact(n));

  TuranTable broken("x");
  TuranRecord a, b;
  a.n = 5;
  a.family_key = b.family_key = "x";
  a.value = 6;
  a.witness = HyperGraph::edgeless(5, 2);
  b.n = 6;
  b.value = 5;
  b.witness = HyperGraph::edgeless(6, 2);
  broken.add(a);
  broken.add(b);
  CHECK_FALSE(table_violations(broken, 2).empty());
}
