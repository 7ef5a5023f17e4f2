#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/antiramsey/ar_search.hpp"
#include "rainbow/antiramsey/coloring.hpp"
#include "rainbow/antiramsey/constructions.hpp"
#include "rainbow/antiramsey/rainbow.hpp"
#include "rainbow/antiramsey/verify.hpp"
#include "rainbow/constructions/operators.hpp"
#include "rainbow/constructions/zoo.hpp"
#include "rainbow/core/embedding.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/family.hpp"
#include "rainbow/turan/checks.hpp"
#include "rainbow/turan/ex_search.hpp"

using namespace rainbow;
using namespace rainbow::antiramsey;
using constructions::cycle;

namespace {

const HyperGraph kEdge = HyperGraph::complete(2, 2);

turan::TuranRecord ex_tiling(int n, int t, const HyperGraph& f) {
  return turan::ex_exact(n, HyperGraphFamily::single(disjoint_union(f, t)));
}

EdgeColoring random_coloring(int n, int r, int colors, std::mt19937_64& rng) {
  const int m = static_cast<int>(binomial(n, r));
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = i < colors ? i + 1 : std::uniform_int_distribution<int>(1, colors)(rng);
  std::shuffle(c.begin(), c.end(), rng);
  return EdgeColoring(n, r, c);
}

struct ArCase {
  std::string name;
  int n;
  int t;
  HyperGraph f;
};

std::vector<ArCase> oracle_matrix() {
  return {
      {"edge", 3, 1, kEdge},
      {"edge", 4, 2, kEdge},
      {"edge", 5, 2, kEdge},
      {"K3", 3, 1, cycle(3)},
      {"K3", 4, 1, cycle(3)},
      {"K3", 5, 1, cycle(3)},
      {"P3", 4, 1, constructions::path(2)},
      {"P3", 5, 1, constructions::path(2)},
      {"P4", 5, 1, constructions::path(3)},
      {"C4", 4, 1, cycle(4)},
      {"C4", 5, 1, cycle(4)},
      {"star3", 5, 1, constructions::star(3)},
      {"3-edge", 4, 1, HyperGraph::complete(3, 3)},
      {"3-edge", 5, 1, HyperGraph::complete(3, 3)},
      {"K4^3-", 4, 1, constructions::complete_minus(4, 3)},
      {"K4^3", 4, 1, constructions::complete(4, 3)},
      {"T3", 5, 1, constructions::generalized_triangle(3)},
      {"L2", 5, 1, constructions::sunflower(2, 3)},
  };
}

}  // namespace

TEST_CASE("edge colorings") {
  const EdgeColoring chi(4, 2, {1, 2, 3, 3, 2, 1});
  CHECK(chi.color_count() == 3);
  CHECK(chi.color_of(make_set({0, 1})) == 1);
  CHECK(chi.color_of(make_set({2, 3})) == 1);
  CHECK(chi.color_of(make_set({1, 2})) == 3);
  CHECK_THROWS_AS(EdgeColoring(4, 2, {1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(EdgeColoring(4, 2, {1, 2, 4, 4, 2, 1}), InvalidArgument);
  CHECK_THROWS_AS(EdgeColoring(4, 2, {0, 1, 1, 1, 1, 1}), InvalidArgument);
  CHECK(EdgeColoring::from_rgs(4, 2, {0, 1, 2, 2, 1, 0}) == chi);
  CHECK_THROWS_AS(EdgeColoring::from_rgs(4, 2, {0, 2, 1, 1, 1, 1}), InvalidArgument);
  CHECK(EdgeColoring::constant(5, 3).color_count() == 1);

  const EdgeColoring m = chi.merged(3, 1);
  CHECK(m.color_count() == 2);
  CHECK(m.colors() == std::vector<int>{1, 2, 1, 1, 2, 1});

  const std::string text = coloring_text(chi);
  CHECK(text == "2 4 3\n1 2 3 3 2 1\n");
  CHECK(parse_coloring(text) == chi);
  for (const char* bad : {"2 4 3\n1 2 3 3 2 1", "2 4 2\n1 2 3 3 2 1\n", "2 4 3\n1 2 3 3 2\n", "2 4 3\n1  2 3 3 2 1\n",
                          "2 4 3\n1 2 3 3 2 01\n", "2 4 3\n1 2 3 3 2 1\n\n", "2 4\n1 2 3 3 2 1\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_coloring(bad), ParseError);
  }
}

TEST_CASE("rainbow copies") {
  const EdgeColoring one = EdgeColoring::constant(5, 2);
  CHECK(find_rainbow_copy(one, kEdge).has_value());
  CHECK_FALSE(find_rainbow_copy(one, constructions::path(2)).has_value());
  CHECK_FALSE(find_rainbow_copy(one, cycle(3)).has_value());

  const EdgeColoring all(5, 2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const auto tri = find_rainbow_copy(all, cycle(3));
  REQUIRE(tri.has_value());
  CHECK(is_valid_embedding(cycle(3), HyperGraph::complete(5, 2), *tri));
  CHECK(max_rainbow_subgraph(all) == HyperGraph::complete(5, 2));
  CHECK(max_rainbow_subgraph(one).size() == 1);
  CHECK(max_rainbow_subgraph(one).edge(0) == make_set({0, 1}));
  CHECK_FALSE(find_rainbow_copy(all, disjoint_union(cycle(3), 2)).has_value());

  SUBCASE("property: agrees with the brute-force rainbow check") {
    std::mt19937_64 rng(2024);
    const std::vector<HyperGraph> targets{cycle(3), constructions::path(3), disjoint_union(kEdge, 2), cycle(4),
                                          constructions::star(3)};
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 4 + trial % 3;
      const int colors = 1 + static_cast<int>(rng() % binomial(n, 2));
      const EdgeColoring chi = random_coloring(n, 2, colors, rng);
      for (const auto& target : targets) {
        const auto found = find_rainbow_copy(chi, target);
        CHECK(found.has_value() == oracle::has_rainbow_copy(n, 2, chi.colors(), target));
        if (found) {
          std::set<int> seen;
          for (VertexSet e : target.edges()) seen.insert(chi.color_of(found->image_of(e)));
          CHECK(seen.size() == target.size());
        }
      }
    }
  }
}

TEST_CASE("ar_exact agrees with plain partition enumeration") {
  for (const ArCase& c : oracle_matrix()) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    CAPTURE(c.t);
    const int r = c.f.uniformity();
    REQUIRE(binomial(c.n, r) <= 10);
    const ArRecord rec = ar_exact(c.n, c.t, c.f);
    CHECK(rec.exact());
    CHECK(rec.value == oracle::max_colors_by_enumeration(c.n, r, disjoint_union(c.f, c.t)) + 1);
    CHECK_NOTHROW(verify_ar_record(rec, c.f));
    CHECK(ar_exact_serial(c.n, c.t, c.f).value == rec.value);
  }
}

TEST_CASE("known anti-Ramsey values") {
  for (int n = 3; n <= 7; ++n) CHECK(ar_exact(n, 1, cycle(3)).value == n);
  for (int n = 2; n <= 6; ++n) {
    const ArRecord one = ar_exact(n, 1, kEdge);
    CHECK(one.value == 1);
    CHECK_FALSE(one.witness.has_value());
    CHECK_NOTHROW(verify_ar_record(one, kEdge));
  }
  CHECK(ar_exact(4, 2, kEdge).value == 4);
  for (int n = 5; n <= 7; ++n) CHECK(ar_exact(n, 2, kEdge).value == 2);
}

TEST_CASE("ar_exact is schedule independent") {
  const std::vector<ArCase> cases{{"K3", 6, 1, cycle(3)}, {"K3", 6, 2, cycle(3)}, {"edge", 6, 3, kEdge},
                                  {"C4", 6, 1, cycle(4)}, {"P4", 6, 1, constructions::path(3)},
                                  {"3-edge", 6, 2, HyperGraph::complete(3, 3)}};
  for (const ArCase& c : cases) {
    CAPTURE(c.name);
    const ArRecord base = ar_exact_serial(c.n, c.t, c.f);
    for (int threads : {1, 2, 8}) {
      ArOptions o;
      o.threads = threads;
      const ArRecord par = ar_exact(c.n, c.t, c.f, o);
      CHECK(par.value == base.value);
      CHECK(par.witness == base.witness);
    }
  }
}

TEST_CASE("ar_exact errors and budgets") {
  CHECK_THROWS_WITH_AS(ar_exact(7, 3, cycle(3)), "target cannot embed", InvalidArgument);
  CHECK_THROWS_AS(ar_exact(6, 0, cycle(3)), InvalidArgument);
  CHECK_THROWS_AS(ar_exact(6, 1, HyperGraph::edgeless(3, 2)), InvalidArgument);
  CHECK_THROWS_AS(ar_exact(12, 1, cycle(3)), CapacityError);

  ArOptions o;
  o.budget = 50;
  for (const ArRecord& rec : {ar_exact_serial(7, 1, cycle(3), o), ar_exact(7, 1, cycle(3), o)}) {
    CHECK(rec.status == ArStatus::Bounds);
    CHECK(rec.hi == 22);
    CHECK(rec.lo <= 7);
    CHECK(rec.value == rec.lo);
    REQUIRE(rec.witness.has_value());
    CHECK(rec.witness->color_count() == rec.lo - 1);
    CHECK_FALSE(find_rainbow_copy(*rec.witness, cycle(3)).has_value());
    CHECK_NOTHROW(verify_ar_record(rec, cycle(3)));
  }
}

TEST_CASE("AR record text") {
  ArRecord rec = ar_exact(5, 1, cycle(3));
  rec.manifest = "abc";
  const std::string text = ar_record_text(rec);
  CHECK(text.rfind("AR n=5 t=1 F=" + graph_key(cycle(3)) + " value=5 status=exact lo=5 hi=5 solver=", 0) == 0);
  const ArRecord back = parse_ar_record(text);
  CHECK(ar_record_text(back) == text);
  CHECK(back.witness == rec.witness);
  CHECK_NOTHROW(verify_ar_record(back, cycle(3)));
  CHECK(parse_ar_record(ar_record_text(ar_exact(4, 1, kEdge))).witness == std::nullopt);
  CHECK_THROWS_AS(parse_ar_record("AR n=5\nnone\n"), ParseError);

  ArRecord wrong = rec;
  wrong.witness = EdgeColoring(5, 2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}).merged(1, 2).merged(1, 2).merged(1, 2).merged(1, 2).merged(1, 2).merged(1, 2);
  CHECK(wrong.witness->color_count() == 4);
  CHECK_THROWS_AS(verify_ar_record(wrong, cycle(3)), VerificationError);
  CHECK_THROWS_AS(verify_ar_record(rec, cycle(4)), VerificationError);
}

TEST_CASE("property: witnesses stay rainbow-free under merges and give target-free transversals") {
  const std::vector<ArCase> cases{{"K3", 6, 1, cycle(3)}, {"K3", 6, 2, cycle(3)}, {"edge", 6, 3, kEdge},
                                  {"C4", 5, 1, cycle(4)}, {"3-edge", 6, 2, HyperGraph::complete(3, 3)}};
  for (const ArCase& c : cases) {
    CAPTURE(c.name);
    const ArRecord rec = ar_exact(c.n, c.t, c.f);
    REQUIRE(rec.witness.has_value());
    const EdgeColoring& chi = *rec.witness;
    const HyperGraph target = disjoint_union(c.f, c.t);
    for (int a = 1; a <= chi.color_count(); ++a)
      for (int b = a + 1; b <= chi.color_count(); ++b) CHECK_FALSE(find_rainbow_copy(chi.merged(a, b), target));
    const HyperGraph transversal = max_rainbow_subgraph(chi);
    CHECK(static_cast<int>(transversal.size()) == chi.color_count());
    CHECK_FALSE(find_embedding(target, transversal).has_value());
  }
}

TEST_CASE("extremal graph colorings avoid a rainbow (t+1)F") {
  const EdgeColoring single = build_coloring_fact21(5, 1, kEdge, ex_tiling(5, 1, kEdge));
  CHECK(single == EdgeColoring::constant(5, 2));

  struct Params {
    HyperGraph f;
    int t;
    int n;
  };
  const std::vector<Params> grid{{kEdge, 1, 4}, {kEdge, 1, 5}, {kEdge, 1, 6}, {kEdge, 2, 4},
                                 {kEdge, 2, 5}, {kEdge, 2, 6}, {cycle(3), 1, 5}, {cycle(3), 1, 6},
                                 {HyperGraph::complete(3, 3), 1, 4}, {HyperGraph::complete(3, 3), 1, 5},
                                 {cycle(3), 2, 9}};
  for (const auto& [f, t, n] : grid) {
    CAPTURE(n);
    CAPTURE(t);
    const turan::TuranRecord ex = ex_tiling(n, t, f);
    const EdgeColoring chi = build_coloring_fact21(n, t, f, ex);
    CHECK(chi.color_count() == ex.value + 1);
    const HyperGraph next = disjoint_union(f, t + 1);
    CHECK_FALSE(find_rainbow_copy(chi, next).has_value());
    if (next.order() <= n && binomial(n, f.uniformity()) <= 10) {
      CHECK_FALSE(oracle::has_rainbow_copy(n, f.uniformity(), chi.colors(), next));
    }
    CHECK(max_rainbow_subgraph(chi).size() == static_cast<std::size_t>(ex.value + 1));
  }
  turan::TuranRecord rough = ex_tiling(6, 1, cycle(3));
  rough.status = turan::RecordStatus::LowerBoundOnly;
  CHECK_THROWS_AS(build_coloring_fact21(6, 1, cycle(3), rough), MissingRecord);
  CHECK_THROWS_AS(build_coloring_fact21(6, 2, cycle(3), ex_tiling(6, 1, cycle(3))), InvalidArgument);
  CHECK_THROWS_AS(build_coloring_fact21(5, 2, cycle(3), ex_tiling(5, 1, cycle(3))), InvalidArgument);
}

TEST_CASE("padded colorings keep fresh colors off the core") {
  const ArRecord inner_rec = ar_exact(6, 2, cycle(3));
  REQUIRE(inner_rec.witness.has_value());
  const EdgeColoring& inner = *inner_rec.witness;
  CHECK(build_coloring_fact31(6, 0, cycle(3), inner) == inner);

  const EdgeColoring chi = build_coloring_fact31(7, 1, cycle(3), inner);
  CHECK(chi.color_count() == 6 + inner.color_count());
  CHECK_FALSE(find_rainbow_copy(chi, disjoint_union(cycle(3), 3)).has_value());
  for (int i = 0; i < 15; ++i) CHECK(chi.color(i) == inner.color(i));

  // Edge version with a nontrivial target: inner = best 2K2-avoiding coloring of K_4.
  const ArRecord edge_inner = ar_exact(4, 2, kEdge);
  for (int t = 0; t <= 2; ++t) {
    const EdgeColoring out = build_coloring_fact31(4 + t, t, kEdge, *edge_inner.witness);
    CHECK(out.color_count() ==
          static_cast<int>(binomial(4 + t, 2) - binomial(4, 2)) + edge_inner.witness->color_count());
    CHECK_FALSE(find_rainbow_copy(out, disjoint_union(kEdge, t + 2)).has_value());
  }
  CHECK_THROWS_AS(build_coloring_fact31(7, 1, cycle(3), EdgeColoring(6, 2, [] {
                                          std::vector<int> c(15);
                                          for (int i = 0; i < 15; ++i) c[i] = i + 1;
                                          return c;
                                        }())),
                  VerificationError);
}

TEST_CASE("sandwich, reduction and identity checks") {
  struct Row {
    int n;
    int t;
    HyperGraph f;
  };
  for (const auto& [n, t, f] : std::vector<Row>{{4, 2, kEdge}, {5, 2, kEdge}, {5, 1, cycle(3)}, {6, 2, cycle(3)},
                                                 {6, 3, kEdge}, {6, 1, cycle(4)}}) {
    CAPTURE(n);
    CAPTURE(t);
    const ArRecord ar = ar_exact(n, t, f);
    std::optional<int> below;
    if (t > 1) below = ex_tiling(n, t - 1, f).value;
    const SandwichReport rep = check_sandwich(ar, below, ex_tiling(n, t, f).value);
    CHECK(rep.holds());
  }
  ArRecord fake = ar_exact(5, 2, kEdge);
  fake.value = fake.lo = fake.hi = 9;
  CHECK_FALSE(check_sandwich(fake, 1, 4).upper);
  CHECK_THROWS_AS(check_sandwich(fake, std::nullopt, 4), MissingRecord);

  for (int n = 6; n <= 7; ++n) {
    const ReductionReport red = check_reduction(ar_exact(n, 3, kEdge), ar_exact(n - 1, 2, kEdge), 2);
    CHECK(red.crossing == static_cast<std::uint64_t>(n - 1));
    CHECK(red.holds);
  }

  const auto edge_table = [&] {
    turan::TuranTable tab;
    for (int n = 2; n <= 6; ++n) tab.add(ex_tiling(n, 1, kEdge));
    return tab;
  }();
  const turan::GapReport edge_gap = turan::edge_sensitivity_gap(kEdge, 5, edge_table, turan::TuranTable());
  const IdentityReport id = verify_identity_thm15(5, 1, kEdge, ar_exact(5, 2, kEdge), edge_table, edge_gap);
  CHECK(id.verdict == IdentityVerdict::OutOfRange);
  CHECK(id.identity);
  CHECK_FALSE(id.violation());

  turan::TuranTable k3_table, sum_table;
  const HyperGraphFamily sums = constructions::with_edge_sums(cycle(3));
  for (int n = 3; n <= 6; ++n) {
    k3_table.add(ex_tiling(n, 1, cycle(3)));
    sum_table.add(turan::ex_exact(n, sums));
  }
  const turan::GapReport k3_gap = turan::edge_sensitivity_gap(cycle(3), 6, k3_table, sum_table);
  const IdentityReport k3 = verify_identity_thm15(6, 1, cycle(3), ar_exact(6, 2, cycle(3)), k3_table, k3_gap);
  CHECK(k3.verdict == IdentityVerdict::OutOfRange);
  CHECK(k3.ex == 9);
  CHECK(k3.lower_bound);
  CHECK_FALSE(k3.violation());
  CHECK_THROWS_AS(verify_identity_thm15(6, 1, cycle(3), ar_exact(6, 1, cycle(3)), k3_table, k3_gap),
                  InvalidArgument);
}

TEST_CASE("stability degree census") {
  turan::TuranTable table;
  for (int n = 3; n <= 7; ++n) table.add(ex_tiling(n, 1, cycle(3)));
  // d(7, K3) = 24/7; threshold = 24/7 + (1/2)/21 * 6 = 24/7 + 1/7 = 25/7.
  const Census full = stability_degree_census(HyperGraph::complete(7, 2), cycle(3), turan::Rational(1, 2), table);
  CHECK(full.threshold == turan::Rational(25, 7));
  CHECK(full.high.size() == 7);
  CHECK(stability_degree_census(HyperGraph::edgeless(7, 2), cycle(3), turan::Rational(1, 2), table).high.empty());
  const HyperGraph star = constructions::star(6);
  const Census at_one = stability_degree_census(star, cycle(3), turan::Rational(1), table);
  CHECK(at_one.threshold == turan::Rational(24, 7));
  CHECK(at_one.high == std::vector<Vertex>{0});
}
