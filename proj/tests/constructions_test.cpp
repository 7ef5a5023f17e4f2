#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/constructions/operators.hpp"
#include "rainbow/constructions/zoo.hpp"
#include "rainbow/core/canonical.hpp"
#include "rainbow/core/embedding.hpp"

using namespace rainbow;
using namespace rainbow::constructions;

namespace {

HyperGraph one_based(int r, int n, std::vector<std::vector<Vertex>> edges) {
  for (auto& e : edges)
    for (auto& v : e) --v;
  return HyperGraph::from_lists(r, n, edges);
}

}  // namespace

TEST_CASE("zoo objects have the defined shapes") {
  SUBCASE("Fano plane edge set is exactly the listed one") {
    const HyperGraph f = fano();
    CHECK(f.order() == 7);
    CHECK(f.size() == 7);
    for (auto e : {make_set({0, 1, 2}), make_set({2, 3, 4}), make_set({4, 5, 0}), make_set({0, 6, 3}),
                   make_set({1, 6, 4}), make_set({2, 6, 5}), make_set({1, 3, 5})}) {
      CHECK(f.has_edge(e));
    }
  }
  SUBCASE("generalized and expanded triangles") {
    for (int r = 3; r <= 7; ++r) {
      const HyperGraph t = generalized_triangle(r);
      CHECK(t.uniformity() == r);
      CHECK(t.order() == 2 * r - 1);
      CHECK(t.size() == 3);
    }
    CHECK_THROWS_AS(generalized_triangle(2), InvalidArgument);
    for (int r = 2; r <= 3; ++r) {
      const HyperGraph c = expanded_triangle(r);
      CHECK(c.uniformity() == 2 * r);
      CHECK(c.order() == 3 * r);
      CHECK(c.size() == 3);
    }
  }
  SUBCASE("books and the listed disjoint union") {
    const HyperGraph f7 = zoo(parse_zoo_id("f7", {}));
    CHECK(f7.order() == 7);
    CHECK(f7.size() == 4);
    const HyperGraph f32 = zoo(parse_zoo_id("f32", {}));
    CHECK(f32.order() == 5);
    CHECK(f32.size() == 4);
    const HyperGraph f43 = zoo(parse_zoo_id("f43", {}));
    CHECK(f43.order() == 7);
    CHECK(f43.size() == 5);
    const HyperGraph k = zoo(parse_zoo_id("k43-k33", {}));
    CHECK(k.order() == 7);
    CHECK(k.size() == 4);
    CHECK(k == one_based(3, 7, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {5, 6, 7}}));
  }
  SUBCASE("parametrized families") {
    CHECK(matching(3, 4).order() == 12);
    CHECK(matching(3, 4).max_degree() == 1);
    const HyperGraph l = sunflower(3, 3);
    CHECK(l.order() == 7);
    CHECK(l.degree(0) == 3);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) CHECK((l.edge(i) & l.edge(j)) == vertex_bit(0));
    CHECK(complete_minus(5, 3).size() == 9);
    CHECK(tight_cycle(5).size() == 5);
    CHECK(tight_cycle(4) == complete(4, 3));
    CHECK(tight_cycle_minus(7).size() == 6);
    CHECK_THROWS_AS(tight_cycle(3), InvalidArgument);
    CHECK(zoo(parse_zoo_id("even-cycle", {3})) == cycle(6));
    CHECK_THROWS_AS(parse_zoo_id("matching", {2}), InvalidArgument);
    CHECK_THROWS_AS(parse_zoo_id("no-such-thing", {}), InvalidArgument);
  }
}

TEST_CASE("minus family") {
  const auto k3 = minus_family(cycle(3));
  REQUIRE(k3.size() == 1);
  CHECK(is_isomorphic(k3.members()[0], path(2)));

  const auto f = minus_family(fano());
  REQUIRE(f.size() == 1);
  CHECK(f.members()[0].order() == 7);
  CHECK(f.members()[0].size() == 6);

  const auto m = minus_family(matching(2, 3));
  REQUIRE(m.size() == 1);
  CHECK(m.members()[0].size() == 1);
  CHECK(m.members()[0].order() == 6);

  CHECK_THROWS_AS(minus_family(HyperGraph::edgeless(3, 2)), InvalidArgument);
  // Path P_4 (3 edges) has two kinds of deletions: an end edge or the middle edge.
  CHECK(minus_family(path(3)).size() == 2);
}

TEST_CASE("edge sums of cycles are cycles") {
  for (int k = 3; k <= 6; ++k) {
    for (int l = 3; l <= 6; ++l) {
      const auto fam = edge_sum_family(cycle(k), cycle(l));
      REQUIRE(fam.size() == 1);
      CHECK(is_isomorphic(fam.members()[0], cycle(k + l - 2)));
    }
  }
  const auto k3k3 = edge_sum_family(complete(3, 2), complete(3, 2));
  REQUIRE(k3k3.size() == 1);
  CHECK(oracle::isomorphic(k3k3.members()[0], cycle(4)));
}

TEST_CASE("Fano edge sum contains the two-planes-sharing-a-line picture") {
  // Vertices a,b,c = 1,2,3 on the shared line; 4..7 above it, 8..11 below it.
  // Upper plane without abc: afe, agd, cde, cgf, bge, fdb with d=4, e=5, f=6, g=7.
  // Lower plane without abc: the same lines with d'=8, e'=9, f'=10, g'=11.
  const HyperGraph picture = one_based(3, 11, {{1, 6, 5}, {1, 7, 4}, {3, 4, 5}, {3, 7, 6}, {2, 7, 5}, {6, 4, 2},
                                               {1, 10, 9}, {1, 11, 8}, {3, 8, 9}, {3, 11, 10}, {2, 11, 9}, {10, 8, 2}});
  CHECK(picture.size() == 12);
  const auto fam = edge_sum_family(fano(), fano());
  CHECK(fam.contains_isomorphic(picture));
  for (const auto& m : fam.members()) {
    CHECK(m.order() == 11);
    CHECK(m.size() == 12);
  }
}

TEST_CASE("property: edge-sum counts and symmetry") {
  const std::vector<HyperGraph> graphs{cycle(3), cycle(4), path(2), path(3), star(3), complete(4, 2)};
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      const auto ab = edge_sum_family(a, b);
      for (const auto& m : ab.members()) {
        CHECK(m.order() == a.order() + b.order() - 2);
        CHECK(m.size() == a.size() + b.size() - 2);
      }
      CHECK(ab.equivalent(edge_sum_family(b, a)));
    }
  }
  const std::vector<HyperGraph> three{generalized_triangle(3), complete(4, 3), sunflower(2, 3), fano()};
  for (const auto& a : three) {
    for (const auto& b : three) {
      const auto ab = edge_sum_family(a, b);
      for (const auto& m : ab.members()) {
        CHECK(m.order() == a.order() + b.order() - 3);
        CHECK(m.size() == a.size() + b.size() - 2);
      }
      CHECK(ab.equivalent(edge_sum_family(b, a)));
    }
  }
  CHECK_THROWS_AS(edge_sum_family(cycle(3), fano()), InvalidArgument);
}

TEST_CASE("blow-up") {
  CHECK(is_isomorphic(blow_up(fano(), 1), fano()));
  const HyperGraph k222 = blow_up(complete(3, 2), 2);
  CHECK(k222.order() == 6);
  CHECK(k222.size() == 12);
  CHECK_THROWS_AS(blow_up(fano(), 0), InvalidArgument);

  // The 2-edge path blown up by 2 holds the 4-cycle a1 b1 a2 b2.
  const HyperGraph p3 = minus_family(complete(3, 2)).members()[0];
  CHECK(find_embedding(cycle(4), blow_up(p3, 2)).has_value());

  SUBCASE("iterated blow-ups compose") {
    for (const auto& f : {path(2), cycle(3), generalized_triangle(3)}) {
      CHECK(is_isomorphic(blow_up(blow_up(f, 2), 2), blow_up(f, 4)));
      CHECK(is_isomorphic(blow_up(blow_up(f, 2), 3), blow_up(f, 6)));
    }
  }
}

TEST_CASE("expansions and tree extensions") {
  const HyperGraph hk3 = expansion_graph(complete(3, 2), 3);
  CHECK(hk3.order() == 6);
  CHECK(hk3.size() == 3);
  CHECK(is_isomorphic(expansion_graph(matching(3, 2), 4), matching(3, 4)));
  const HyperGraph hp3 = expansion_graph(path(2), 3);
  CHECK(hp3.order() == 5);
  CHECK(hp3.size() == 2);
  CHECK_THROWS_AS(expansion_graph(path(2), 2), InvalidArgument);

  CHECK(expansion_clique(complete(4, 3)) == complete(4, 3));
  SUBCASE("uncovered pairs match a direct count") {
    auto uncovered = [](const HyperGraph& f) {
      int count = 0;
      for (Vertex u = 0; u < f.order(); ++u)
        for (Vertex v = u + 1; v < f.order(); ++v) {
          bool covered = false;
          for (auto e : f.edges()) covered = covered || ((e >> u) & 1U && (e >> v) & 1U);
          count += covered ? 0 : 1;
        }
      return count;
    };
    const HyperGraph m2 = matching(2, 3);
    CHECK(uncovered(m2) == 9);
    CHECK(expansion_clique(m2).size() == 2 + 9);
    CHECK(expansion_clique(m2).order() == 6 + 9);
    const HyperGraph single = HyperGraph::complete(3, 3).with_order(4);
    CHECK(uncovered(single) == 3);
    CHECK(expansion_clique(single).size() == 1 + 3);
  }

  const HyperGraph edge = HyperGraph::complete(2, 2);
  CHECK(ext_tree(edge, 4).size() == 1);
  CHECK(ext_tree(edge, 4).order() == 4);
  const HyperGraph ep3 = ext_tree(path(2), 3);
  CHECK(ep3.order() == 4);
  CHECK(ep3.size() == 2);
  CHECK(set_size(ep3.edge(0) & ep3.edge(1)) == 2);
  // Ext of a star: three edges sharing the centre and the pad vertex, i.e. a
  // sunflower with a 2-vertex kernel, so not the 1-vertex-kernel L_3^3.
  const HyperGraph es = ext_tree(star(3), 3);
  CHECK_FALSE(is_isomorphic(es, sunflower(3, 3)));
  CHECK_FALSE(oracle::isomorphic(es, sunflower(3, 3)));
  CHECK_THROWS_AS(ext_tree(cycle(3), 3), InvalidArgument);
  CHECK_THROWS_AS(ext_tree(matching(2, 2), 3), InvalidArgument);
}

TEST_CASE("property: minus-family members embed into the original") {
  for (const auto& f : {fano(), generalized_triangle(3), complete(4, 3), tight_cycle(5), cycle(5), path(3),
                        zoo(parse_zoo_id("f32", {}))}) {
    const auto minus = minus_family(f);
    for (const auto& m : minus.members()) CHECK(find_embedding(m, f).has_value());
  }
}

TEST_CASE("property: F-minus blown up by 2 contains a member of F (+) F") {
  // Contrapositive form of: every (F (+) F)-free r-graph is F_-[2]-free.
  const std::vector<HyperGraph> small_zoo{complete(3, 2), cycle(4), cycle(5), path(3), matching(2, 2),
                                          fano(), generalized_triangle(3), complete(4, 3), complete_minus(4, 3),
                                          tight_cycle(5), sunflower(2, 3), zoo(parse_zoo_id("f32", {})),
                                          zoo(parse_zoo_id("k43-k33", {}))};
  for (const auto& f : small_zoo) {
    REQUIRE(f.order() <= 8);
    const auto sums = edge_sum_family(f, f);
    const auto minus = minus_family(f);
    for (const auto& m : minus.members()) {
      CHECK(contains_member(blow_up(m, 2), sums));
    }
  }
}
