#include <doctest.h>

#include <algorithm>
#include <set>

#include "teuler/errors.hpp"
#include "teuler/generators.hpp"
#include "teuler/search.hpp"
#include "teuler/walk.hpp"

using namespace teuler;

TEST_CASE("tight cycles") {
  Hypergraph c6 = gen_tight_cycle(6, 3);
  CHECK(c6.m() == 6);
  CHECK(c6.find_edge({4, 5, 0}) >= 0);
  CHECK(gen_tight_cycle(5, 3).max_codegree() == 2);
  CHECK_THROWS_AS(gen_tight_cycle(3, 3), InputError);
  CHECK_THROWS_AS(gen_tight_cycle(2, 3), InputError);
  // every tight cycle is its own unique Euler tour
  for (int n = 5; n <= 9; ++n) {
    auto tours = enumerate_euler_tours(gen_tight_cycle(n, 3));
    REQUIRE(tours.size() == 1);
    std::vector<int> expect(n);
    for (int i = 0; i < n; ++i) expect[i] = i;
    CHECK(tours[0].verts == expect);
  }
}

TEST_CASE("tight paths") {
  Hypergraph p2 = gen_path(2);
  CHECK(p2.n() == 4);
  CHECK(p2.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
  CHECK(gen_path(3).n() == 6);
  CHECK(gen_path(3).m() == 4);
  CHECK_THROWS_AS(gen_path(1), InputError);
  for (int t = 2; t <= 5; ++t) {
    Hypergraph p = gen_path(t);
    std::vector<int> run(2 * t);
    for (int i = 0; i < 2 * t; ++i) run[i] = i;
    CHECK(verify_euler(p, WalkSeq{run, false}).verdict == EulerVerdict::Trail);
  }
}

TEST_CASE("H_ell structure") {
  for (int ell = 5; ell <= 9; ++ell) {
    HellGadget g = gen_h_ell(ell);
    CHECK(g.graph.n() == 3 * ell);
    CHECK(g.graph.m() == 6 * ell);
    CHECK(g.graph.max_codegree() == 2);
  }
  CHECK_THROWS_AS(gen_h_ell(4), InputError);

  HellGadget g = gen_h_ell(5);
  CHECK(g.labels.name(0) == "0");
  CHECK(g.labels.name(6) == "6");
  CHECK(g.labels.name(7) == "v1a");
  CHECK(g.labels.name(10) == "v4a");
  CHECK(g.labels.name(11) == "v1b");
  CHECK(g.labels.name(14) == "v4b");
  CHECK(g.labels.va(1) == 7);
  CHECK(g.labels.vb(4) == 14);

  // first edge family for ell = 5, in construction order
  CHECK(g.graph.find_edge({1, 0, 5}) == 0);
  CHECK(g.graph.find_edge({1, 7, 5}) == 1);
  CHECK(g.graph.find_edge({7, 5, 6}) == 2);
  CHECK(g.graph.find_edge({7, 11, 6}) == 3);
  CHECK(g.graph.find_edge({11, 6, 0}) == 4);
  CHECK(g.graph.find_edge({11, 1, 0}) == 5);
}

TEST_CASE("tours of type N, T, F") {
  TypedTour n5 = tour_of_type(5, TourType::N);
  CHECK(n5.walk == WalkSeq{{0, 1, 5, 7, 6, 11}, true});
  CHECK_FALSE(n5.eulerian);

  for (int ell = 5; ell <= 9; ++ell) {
    TypedTour t = tour_of_type(ell, TourType::T);
    CHECK(t.eulerian);
    CHECK(static_cast<int>(t.walk.verts.size()) == 6 * ell);
    CHECK(verify_euler(gen_h_ell(ell).graph, t.walk).verdict ==
          EulerVerdict::Tour);
  }

  // type F is Eulerian exactly when ell != 1 (mod 3)
  for (int ell = 5; ell <= 13; ++ell) {
    TypedTour f = tour_of_type(ell, TourType::F);
    CHECK(f.walk.closed);
    CHECK(f.eulerian == (ell % 3 != 1));
    if (!f.eulerian) {
      CHECK(static_cast<int>(f.walk.verts.size()) < 6 * ell);
    }
  }

  // Figure-2 sequence for ell = 5 under the documented layout
  TypedTour f5 = tour_of_type(5, TourType::F);
  CHECK(f5.walk.verts ==
        std::vector<int>{5, 0, 1, 11, 12, 8, 9,  3, 4, 14, 0, 6, 11, 7, 8,
                         2, 3, 13, 14, 10, 6, 5, 7, 1, 2,  12, 13, 9, 10, 4});

  // the explicit type-T formula agrees with forced extension from (0,ell,1)
  for (int ell : {5, 6, 8}) {
    Hypergraph h = gen_h_ell(ell).graph;
    ForcedWalk fw = forced_walk(h, WalkSeq{{0, ell, 1}, false});
    REQUIRE(fw.result == ForcedResult::Tour);
    CHECK(canonicalize(h, fw.walk).verts ==
          canonicalize(h, tour_of_type(ell, TourType::T).walk).verts);
  }
}

TEST_CASE("ordering types") {
  CHECK(ordering_type(5, {0, 1, 5}, {0, 5, 1}) == TourType::T);
  CHECK(ordering_type(5, {0, 1, 5}, {0, 1, 5}) == TourType::N);
  CHECK(ordering_type(5, {0, 1, 5}, {5, 0, 1}) == TourType::F);
  // reversals classify identically
  CHECK(ordering_type(5, {0, 1, 5}, {1, 5, 0}) == TourType::T);
  CHECK(ordering_type(5, {0, 1, 5}, {5, 1, 0}) == TourType::N);
  CHECK(ordering_type(5, {0, 1, 5}, {1, 0, 5}) == TourType::F);

  CHECK_THROWS_AS(ordering_type(7, {0, 1, 7}, {0, 1, 7}), InputError);
  CHECK_THROWS_AS(ordering_type(5, {0, 1, 2}, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(ordering_type(5, {0, 1, 5}, {0, 1, 2}), InputError);

  // trichotomy: the three orderings-up-to-reversal of every edge get the
  // three distinct types
  for (int ell : {5, 6}) {
    OrderingClassifier classifier(ell);
    Hypergraph h = gen_h_ell(ell).graph;
    for (const auto& e : h.edges()) {
      std::set<TourType> seen;
      seen.insert(classifier.classify(e, {e[0], e[1], e[2]}));
      seen.insert(classifier.classify(e, {e[1], e[0], e[2]}));
      seen.insert(classifier.classify(e, {e[0], e[2], e[1]}));
      CHECK(seen.size() == 3);
    }
  }
}

TEST_CASE("complete hypergraphs") {
  CHECK(gen_complete(5, 3).m() == 10);
  CHECK(gen_complete(4, 3).m() == 4);
  CHECK(divisibility_filter(gen_complete(4, 3)));       // C(3,2) = 3
  CHECK_FALSE(divisibility_filter(gen_complete(6, 3)));  // C(5,2) = 10
  CHECK(gen_complete(6, 3).m() == 20);
  CHECK_THROWS_AS(gen_complete(2, 3), InputError);
}

TEST_CASE("wreaths") {
  std::vector<int> id5 = {0, 1, 2, 3, 4};
  Hypergraph w = gen_wreath(5, 3, id5);
  CHECK(w.m() == 5);
  std::set<std::vector<int>> expect = {
      {0, 1, 2}, {0, 3, 4}, {1, 2, 3}, {0, 1, 4}, {2, 3, 4}};
  std::set<std::vector<int>> got(w.edges().begin(), w.edges().end());
  CHECK(got == expect);

  std::vector<int> id6 = {0, 1, 2, 3, 4, 5};
  CHECK(gen_wreath(6, 3, id6).m() == 2);  // k | n: lcm/k = 2 blocks

  // coprime n, k: the wreath is the tight Hamiltonian cycle
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {7, 3}, {7, 4}, {5, 2}}) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    Hypergraph wreath = gen_wreath(n, k, id);
    Hypergraph cycle = gen_tight_cycle(n, k);
    std::set<std::vector<int>> wr_edges(wreath.edges().begin(),
                                        wreath.edges().end());
    std::set<std::vector<int>> cyc_edges(cycle.edges().begin(),
                                         cycle.edges().end());
    CHECK(wr_edges == cyc_edges);
  }

  CHECK_THROWS_AS(gen_wreath(5, 3, {0, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(gen_wreath(5, 3, {0, 1, 2, 3, 3}), InputError);
  CHECK_THROWS_AS(gen_wreath(3, 3, {0, 1, 2}), InputError);
}

TEST_CASE("random hypergraphs") {
  Hypergraph a = gen_random(6, 3, 6, 12345);
  Hypergraph b = gen_random(6, 3, 6, 12345);
  CHECK(a.edges() == b.edges());

  // saturation yields the complete hypergraph
  Hypergraph full = gen_random(6, 3, 20, 777);
  CHECK(full.edges() == gen_complete(6, 3).edges());

  CHECK_THROWS_AS(gen_random(4, 3, 5, 1), InputError);
  CHECK(gen_random(6, 3, 0, 1).m() == 0);

  Hypergraph c = gen_random(6, 3, 6, 54321);
  CHECK(a.edges() != c.edges());
}
