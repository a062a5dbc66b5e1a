#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qed/canonical.hpp"
#include "qed/cycles.hpp"
#include "qed/families.hpp"

using namespace qed;

namespace {

MultiDigraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back(Arc{i, (i + 1) % n});
  return MultiDigraph(n, std::move(arcs));
}

std::set<std::set<int>> as_sets(const std::vector<DirectedCycle>& cycles) {
  std::set<std::set<int>> out;
  for (const auto& c : cycles) out.insert(std::set<int>(c.arcs.begin(), c.arcs.end()));
  return out;
}

}  // namespace

TEST_CASE("doubled 3-cycle has exactly the 8 triangles") {
  auto cycles = enumerate_directed_cycles(doubled_cycle(3));
  CHECK(cycles.size() == 8);
  for (const auto& c : cycles) CHECK(c.length() == 3);
  CHECK(as_sets(cycles).size() == 8);
}

TEST_CASE("enumeration agrees with the brute-force enumerator") {
  oracles::Rng rng(oracles::test_seed() + 10);
  std::vector<MultiDigraph> graphs = {doubled_cycle(3), doubled_cycle(4),
                                      circulant_z(5),   circulant_z(7),
                                      oriented_k222(),  mobius_ladder_plus(3),
                                      directed_cycle(6), n_chain({1, 1})};
  // plus a few random Eulerian digraphs on <= 7 vertices (random medials
  // are Eulerian and small)
  for (int i = 0; i < 4; ++i) {
    MultiDigraph m = directed_medial(oracles::random_plane_graph(rng));
    if (m.vertex_count() <= 7) graphs.push_back(m);
  }
  for (const auto& g : graphs) {
    if (g.vertex_count() > 7) continue;
    CHECK(as_sets(enumerate_directed_cycles(g)) == oracles::naive_cycle_sets(g));
  }
}

TEST_CASE("loops and parallel arcs are handled") {
  MultiDigraph g(2, {Arc{0, 0}, Arc{0, 1}, Arc{0, 1}, Arc{1, 0}, Arc{1, 0}, Arc{1, 1}});
  auto cycles = enumerate_directed_cycles(g);
  // 2 loops, and 2x2 digon combinations
  CHECK(cycles.size() == 6);
  CHECK(as_sets(cycles) == oracles::naive_cycle_sets(g));
}

TEST_CASE("remove_cycle empties the doubled 3-cycle") {
  MultiDigraph g = doubled_cycle(3);
  for (const auto& c : enumerate_directed_cycles(g)) {
    MultiDigraph h = remove_cycle(g, c);
    CHECK(h.vertex_count() == 0);
  }
}

TEST_CASE("remove_cycle on a digon of the Moebius ladder") {
  MultiDigraph g = mobius_ladder_plus(3);
  for (const auto& c : enumerate_directed_cycles(g)) {
    if (c.length() != 2) continue;
    MultiDigraph h = remove_cycle(g, c);
    // removing 2 of 12 arcs and suppressing both degree-2 endpoints leaves
    // a quartic graph on 4 vertices with 8 arcs
    CHECK(h.vertex_count() == 4);
    CHECK(h.arc_count() == 8);
    CHECK(is_quartic(h));
  }
}

TEST_CASE("remove_cycle of a whole component returns the rest") {
  std::vector<Arc> arcs;
  const MultiDigraph dc3 = doubled_cycle(3);
  for (const Arc& e : dc3.arcs()) arcs.push_back(e);
  for (int i = 0; i < 3; ++i) arcs.push_back(Arc{3 + i, 3 + (i + 1) % 3});
  MultiDigraph g(6, std::move(arcs));
  for (const auto& c : enumerate_directed_cycles(g)) {
    bool in_second = g.arc(c.arcs[0]).tail >= 3;
    if (!in_second) continue;
    CHECK(remove_cycle(g, c) == doubled_cycle(3));
  }
}

TEST_CASE("remove_cycle validates its input") {
  MultiDigraph g = doubled_cycle(3);
  CHECK_THROWS_AS(remove_cycle(g, DirectedCycle{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(remove_cycle(g, DirectedCycle{{}}), std::invalid_argument);
  CHECK_THROWS_AS(remove_cycle(g, DirectedCycle{{0, 0}}), std::invalid_argument);
}

TEST_CASE("predecessors") {
  auto pred = predecessors(doubled_cycle(3));
  REQUIRE(pred.size() == 1);
  CHECK(pred[0].vertex_count() == 0);
  pred = predecessors(directed_cycle(3));
  REQUIRE(pred.size() == 1);
  CHECK(pred[0].vertex_count() == 0);
  for (const auto& h : predecessors(circulant_z(5))) CHECK(is_diplanar(h).diplanar);
}

TEST_CASE("cycle_partition") {
  auto part = cycle_partition(doubled_cycle(3));
  CHECK(part.size() == 2);
  for (const auto& c : part) CHECK(c.length() == 3);
  auto self = cycle_partition(directed_cycle(3));
  REQUIRE(self.size() == 1);
  CHECK(self[0].length() == 3);
  CHECK_THROWS_AS(cycle_partition(MultiDigraph(2, {Arc{0, 1}})), std::invalid_argument);
}

TEST_CASE("cycle_partition is a partition on the corpus") {
  oracles::Rng rng(oracles::test_seed() + 11);
  std::vector<MultiDigraph> graphs = {doubled_cycle(5), circulant_z(7),
                                      mobius_ladder_plus(5), oriented_k222(),
                                      anti_ladder(4), n_chain({1, 2})};
  for (int i = 0; i < 4; ++i)
    graphs.push_back(directed_medial(oracles::random_plane_graph(rng)));
  for (const auto& g : graphs) {
    auto part = cycle_partition(g);
    std::vector<int> hits(static_cast<std::size_t>(g.arc_count()), 0);
    for (const auto& c : part) {
      CHECK(is_directed_cycle_of(g, c));
      for (ArcId a : c.arcs) ++hits[static_cast<std::size_t>(a)];
    }
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("return_path_exists") {
  MultiDigraph g = doubled_cycle(4);
  CHECK(return_path_exists(g, 0, 0));
  // property (iii): after removing an arc xy (and possibly more cycles),
  // a path from y back to x remains
  oracles::Rng rng(oracles::test_seed() + 12);
  for (const MultiDigraph& base : {doubled_cycle(4), circulant_z(5), oriented_k222()}) {
    for (int trial = 0; trial < 20; ++trial) {
      ArcId a = rng.below(base.arc_count());
      Vertex x = base.arc(a).tail, y = base.arc(a).head;
      std::vector<Arc> arcs;
      for (ArcId b = 0; b < base.arc_count(); ++b)
        if (b != a) arcs.push_back(base.arc(b));
      MultiDigraph h(base.vertex_count(), std::move(arcs));
      CHECK(return_path_exists(h, x, y));
      // remove a further directed cycle avoiding the imbalance
      auto cycles = oracles::naive_cycle_sets(h);
      if (!cycles.empty()) {
        auto it = cycles.begin();
        std::advance(it, rng.below(static_cast<int>(cycles.size())));
        std::vector<Arc> rest;
        for (ArcId b = 0; b < h.arc_count(); ++b)
          if (!it->count(b)) rest.push_back(h.arc(b));
        MultiDigraph h2(h.vertex_count(), std::move(rest));
        CHECK(return_path_exists(h2, x, y));
      }
    }
  }
  // two disjoint 3-cycles: no path between components
  std::vector<Arc> arcs;
  for (int i = 0; i < 3; ++i) arcs.push_back(Arc{i, (i + 1) % 3});
  for (int i = 0; i < 3; ++i) arcs.push_back(Arc{3 + i, 3 + (i + 1) % 3});
  MultiDigraph two(6, std::move(arcs));
  CHECK_FALSE(return_path_exists(two, 0, 3));
}

TEST_CASE("remove_cycle preserves the Eulerian and quartic properties") {
  for (const MultiDigraph& g : {doubled_cycle(4), circulant_z(5), oriented_k222()}) {
    for (const auto& c : enumerate_directed_cycles(g)) {
      MultiDigraph h = remove_cycle(g, c);
      CHECK(is_eulerian(h));
      CHECK((h.vertex_count() == 0 || is_quartic(h)));
    }
  }
}
