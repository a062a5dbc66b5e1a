#include <doctest.h>

#include "oracles.hpp"
#include "qed/families.hpp"
#include "qed/io.hpp"
#include "qed/obstruction.hpp"

using namespace qed;

TEST_CASE("doubled cycles are obstructions") {
  for (int n : {3, 4, 5}) {
    auto report = is_obstruction(doubled_cycle(n));
    CHECK(report.obstruction);
    CHECK_FALSE(report.graph_diplanar);
    CHECK(report.min_genus >= 1);
    CHECK(report.sanity.all());
  }
}

TEST_CASE("a disjoint union of obstructions is not minimal") {
  std::vector<Arc> arcs;
  const MultiDigraph dc3 = doubled_cycle(3);
  for (const Arc& e : dc3.arcs()) arcs.push_back(e);
  for (const Arc& e : dc3.arcs()) arcs.push_back(Arc{e.tail + 3, e.head + 3});
  MultiDigraph g(6, std::move(arcs));
  REQUIRE(is_quartic(g));
  auto report = is_obstruction(g);
  CHECK_FALSE(report.obstruction);
  CHECK_FALSE(report.graph_diplanar);
  bool some_bad = false;
  for (const auto& w : report.cycle_witnesses) some_bad = some_bad || !w.reduced_diplanar;
  CHECK(some_bad);
}

TEST_CASE("diplanar graphs are rejected quickly") {
  auto report = is_obstruction(directed_medial(plane_k4()));
  CHECK_FALSE(report.obstruction);
  CHECK(report.graph_diplanar);
  CHECK(report.cycle_witnesses.empty());
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(is_obstruction(MultiDigraph(0, {})), std::invalid_argument);
  std::vector<Arc> arcs{Arc{0, 1}, Arc{1, 0}};
  CHECK_THROWS_AS(is_obstruction(MultiDigraph(2, std::move(arcs))), std::invalid_argument);
}

TEST_CASE("obstruction_sanity") {
  CHECK(obstruction_sanity(doubled_cycle(3)).all());
  // a loop fails the first check
  MultiDigraph loops(1, {Arc{0, 0}, Arc{0, 0}});
  auto c = obstruction_sanity(loops);
  CHECK_FALSE(c.loop_free);
  // two quartic blocks joined through a two-arc bridge fail connectivity
  std::vector<Arc> arcs;
  const MultiDigraph dc3 = doubled_cycle(3);
  for (const Arc& e : dc3.arcs()) arcs.push_back(e);
  for (const Arc& e : dc3.arcs()) arcs.push_back(Arc{e.tail + 3, e.head + 3});
  arcs.erase(arcs.begin());       // 0 -> 1 removed: slot for the digon at 0
  arcs.erase(arcs.begin() + 5);   // 3 -> 4 removed (was index 6)
  arcs.push_back(Arc{0, 4});
  arcs.push_back(Arc{3, 1});
  MultiDigraph bridged(6, std::move(arcs));
  REQUIRE(is_eulerian(bridged));
  auto checks = obstruction_sanity(bridged);
  CHECK_FALSE(checks.edge_connectivity_4);
  CHECK_FALSE(checks.strongly_2_edge_connected);
  // multiplicity above two between a pair
  MultiDigraph fat(2, {Arc{0, 1}, Arc{0, 1}, Arc{1, 0}, Arc{1, 0}});
  CHECK_FALSE(obstruction_sanity(fat).multiplicity_at_most_2);
}

TEST_CASE("true verdicts carry verifiable witnesses") {
  auto report = is_obstruction(circulant_z(5));
  REQUIRE(report.obstruction);
  CHECK(report.sanity.all());
  for (const auto& w : report.cycle_witnesses) {
    REQUIRE(w.reduced_diplanar);
    MultiDigraph h = remove_cycle(circulant_z(5), w.cycle);
    if (h.vertex_count() == 0) continue;
    REQUIRE(w.certificate.has_value());
    std::string why;
    CHECK(verify_certificate(h, *w.certificate, &why));
    INFO(why);
  }
}

TEST_CASE("verdict is isomorphism-invariant") {
  oracles::Rng rng(oracles::test_seed() + 30);
  for (const MultiDigraph& g : {doubled_cycle(4), n_chain({2})}) {
    bool expected = is_obstruction(g).obstruction;
    for (int trial = 0; trial < 5; ++trial) {
      auto perm = oracles::random_permutation(g.vertex_count(), rng);
      CHECK(is_obstruction(oracles::permute_vertices(g, perm)).obstruction == expected);
    }
  }
}
