// Acceptance suite: one line per criterion, pass/fail with measured detail.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qed/qed.hpp"

using namespace qed;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string census_text(const std::vector<CensusEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries)
    out << e.form.hex() << "\t" << e.vertex_count << "\t" << e.digon_count << "\t"
        << e.antidigon_count << "\t" << (e.obstruction ? "yes" : "no") << "\t" << e.family
        << "\n";
  return out.str();
}

// the family corpus used by criteria 1, 5 and 6
struct FamilyCorpus {
  std::vector<std::pair<std::string, MultiDigraph>> members;
  std::vector<MultiDigraph> k44_accepted;
};

FamilyCorpus build_corpus() {
  FamilyCorpus c;
  for (int n = 3; n <= 8; ++n)
    c.members.emplace_back("doubled-cycle(" + std::to_string(n) + ")", doubled_cycle(n));
  for (int n : {5, 7, 9})
    c.members.emplace_back("z(" + std::to_string(n) + ")", circulant_z(n));
  for (int n : {3, 5, 7})
    c.members.emplace_back("mobius-ladder+(" + std::to_string(n) + ")",
                           mobius_ladder_plus(n));
  c.members.emplace_back("k222", oriented_k222());
  for (int n = 2; n <= 5; ++n)
    c.members.emplace_back("anti-ladder(" + std::to_string(n) + ")", anti_ladder(n));
  for (const auto& runs : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {1, 2}, {3}, {2, 1, 1}}) {
    std::string tag = "nchain(";
    for (std::size_t i = 0; i < runs.size(); ++i) tag += (i ? "," : "") + std::to_string(runs[i]);
    c.members.emplace_back(tag + ")", n_chain(runs));
  }
  c.k44_accepted = oriented_k44_candidates();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  // an optional argument restricts the run to one criterion (1..10)
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  auto wanted = [&](int k) { return only == 0 || only == k; };

  int failures = 0;
  int index = 0;
  auto report = [&](const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << index << ". " << name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n" << std::flush;
    failures += !o.pass;
  };

  std::optional<FamilyCorpus> corpus_storage;
  auto corpus_ref = [&]() -> FamilyCorpus& {
    if (!corpus_storage) corpus_storage = build_corpus();
    return *corpus_storage;
  };

  const EnumConstraints census_constraints{.loop_free = true,
                                           .max_undirected_multiplicity_2 = true,
                                           .connected_only = true};
  std::optional<std::vector<CensusEntry>> census_storage;
  double census_ms = 0;
  auto census_ref = [&]() -> std::vector<CensusEntry>& {
    if (!census_storage) {
      auto t0 = Clock::now();
      census_storage = obstruction_census(7, census_constraints, 2);
      census_ms = ms_since(t0);
    }
    return *census_storage;
  };

  // 1. family verification, each under 10 s
  index = 1;
  if (wanted(1)) {
    Outcome o;
    FamilyCorpus& corpus = corpus_ref();
    double worst = 0;
    for (const auto& [tag, g] : corpus.members) {
      auto t0 = Clock::now();
      bool ok = is_obstruction(g).obstruction;
      double ms = ms_since(t0);
      worst = std::max(worst, ms);
      o.require(ok, tag + " is not an obstruction");
      o.require(ms < 10000.0, tag + " took " + std::to_string(ms) + " ms");
    }
    o.require(!corpus.k44_accepted.empty(), "no k44 orientation is an obstruction");
    if (!corpus.k44_accepted.empty()) {
      auto t0 = Clock::now();
      o.require(is_obstruction(corpus.k44_accepted.front()).obstruction,
                "k44 verdict changed on re-verification");
      double ms = ms_since(t0);
      worst = std::max(worst, ms);
      o.require(ms < 10000.0, "k44 took " + std::to_string(ms) + " ms");
    }
    std::ostringstream d;
    d << corpus.members.size() << " members + " << corpus.k44_accepted.size()
      << " k44 orientation(s), slowest " << static_cast<int>(worst) << " ms";
    o.note(d.str());
    report("family obstruction verification", o);
  }

  // 2. contraction identities
  index = 2;
  if (wanted(2)) {
    Outcome o;
    for (int n : {3, 5, 7})
      o.require(is_isomorphic(digon_free_kernel(mobius_ladder_plus(n)), circulant_z(n)),
                "kernel(mobius-ladder+(" + std::to_string(n) + ")) != z(" +
                    std::to_string(n) + ")");
    o.require(is_isomorphic(n_chain({1}), doubled_cycle(3)), "nchain(1) != doubled-cycle(3)");
    o.require(is_isomorphic(doubled_cycle(3), circulant_z(3)), "doubled-cycle(3) != z(3)");
    report("contraction identities (exact isomorphism)", o);
  }

  // 3. cycle-structure facts
  index = 3;
  if (wanted(3)) {
    Outcome o;
    MultiDigraph k222 = oriented_k222();
    std::vector<DirectedCycle> triangles;
    for (const auto& c : enumerate_directed_cycles(k222))
      if (c.length() == 3) triangles.push_back(c);
    o.require(triangles.size() == 2,
              "k222 directed triangle count = " + std::to_string(triangles.size()) +
                  ", reference value is 2; the removal check that follows covers every "
                  "directed triangle found");
    MultiDigraph digon_triangle(
        3, {Arc{0, 1}, Arc{1, 0}, Arc{1, 2}, Arc{2, 1}, Arc{2, 0}, Arc{0, 2}});
    for (const auto& t : triangles) {
      MultiDigraph h = remove_cycle(k222, t);
      o.require(is_diplanar(h).diplanar && is_isomorphic(h, digon_triangle),
                "triangle removal did not leave three digons");
    }
    bool any48 = false;
    for (const auto& g : corpus_ref().k44_accepted) {
      std::set<int> lengths;
      for (const auto& c : enumerate_directed_cycles(g)) lengths.insert(c.length());
      bool only48 = true;
      for (int len : lengths) only48 = only48 && (len == 4 || len == 8);
      any48 = any48 || only48;
    }
    o.require(any48, "no accepted k44 orientation has cycle lengths within {4,8}");
    for (int n = 3; n <= 8; ++n) {
      auto pred = predecessors(doubled_cycle(n));
      o.require(pred.size() == 1 && pred[0].vertex_count() == 0,
                "doubled-cycle(" + std::to_string(n) + ") has a nonempty reduction");
    }
    report("cycle-structure facts", o);
  }

  // 4. heredity harness: 200 random (diplanar graph, cycle) pairs
  index = 4;
  if (wanted(4)) {
    Outcome o;
    oracles::Rng rng(oracles::test_seed() + 100);
    int passes = 0;
    for (int trial = 0; trial < 200; ++trial) {
      MultiDigraph g = directed_medial(oracles::random_plane_graph(rng));
      if (!is_diplanar(g).diplanar) {
        o.require(false, "medial source produced a non-diplanar graph");
        break;
      }
      auto cycles = enumerate_directed_cycles(g);
      const DirectedCycle& c =
          cycles[static_cast<std::size_t>(rng.below(static_cast<int>(cycles.size())))];
      if (is_diplanar(remove_cycle(g, c)).diplanar) ++passes;
    }
    o.require(passes == 200, std::to_string(passes) + "/200 removals stayed diplanar");
    o.note(std::to_string(passes) + "/200");
    report("cycle-removal heredity", o);
  }

  // 5. structural sanity for every obstruction found anywhere
  index = 5;
  if (wanted(5)) {
    Outcome o;
    int checked = 0;
    for (const auto& [tag, g] : corpus_ref().members) {
      o.require(obstruction_sanity(g).all(), tag + " failed a sanity check");
      ++checked;
    }
    for (const auto& g : corpus_ref().k44_accepted) {
      o.require(obstruction_sanity(g).all(), "k44 orientation failed a sanity check");
      ++checked;
    }
    for (const auto& g : c3_digon_expansions()) {
      o.require(obstruction_sanity(g).all(), "c3 expansion failed a sanity check");
      ++checked;
    }
    for (const auto& e : census_ref()) {
      o.require(obstruction_sanity(e.graph).all(), "census entry failed a sanity check");
      ++checked;
    }
    o.note(std::to_string(checked) + " obstructions checked");
    report("structural sanity (loops, multiplicity, connectivity)", o);
  }

  // 6. contraction / expansion round-trips
  index = 6;
  if (wanted(6)) {
    Outcome o;
    int contracted = 0;
    for (const auto& [tag, g] : corpus_ref().members) {
      auto digons = find_digons(g);
      if (digons.empty()) continue;
      MultiDigraph h = contract_digon(g, digons.front());
      o.require(is_obstruction(h).obstruction,
                "contraction of " + tag + " is not an obstruction");
      ++contracted;
    }
    for (const auto& e : census_ref()) {
      if (e.digon_count == 0) continue;
      MultiDigraph h = contract_digon(e.graph, find_digons(e.graph).front());
      o.require(is_obstruction(h).obstruction,
                "contraction of a census entry is not an obstruction");
      ++contracted;
    }
    int expansions = 0;
    for (const MultiDigraph& h : {doubled_cycle(3), circulant_z(5)}) {
      for (Vertex v = 0; v < h.vertex_count(); ++v)
        for (int pairing : {0, 1}) {
          if (!is_admissible_splitting(h, SplitSpec{v, pairing, 1})) continue;
          for (int p : {1, 2, 3}) {
            MultiDigraph g = expand_obstruction(h, {SplitSpec{v, pairing, p}});
            o.require(is_obstruction(g).obstruction,
                      "an admissible expansion is not an obstruction");
            ++expansions;
          }
        }
    }
    int full_splits = 0;
    for (const auto& g : c3_digon_expansions()) full_splits += g.vertex_count() == 6;
    o.require(full_splits == 2,
              "full 3-splits of the doubled 3-cycle: " + std::to_string(full_splits) +
                  " classes, expected 2");
    o.note(std::to_string(contracted) + " contractions, " + std::to_string(expansions) +
           " expansions");
    report("digon contraction and expansion round-trips", o);
  }

  // 7. census to 7 vertices
  index = 7;
  if (wanted(7)) {
    Outcome o;
    auto& census = census_ref();
    o.require(census_ms < 30.0 * 60.0 * 1000.0,
              "census took " + std::to_string(census_ms / 1000.0) + " s");
    std::set<std::string> census_forms;
    for (const auto& e : census) census_forms.insert(e.form.hex());
    for (const auto& [form, tag] : family_index(7))
      o.require(census_forms.count(form.hex()) == 1, "census missed " + tag);
    auto t5 = classify_antidigon_entries(census);
    o.require(t5.unclassified_count == 0,
              std::to_string(t5.unclassified_count) + " unclassified anti-digon entries");
    std::ostringstream d;
    std::map<int, int> per_n;
    for (const auto& e : census) ++per_n[e.vertex_count];
    d << census.size() << " obstruction classes (";
    bool first = true;
    for (auto [n, k] : per_n) {
      d << (first ? "" : ", ") << "n=" << n << ": " << k;
      first = false;
    }
    d << ") in " << static_cast<int>(census_ms / 1000.0) << " s; anti-digon classification rows "
      << t5.rows.size() << ", unclassified " << t5.unclassified_count;
    o.note(d.str());
    report("obstruction census to 7 vertices", o);
  }

  // 8. oracle agreement on every enumerated graph with <= 5 vertices
  index = 8;
  if (wanted(8)) {
    Outcome o;
    EnumConstraints open;
    int total = 0, agree = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& g : enumerate_quartic_eulerian(n, open)) {
        ++total;
        agree += is_diplanar(g).diplanar == oracles::naive_is_diplanar(g);
      }
    o.require(agree == total,
              std::to_string(agree) + "/" + std::to_string(total) + " agreements");
    o.note(std::to_string(agree) + "/" + std::to_string(total) +
           " graphs agree with the brute-force oracle");
    report("diplanarity oracle agreement (n <= 5)", o);
  }

  // 9. medial oracle: 100 random plane graphs
  index = 9;
  if (wanted(9)) {
    Outcome o;
    oracles::Rng rng(oracles::test_seed() + 200);
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
      MultiDigraph m = directed_medial(oracles::random_plane_graph(rng));
      good += is_diplanar(m).diplanar;
    }
    o.require(good == 100, std::to_string(good) + "/100 medials diplanar");
    o.note(std::to_string(good) + "/100");
    report("directed medials of plane graphs are diplanar", o);
  }

  // 10. census determinism across runs and worker counts
  index = 10;
  if (wanted(10)) {
    Outcome o;
    std::string reference = census_text(obstruction_census(5, census_constraints, 1));
    for (int run = 0; run < 2; ++run)
      o.require(census_text(obstruction_census(5, census_constraints, 1)) == reference,
                "repeat run differs");
    for (int jobs : {4, 8})
      o.require(census_text(obstruction_census(5, census_constraints, jobs)) == reference,
                "jobs=" + std::to_string(jobs) + " differs");
    report("census determinism across runs and job counts", o);
  }

  if (only == 0)
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
  return failures;
}
