#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "qed/canonical.hpp"
#include "qed/families.hpp"
#include "qed/multidigraph.hpp"
#include "qed/obstruction.hpp"
#include "qed/transform.hpp"

namespace qed {

struct EnumConstraints {
  bool loop_free = false;
  bool max_undirected_multiplicity_2 = false;
  bool connected_only = false;
};

namespace detail {

// Out-pair assignment state for the orderly enumeration: vertex v emits two
// arcs to an unordered target pair (a <= b). A completed assignment is kept
// iff the graph equals the canonically-labeled representative of its class,
// so every isomorphism class surfaces exactly once.
struct QuarticEnum {
  int n = 0;
  EnumConstraints constraints;
  const std::function<void(const MultiDigraph&)>* sink = nullptr;
  const std::pair<int, int>* forced_first = nullptr;  // shard prefix, if any
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> mult;
  std::vector<int> indeg;

  explicit QuarticEnum(int n_, EnumConstraints c,
                       const std::function<void(const MultiDigraph&)>* s)
      : n(n_),
        constraints(c),
        sink(s),
        pairs(static_cast<std::size_t>(n_)),
        mult(static_cast<std::size_t>(n_),
             std::vector<int>(static_cast<std::size_t>(n_), 0)),
        indeg(static_cast<std::size_t>(n_), 0) {}

  bool can_receive(int v, int t, int count) const {
    if (indeg[static_cast<std::size_t>(t)] + count > 2) return false;
    if (t == v) return !constraints.loop_free;
    if (constraints.max_undirected_multiplicity_2 &&
        mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] +
                mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] +
                count >
            2)
      return false;
    return true;
  }

  // Every vertex still short of in-degree 2 must be suppliable by the
  // out-pairs of vertices > v.
  bool feasible_after(int v) const {
    for (int u = 0; u < n; ++u) {
      int deficit = 2 - indeg[static_cast<std::size_t>(u)];
      if (deficit <= 0) continue;
      int supply = 0;
      for (int w = v + 1; w < n && supply < deficit; ++w) {
        if (w == u) {
          if (!constraints.loop_free) supply += 2;
          continue;
        }
        int room = 2;
        if (constraints.max_undirected_multiplicity_2)
          room = std::min(
              room, 2 - mult[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] -
                        mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]);
        supply += std::max(0, room);
      }
      if (supply < deficit) return false;
    }
    return true;
  }

  void emit() const {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
      arcs.push_back(Arc{v, pairs[static_cast<std::size_t>(v)].first});
      arcs.push_back(Arc{v, pairs[static_cast<std::size_t>(v)].second});
    }
    MultiDigraph g(n, std::move(arcs));
    if (constraints.connected_only && !is_weakly_connected(g)) return;
    // cheap necessary condition first: a canonical representative lists the
    // refinement color classes in color order
    const auto colors = refinement_colors(g);
    for (int v = 0; v + 1 < n; ++v)
      if (colors[static_cast<std::size_t>(v)] > colors[static_cast<std::size_t>(v + 1)])
        return;
    if (!(canonical_graph(g) == g)) return;
    (*sink)(g);
  }

  void dfs(int v) {
    if (v == n) {
      emit();
      return;
    }
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        if (v == 0 && forced_first && (a != forced_first->first || b != forced_first->second))
          continue;
        if (a == b) {
          if (!can_receive(v, a, 2)) continue;
        } else {
          if (!can_receive(v, a, 1) || !can_receive(v, b, 1)) continue;
        }
        pairs[static_cast<std::size_t>(v)] = {a, b};
        indeg[static_cast<std::size_t>(a)] += 1;
        indeg[static_cast<std::size_t>(b)] += 1;
        mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)] += 1;
        mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)] += 1;
        if (feasible_after(v)) dfs(v + 1);
        mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)] -= 1;
        mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)] -= 1;
        indeg[static_cast<std::size_t>(a)] -= 1;
        indeg[static_cast<std::size_t>(b)] -= 1;
      }
  }
};

}  // namespace detail

/// Streams exactly one representative (the canonically-labeled one) per
/// isomorphism class of n-vertex quartic Eulerian multidigraphs meeting the
/// constraints, in a fixed deterministic order.
inline void enumerate_quartic_eulerian(
    int n, const EnumConstraints& constraints,
    const std::function<void(const MultiDigraph&)>& sink) {
  if (n < 0) throw std::invalid_argument("enumerate_quartic_eulerian: negative n");
  if (n == 0) return;
  detail::QuarticEnum e(n, constraints, &sink);
  e.dfs(0);
}

inline std::vector<MultiDigraph> enumerate_quartic_eulerian(
    int n, const EnumConstraints& constraints) {
  std::vector<MultiDigraph> out;
  enumerate_quartic_eulerian(n, constraints,
                             [&](const MultiDigraph& g) { out.push_back(g); });
  return out;
}

/// One census row: an obstruction isomorphism class with its structural
/// counts and family classification.
struct CensusEntry {
  MultiDigraph graph;  // canonical representative
  CanonicalForm form;
  int vertex_count = 0;
  int digon_count = 0;
  int antidigon_count = 0;
  bool obstruction = true;
  std::string family;  // family tag or "unclassified"
};

/// Canonical forms of every named family member on at most max_n vertices,
/// tagged. Insertion order resolves coincidences (the doubled 3-cycle, Z_3
/// and the one-run chain are a single class, tagged as the doubled cycle).
inline std::vector<std::pair<CanonicalForm, std::string>> family_index(int max_n) {
  std::vector<std::pair<CanonicalForm, std::string>> index;
  std::map<CanonicalForm, bool> seen;
  auto add = [&](const MultiDigraph& g, const std::string& tag) {
    if (g.vertex_count() > max_n) return;
    CanonicalForm f = canonical_form(g);
    if (seen.emplace(f, true).second) index.emplace_back(std::move(f), tag);
  };
  for (int n = 3; n <= max_n; ++n)
    add(doubled_cycle(n), "doubled-cycle(" + std::to_string(n) + ")");
  for (int n = 5; n <= max_n; n += 2)
    add(circulant_z(n), "z(" + std::to_string(n) + ")");
  for (int n = 3; 2 * n <= max_n; n += 2)
    add(mobius_ladder_plus(n), "mobius-ladder+(" + std::to_string(n) + ")");
  if (max_n >= 6) add(oriented_k222(), "k222");
  if (max_n >= 8) {
    int i = 0;
    for (const MultiDigraph& g : oriented_k44_candidates())
      add(g, "k44[" + std::to_string(i++) + "]");
  }
  for (int n = 2; 2 * n <= max_n; ++n)
    add(anti_ladder(n), "anti-ladder(" + std::to_string(n) + ")");
  {
    std::vector<int> runs;
    std::function<void()> build = [&]() {
      if (!runs.empty()) {
        int verts = static_cast<int>(runs.size()) +
                    2 * std::accumulate(runs.begin(), runs.end(), 0);
        if (verts <= max_n) {
          std::string tag = "nchain(";
          for (std::size_t i = 0; i < runs.size(); ++i)
            tag += (i ? "," : "") + std::to_string(runs[i]);
          tag += ")";
          add(n_chain(runs), tag);
        }
      }
      int base = static_cast<int>(runs.size()) + 1 +
                 2 * std::accumulate(runs.begin(), runs.end(), 0);
      for (int next = 1; base + 2 * next <= max_n; ++next) {
        runs.push_back(next);
        build();
        runs.pop_back();
      }
    };
    build();
  }
  if (max_n >= 4)
    for (const MultiDigraph& g : c3_digon_expansions()) {
      if (g.vertex_count() == 6)
        add(g, underlying_simple_has_triangle(g) ? "p3+" : "m3+");
      else
        add(g, "c3-expansion");
    }
  return index;
}

/// Obstruction census: every obstruction isomorphism class on 1..n_max
/// vertices under the constraints, classified against the family
/// generators. Entries are sorted by (vertex count, canonical form);
/// output is identical for any worker count.
inline std::vector<CensusEntry> obstruction_census(int n_max,
                                                   const EnumConstraints& constraints,
                                                   int jobs = 1) {
  if (jobs < 1) jobs = 1;
  const auto families = family_index(n_max);
  auto classify = [&](const CanonicalForm& f) -> std::string {
    for (const auto& [form, tag] : families)
      if (form == f) return tag;
    return "unclassified";
  };

  std::vector<CensusEntry> all;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::vector<CensusEntry>> shards;
    auto scan = [&](const MultiDigraph& g, std::vector<CensusEntry>& out) {
      // obstructions are connected, so the connected_only pruning done by
      // the enumerator never hides one
      if (!is_obstruction(g).obstruction) return;
      CensusEntry e;
      e.graph = g;
      e.form = canonical_form(g);
      e.vertex_count = n;
      e.digon_count = static_cast<int>(find_digons(g).size());
      e.antidigon_count = static_cast<int>(find_antidigons(g).size());
      e.obstruction = true;
      e.family = classify(e.form);
      out.push_back(std::move(e));
    };

    if (jobs == 1) {
      shards.resize(1);
      enumerate_quartic_eulerian(n, constraints, [&](const MultiDigraph& g) {
        scan(g, shards[0]);
      });
    } else {
      // shard the generation tree by vertex 0's out-pair
      std::vector<std::pair<int, int>> prefixes;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) prefixes.emplace_back(a, b);
      shards.resize(prefixes.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= prefixes.size()) return;
          std::function<void(const MultiDigraph&)> sink =
              [&, i](const MultiDigraph& g) { scan(g, shards[i]); };
          detail::QuarticEnum e(n, constraints, &sink);
          e.forced_first = &prefixes[i];
          e.dfs(0);
        }
      };
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    std::vector<CensusEntry> level;
    for (auto& s : shards)
      for (auto& e : s) level.push_back(std::move(e));
    std::sort(level.begin(), level.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.form < b.form; });
    for (auto& e : level) all.push_back(std::move(e));
  }
  return all;
}

/// Classification of the digon-free census entries that contain an
/// anti-digon: each must be a doubled cycle, an anti-ladder or a chain of
/// anti-digon runs. An unclassified row signals a reconstruction failure.
struct AntiDigonClassRow {
  CanonicalForm form;
  int vertex_count = 0;
  std::string family;
  bool classified = false;
};

struct AntiDigonClassification {
  std::vector<AntiDigonClassRow> rows;
  int unclassified_count = 0;
};

inline AntiDigonClassification classify_antidigon_entries(const std::vector<CensusEntry>& census) {
  int max_n = 0;
  for (const CensusEntry& e : census) max_n = std::max(max_n, e.vertex_count);
  // fresh index restricted to the three families named by the classification
  std::vector<std::pair<CanonicalForm, std::string>> index;
  for (int n = 3; n <= max_n; ++n)
    index.emplace_back(canonical_form(doubled_cycle(n)),
                       "doubled-cycle(" + std::to_string(n) + ")");
  for (int n = 2; 2 * n <= max_n; ++n)
    index.emplace_back(canonical_form(anti_ladder(n)),
                       "anti-ladder(" + std::to_string(n) + ")");
  {
    std::vector<int> runs;
    std::function<void()> build = [&]() {
      if (!runs.empty()) {
        int verts = static_cast<int>(runs.size()) +
                    2 * std::accumulate(runs.begin(), runs.end(), 0);
        if (verts <= max_n) {
          std::string tag = "nchain(";
          for (std::size_t i = 0; i < runs.size(); ++i)
            tag += (i ? "," : "") + std::to_string(runs[i]);
          tag += ")";
          index.emplace_back(canonical_form(n_chain(runs)), tag);
        }
      }
      int base = static_cast<int>(runs.size()) + 1 +
                 2 * std::accumulate(runs.begin(), runs.end(), 0);
      for (int next = 1; base + 2 * next <= max_n; ++next) {
        runs.push_back(next);
        build();
        runs.pop_back();
      }
    };
    build();
  }

  AntiDigonClassification report;
  for (const CensusEntry& e : census) {
    if (e.digon_count != 0 || e.antidigon_count < 1) continue;
    AntiDigonClassRow row;
    row.form = e.form;
    row.vertex_count = e.vertex_count;
    for (const auto& [form, tag] : index)
      if (form == e.form) {
        row.family = tag;
        row.classified = true;
        break;
      }
    if (!row.classified) {
      row.family = "unclassified";
      ++report.unclassified_count;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qed
