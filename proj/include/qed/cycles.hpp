#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qed/canonical.hpp"
#include "qed/multidigraph.hpp"

namespace qed {

/// A vertex-simple directed cycle, stored as the arc sequence of one
/// traversal starting at the cycle's smallest vertex (which makes the
/// representation unique). Loops are 1-cycles, digons 2-cycles; parallel
/// arcs yield distinct cycles.
struct DirectedCycle {
  std::vector<ArcId> arcs;

  int length() const { return static_cast<int>(arcs.size()); }
  std::vector<ArcId> sorted_arcs() const {
    std::vector<ArcId> s = arcs;
    std::sort(s.begin(), s.end());
    return s;
  }
  friend bool operator==(const DirectedCycle&, const DirectedCycle&) = default;
};

/// Streams every vertex-simple directed cycle exactly once, in a fixed
/// deterministic order (anchored at the cycle's smallest vertex; arcs tried
/// in id order). Multigraph-aware: parallel arcs are distinct choices.
inline void for_each_directed_cycle(
    const MultiDigraph& g, const std::function<void(const DirectedCycle&)>& sink) {
  const int n = g.vertex_count();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::vector<ArcId> path;

  // Paths start at anchor s and may only visit vertices > s, so each cycle
  // is found once, rooted at its minimum vertex.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
    for (ArcId a : g.out_arcs(v)) {
      Vertex w = g.arc(a).head;
      if (w == s) {
        path.push_back(a);
        sink(DirectedCycle{path});
        path.pop_back();
      } else if (w > s && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = true;
        path.push_back(a);
        dfs(s, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = false;
      }
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    on_path[static_cast<std::size_t>(s)] = true;
    dfs(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
}

inline std::vector<DirectedCycle> enumerate_directed_cycles(const MultiDigraph& g) {
  std::vector<DirectedCycle> out;
  for_each_directed_cycle(g, [&](const DirectedCycle& c) { out.push_back(c); });
  return out;
}

/// Validates that c's arcs form a vertex-simple directed cycle of g.
inline bool is_directed_cycle_of(const MultiDigraph& g, const DirectedCycle& c) {
  if (c.arcs.empty()) return false;
  std::map<Vertex, ArcId> out_by_tail;
  std::map<Vertex, int> in_count;
  std::vector<bool> seen(static_cast<std::size_t>(g.arc_count()), false);
  for (ArcId a : c.arcs) {
    if (a < 0 || a >= g.arc_count() || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
    if (!out_by_tail.emplace(g.arc(a).tail, a).second) return false;
    if (++in_count[g.arc(a).head] > 1) return false;
  }
  // single closed walk through all arcs
  Vertex start = g.arc(c.arcs.front()).tail;
  Vertex v = start;
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    auto it = out_by_tail.find(v);
    if (it == out_by_tail.end()) return false;
    v = g.arc(it->second).head;
  }
  return v == start;
}

/// Removes the cycle's arcs and normalizes (suppressing the degree-2
/// vertices that appear and dropping isolated ones).
inline MultiDigraph remove_cycle(const MultiDigraph& g, const DirectedCycle& c) {
  if (!is_directed_cycle_of(g, c))
    throw std::invalid_argument("remove_cycle: not a directed cycle of the graph");
  std::vector<bool> drop(static_cast<std::size_t>(g.arc_count()), false);
  for (ArcId a : c.arcs) drop[static_cast<std::size_t>(a)] = true;
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (!drop[static_cast<std::size_t>(a)]) arcs.push_back(g.arc(a));
  return normalize(MultiDigraph(g.vertex_count(), std::move(arcs)));
}

/// The one-step predecessors of g under the cycle-removal partial order,
/// deduplicated by canonical form, in first-seen enumeration order.
inline std::vector<MultiDigraph> predecessors(const MultiDigraph& g) {
  if (!is_eulerian(g)) throw std::invalid_argument("predecessors: graph is not Eulerian");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 4)
      throw std::invalid_argument("predecessors: vertex degree exceeds 4");
  std::vector<MultiDigraph> out;
  std::map<CanonicalForm, bool> seen;
  for_each_directed_cycle(g, [&](const DirectedCycle& c) {
    MultiDigraph h = remove_cycle(g, c);
    if (seen.emplace(canonical_form(h), true).second) out.push_back(std::move(h));
  });
  return out;
}

/// Greedy peeling of E(g) into vertex-simple directed cycles. The returned
/// arc sets are pairwise disjoint and cover every arc.
inline std::vector<DirectedCycle> cycle_partition(const MultiDigraph& g) {
  if (!is_eulerian(g))
    throw std::invalid_argument("cycle_partition: graph is not Eulerian");
  std::vector<bool> used(static_cast<std::size_t>(g.arc_count()), false);
  std::vector<bool> on_path(static_cast<std::size_t>(g.arc_count()), false);
  std::vector<DirectedCycle> out;
  int remaining = g.arc_count();
  while (remaining > 0) {
    ArcId start = -1;
    for (ArcId a = 0; a < g.arc_count(); ++a)
      if (!used[static_cast<std::size_t>(a)]) {
        start = a;
        break;
      }
    // walk from the start arc; on the first vertex repeat, peel that cycle
    std::vector<ArcId> path{start};
    on_path[static_cast<std::size_t>(start)] = true;
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    pos[static_cast<std::size_t>(g.arc(start).tail)] = 0;
    std::vector<ArcId> peeled;
    for (;;) {
      Vertex v = g.arc(path.back()).head;
      int at = pos[static_cast<std::size_t>(v)];
      if (at >= 0) {
        for (std::size_t i = static_cast<std::size_t>(at); i < path.size(); ++i) {
          peeled.push_back(path[i]);
          used[static_cast<std::size_t>(path[i])] = true;
          --remaining;
        }
        break;
      }
      pos[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
      ArcId next = -1;
      for (ArcId a : g.out_arcs(v))
        if (!used[static_cast<std::size_t>(a)] && !on_path[static_cast<std::size_t>(a)]) {
          next = a;
          break;
        }
      if (next < 0)
        throw std::logic_error("cycle_partition: walk stuck in Eulerian graph");
      path.push_back(next);
      on_path[static_cast<std::size_t>(next)] = true;
    }
    for (ArcId a : path) on_path[static_cast<std::size_t>(a)] = false;
    // re-anchor the peeled cycle at its smallest vertex
    std::size_t first = 0;
    for (std::size_t i = 1; i < peeled.size(); ++i)
      if (g.arc(peeled[i]).tail < g.arc(peeled[first]).tail) first = i;
    std::rotate(peeled.begin(), peeled.begin() + static_cast<std::ptrdiff_t>(first),
                peeled.end());
    out.push_back(DirectedCycle{std::move(peeled)});
  }
  return out;
}

/// True iff a directed path from y to x exists (x == y counts, via the
/// empty path).
inline bool return_path_exists(const MultiDigraph& g, Vertex x, Vertex y) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw std::invalid_argument("return_path_exists: vertex out of range");
  if (x == y) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Vertex> stack{y};
  seen[static_cast<std::size_t>(y)] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      Vertex w = g.arc(a).head;
      if (w == x) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace qed
