#pragma once

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "qed/multidigraph.hpp"

namespace qed {

namespace detail {

// BFS max-flow on a dense capacity matrix, stopping once `limit` is reached.
inline int max_flow(std::vector<std::vector<int>> cap, int s, int t, int limit) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  while (flow < limit) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    prev[static_cast<std::size_t>(s)] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[static_cast<std::size_t>(t)] < 0) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (prev[static_cast<std::size_t>(w)] < 0 &&
            cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0) {
          prev[static_cast<std::size_t>(w)] = v;
          q.push(w);
        }
      }
    }
    if (prev[static_cast<std::size_t>(t)] < 0) break;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)])
      bottleneck = std::min(
          bottleneck, cap[static_cast<std::size_t>(prev[static_cast<std::size_t>(v)])]
                         [static_cast<std::size_t>(v)]);
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
      int u = prev[static_cast<std::size_t>(v)];
      cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= bottleneck;
      cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

inline std::vector<std::vector<int>> directed_capacities(const MultiDigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Arc& e : g.arcs())
    if (e.tail != e.head)
      ++cap[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)];
  return cap;
}

inline std::vector<std::vector<int>> undirected_capacities(const MultiDigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Arc& e : g.arcs()) {
    if (e.tail == e.head) continue;  // loops contribute nothing to cuts
    ++cap[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)];
    ++cap[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)];
  }
  return cap;
}

}  // namespace detail

/// Minimum s->t arc cut (Menger: maximum number of arc-disjoint s->t paths).
inline int min_directed_arc_cut(const MultiDigraph& g, Vertex s, Vertex t,
                                int limit = std::numeric_limits<int>::max()) {
  if (s == t) throw std::invalid_argument("min_directed_arc_cut: s == t");
  return detail::max_flow(detail::directed_capacities(g), s, t, limit);
}

/// Minimum undirected edge-cut size of the underlying multigraph, loops
/// ignored. Requires a weakly connected graph on at least 2 vertices.
inline int underlying_edge_connectivity(const MultiDigraph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("underlying_edge_connectivity: need >= 2 vertices");
  if (!is_weakly_connected(g))
    throw std::invalid_argument("underlying_edge_connectivity: graph is disconnected");
  const auto cap = detail::undirected_capacities(g);
  int best = std::numeric_limits<int>::max();
  for (Vertex t = 1; t < g.vertex_count(); ++t)
    best = std::min(best, detail::max_flow(cap, 0, t, best));
  return best;
}

/// True iff every ordered vertex pair (s, t) has a minimum s->t arc cut of
/// at least 2.
inline bool is_strongly_2_edge_connected(const MultiDigraph& g) {
  if (!is_eulerian(g))
    throw std::invalid_argument("is_strongly_2_edge_connected: graph is not Eulerian");
  const int n = g.vertex_count();
  if (n <= 1) return true;
  const auto cap = detail::directed_capacities(g);
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = 0; t < n; ++t)
      if (s != t && detail::max_flow(cap, s, t, 2) < 2) return false;
  return true;
}

}  // namespace qed
