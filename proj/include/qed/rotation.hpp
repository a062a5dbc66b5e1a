#pragma once

#include <stdexcept>
#include <vector>

#include "qed/multidigraph.hpp"

namespace qed {

// Darts are arc ends: arc a yields the out-dart 2a at its tail and the
// in-dart 2a+1 at its head. A loop places both darts at the same vertex.
using Dart = int;

inline Dart out_dart(ArcId a) { return 2 * a; }
inline Dart in_dart(ArcId a) { return 2 * a + 1; }
inline ArcId dart_arc(Dart d) { return d >> 1; }
inline bool dart_is_out(Dart d) { return (d & 1) == 0; }
inline Dart dart_reverse(Dart d) { return d ^ 1; }

inline Vertex dart_vertex(const MultiDigraph& g, Dart d) {
  const Arc& e = g.arc(dart_arc(d));
  return dart_is_out(d) ? e.tail : e.head;
}

/// Cyclic sequence of the darts at one vertex. The stored order is one
/// fixed representative of the cyclic class.
struct LocalRotation {
  std::vector<Dart> darts;
  friend bool operator==(const LocalRotation&, const LocalRotation&) = default;
};

/// One LocalRotation per vertex, covering every dart exactly once.
struct RotationSystem {
  std::vector<LocalRotation> at;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

inline std::vector<Dart> darts_at(const MultiDigraph& g, Vertex v) {
  std::vector<Dart> ds;
  for (ArcId a : g.out_arcs(v)) ds.push_back(out_dart(a));
  for (ArcId a : g.in_arcs(v)) ds.push_back(in_dart(a));
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline bool rotation_alternates(const LocalRotation& r) {
  const std::size_t k = r.darts.size();
  if (k % 2 != 0) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (dart_is_out(r.darts[i]) == dart_is_out(r.darts[(i + 1) % k])) return false;
  return true;
}

/// All in/out-alternating cyclic dart orders at v, up to cyclic rotation
/// (reflections count as distinct): exactly 1 for degree 2, exactly 2 for
/// degree 4. Other degrees are rejected.
inline std::vector<LocalRotation> alternating_rotations(const MultiDigraph& g,
                                                        Vertex v) {
  std::vector<Dart> outs, ins;
  for (ArcId a : g.out_arcs(v)) outs.push_back(out_dart(a));
  for (ArcId a : g.in_arcs(v)) ins.push_back(in_dart(a));
  std::sort(outs.begin(), outs.end());
  std::sort(ins.begin(), ins.end());
  if (outs.size() != ins.size())
    throw std::invalid_argument("alternating_rotations: in/out imbalance at vertex");
  if (outs.size() == 1) return {LocalRotation{{outs[0], ins[0]}}};
  if (outs.size() == 2)
    return {LocalRotation{{outs[0], ins[0], outs[1], ins[1]}},
            LocalRotation{{outs[0], ins[1], outs[1], ins[0]}}};
  throw std::invalid_argument("alternating_rotations: vertex degree not 2 or 4");
}

/// Checks that rho assigns every dart exactly once, at its proper vertex,
/// optionally requiring in/out alternation everywhere.
inline bool is_valid_rotation_system(const MultiDigraph& g, const RotationSystem& rho,
                                     bool require_alternating) {
  if (static_cast<int>(rho.at.size()) != g.vertex_count()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(2 * g.arc_count()), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const LocalRotation& r = rho.at[static_cast<std::size_t>(v)];
    if (static_cast<int>(r.darts.size()) != g.degree(v)) return false;
    for (Dart d : r.darts) {
      if (d < 0 || d >= 2 * g.arc_count()) return false;
      if (seen[static_cast<std::size_t>(d)]) return false;
      seen[static_cast<std::size_t>(d)] = true;
      if (dart_vertex(g, d) != v) return false;
    }
    if (require_alternating && !r.darts.empty() && !rotation_alternates(r))
      return false;
  }
  return true;
}

/// Rotation successor table: succ[d] is the dart following d in the cyclic
/// order at d's vertex.
inline std::vector<Dart> rotation_successors(const MultiDigraph& g,
                                             const RotationSystem& rho) {
  std::vector<Dart> succ(static_cast<std::size_t>(2 * g.arc_count()), -1);
  for (const LocalRotation& r : rho.at) {
    const std::size_t k = r.darts.size();
    for (std::size_t i = 0; i < k; ++i)
      succ[static_cast<std::size_t>(r.darts[i])] = r.darts[(i + 1) % k];
  }
  return succ;
}

}  // namespace qed
