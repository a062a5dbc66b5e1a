#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qed/canonical.hpp"
#include "qed/cycles.hpp"
#include "qed/embedding.hpp"
#include "qed/multidigraph.hpp"
#include "qed/obstruction.hpp"
#include "qed/rotation.hpp"
#include "qed/transform.hpp"

namespace qed {

/// Directed n-cycle with every arc doubled: n anti-digons around a cycle.
/// Vertices 0..n-1; arcs i -> i+1 (mod n), twice each.
inline MultiDigraph doubled_cycle(int n) {
  if (n < 3) throw std::invalid_argument("doubled_cycle: n must be >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back(Arc{i, (i + 1) % n});
    arcs.push_back(Arc{i, (i + 1) % n});
  }
  return MultiDigraph(n, std::move(arcs));
}

/// Directed cycle (1, 2, ..., 2n) plus the chord i -> i+n for even i and
/// the back-arc i -> i-1 for odd i. The construction counts labels from 1;
/// stored vertices are 0-based (label p is vertex p-1). Has exactly n
/// digons, one per odd label.
inline MultiDigraph mobius_ladder_plus(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("mobius_ladder_plus: n must be odd and >= 3");
  const int m = 2 * n;
  auto vx = [&](int label_1based) { return ((label_1based - 1) % m + m) % m; };
  std::vector<Arc> arcs;
  for (int p = 1; p <= m; ++p) arcs.push_back(Arc{vx(p), vx(p + 1)});
  for (int p = 2; p <= m; p += 2) arcs.push_back(Arc{vx(p), vx(p + n)});
  for (int p = 1; p <= m; p += 2) arcs.push_back(Arc{vx(p), vx(p - 1)});
  return MultiDigraph(m, std::move(arcs));
}

/// Cayley digraph of Z_n (n = 2k+1) with generating set {1, k}:
/// arcs i -> i+1 and i -> i+k (mod n). For n = 3 this doubles the cycle.
inline MultiDigraph circulant_z(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("circulant_z: n must be odd and >= 3");
  const int k = (n - 1) / 2;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back(Arc{i, (i + 1) % n});
    arcs.push_back(Arc{i, (i + k) % n});
  }
  return MultiDigraph(n, std::move(arcs));
}

/// Cyclic sequence of n anti-digons s_i => t_i with mutual links between
/// consecutive ones: t_i -> s_{i+1} and t_{i+1} -> s_i (indices mod n).
/// Vertices: s_i = 2i, t_i = 2i+1. For n = 2 the links double up and the
/// construction degenerates to the doubled 4-cycle.
inline MultiDigraph anti_ladder(int n) {
  if (n < 2) throw std::invalid_argument("anti_ladder: n must be >= 2");
  auto s = [](int i) { return 2 * i; };
  auto t = [](int i) { return 2 * i + 1; };
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back(Arc{s(i), t(i)});
    arcs.push_back(Arc{s(i), t(i)});
  }
  for (int i = 0; i < n; ++i) {
    arcs.push_back(Arc{t(i), s((i + 1) % n)});
    arcs.push_back(Arc{t((i + 1) % n), s(i)});
  }
  return MultiDigraph(2 * n, std::move(arcs));
}

/// Cyclic chain of p anti-digon runs joined at pinch vertices. Run i holds
/// runs[i] anti-digons a => b, consecutive ones mutually linked (b -> a',
/// b' -> a); the run's first anti-digon attaches to pinch x_i by x_i -> a
/// and b -> x_i, its last to x_{i+1} by b -> x_{i+1} and x_{i+1} -> a.
/// Vertices: pinches 0..p-1 first, then a,b pairs run by run.
inline MultiDigraph n_chain(const std::vector<int>& runs) {
  const int p = static_cast<int>(runs.size());
  if (p < 1) throw std::invalid_argument("n_chain: need at least one run");
  for (int ni : runs)
    if (ni < 1) throw std::invalid_argument("n_chain: run lengths must be >= 1");
  const int total = std::accumulate(runs.begin(), runs.end(), 0);
  const int n = p + 2 * total;
  std::vector<Arc> arcs;
  int next = p;
  for (int i = 0; i < p; ++i) {
    const int x_left = i;
    const int x_right = (i + 1) % p;
    std::vector<std::pair<int, int>> digon_pair;  // (a, b) per anti-digon
    for (int j = 0; j < runs[static_cast<std::size_t>(i)]; ++j) {
      digon_pair.emplace_back(next, next + 1);
      next += 2;
    }
    for (auto [a, b] : digon_pair) {
      arcs.push_back(Arc{a, b});
      arcs.push_back(Arc{a, b});
    }
    for (std::size_t j = 0; j + 1 < digon_pair.size(); ++j) {
      arcs.push_back(Arc{digon_pair[j].second, digon_pair[j + 1].first});
      arcs.push_back(Arc{digon_pair[j + 1].second, digon_pair[j].first});
    }
    arcs.push_back(Arc{x_left, digon_pair.front().first});
    arcs.push_back(Arc{digon_pair.front().second, x_left});
    arcs.push_back(Arc{digon_pair.back().second, x_right});
    arcs.push_back(Arc{x_right, digon_pair.back().first});
  }
  return MultiDigraph(n, std::move(arcs));
}

/// A connected undirected graph with a rotation system: each undirected
/// edge is stored as one arc of arbitrary orientation, whose two darts are
/// its two ends.
struct PlaneGraph {
  MultiDigraph edges;
  RotationSystem rotation;
};

namespace detail {

// Faces of an undirected combinatorial map: orbits of d -> succ[reverse(d)],
// each returned as the dart cycle starting at its smallest dart.
inline std::vector<std::vector<Dart>> undirected_map_faces(const MultiDigraph& g,
                                                           const RotationSystem& rho) {
  const auto succ = rotation_successors(g, rho);
  std::vector<bool> seen(static_cast<std::size_t>(2 * g.arc_count()), false);
  std::vector<std::vector<Dart>> faces;
  for (Dart d0 = 0; d0 < 2 * g.arc_count(); ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    std::vector<Dart> face;
    Dart d = d0;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      face.push_back(d);
      d = succ[static_cast<std::size_t>(dart_reverse(d))];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace detail

/// Directed medial: one vertex per edge of the plane graph, one arc per
/// consecutive edge pair along a face, all facial cycles directed
/// coherently. The input must be connected with a genus-0 rotation system;
/// the output is a quartic Eulerian digraph, diplanar by construction.
inline MultiDigraph directed_medial(const PlaneGraph& pg) {
  const MultiDigraph& g = pg.edges;
  if (g.arc_count() == 0)
    throw std::invalid_argument("directed_medial: graph has no edges");
  if (!is_weakly_connected(g))
    throw std::invalid_argument("directed_medial: graph is disconnected");
  if (!is_valid_rotation_system(g, pg.rotation, /*require_alternating=*/false))
    throw std::invalid_argument("directed_medial: invalid rotation system");
  const auto faces = detail::undirected_map_faces(g, pg.rotation);
  const int euler = g.vertex_count() - g.arc_count() + static_cast<int>(faces.size());
  if (euler != 2)
    throw std::invalid_argument("directed_medial: rotation system is not genus 0");
  std::vector<Arc> arcs;
  for (const auto& face : faces) {
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i)
      arcs.push_back(Arc{dart_arc(face[i]), dart_arc(face[(i + 1) % k])});
  }
  return MultiDigraph(g.arc_count(), std::move(arcs));
}

/// Plane cycle on n vertices (rotations are forced at degree-2 vertices).
inline PlaneGraph plane_cycle(int n) {
  if (n < 3) throw std::invalid_argument("plane_cycle: n must be >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back(Arc{i, (i + 1) % n});
  MultiDigraph g(n, std::move(arcs));
  RotationSystem rho;
  rho.at.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    rho.at[static_cast<std::size_t>(v)] = LocalRotation{darts_at(g, v)};
  PlaneGraph pg{std::move(g), std::move(rho)};
  return pg;
}

/// Convex polygon 0..n-1 plus non-crossing diagonals; the rotation at each
/// vertex lists neighbors in circular index order, which is planar for
/// convex position. Throws (via directed_medial's Euler check downstream)
/// only if the diagonals cross.
inline PlaneGraph plane_polygon_with_diagonals(
    int n, const std::vector<std::pair<int, int>>& diagonals) {
  if (n < 3) throw std::invalid_argument("plane_polygon: n must be >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back(Arc{i, (i + 1) % n});
  for (auto [a, b] : diagonals) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("plane_polygon: bad diagonal");
    arcs.push_back(Arc{std::min(a, b), std::max(a, b)});
  }
  MultiDigraph g(n, std::move(arcs));
  RotationSystem rho;
  rho.at.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Dart> ds = darts_at(g, v);
    std::stable_sort(ds.begin(), ds.end(), [&](Dart x, Dart y) {
      auto other = [&](Dart d) {
        const Arc& e = g.arc(dart_arc(d));
        Vertex w = dart_is_out(d) ? e.head : e.tail;
        return (w - v + n) % n;
      };
      return other(x) < other(y);
    });
    rho.at[static_cast<std::size_t>(v)] = LocalRotation{std::move(ds)};
  }
  PlaneGraph pg{std::move(g), std::move(rho)};
  return pg;
}

/// Plane K4: outer triangle 0,1,2 with 3 in the center.
inline PlaneGraph plane_k4() {
  // edges: 0-1, 1-2, 2-0, 0-3, 1-3, 2-3
  MultiDigraph g(4, {Arc{0, 1}, Arc{1, 2}, Arc{2, 0}, Arc{0, 3}, Arc{1, 3}, Arc{2, 3}});
  RotationSystem rho;
  rho.at = {
      LocalRotation{{out_dart(0), out_dart(3), in_dart(2)}},   // 0: 1, 3, 2
      LocalRotation{{out_dart(1), out_dart(4), in_dart(0)}},   // 1: 2, 3, 0
      LocalRotation{{out_dart(2), out_dart(5), in_dart(1)}},   // 2: 0, 3, 1
      LocalRotation{{in_dart(3), in_dart(4), in_dart(5)}},     // 3: 0, 1, 2
  };
  PlaneGraph pg{std::move(g), std::move(rho)};
  const auto faces = detail::undirected_map_faces(pg.edges, pg.rotation);
  if (pg.edges.vertex_count() - pg.edges.arc_count() + static_cast<int>(faces.size()) != 2)
    throw std::logic_error("plane_k4: embedding is not planar");
  return pg;
}

/// The planar all-faces-directed orientation of the octahedron (the medial
/// of the plane tetrahedron) with the arcs of two facial triangles sharing
/// exactly one vertex reversed. Of the octahedron's directed triangles,
/// four survive the reversal (the two reversed ones and the two coherent
/// faces untouched by it); removing any one of them leaves three digons.
inline MultiDigraph oriented_k222() {
  MultiDigraph medial = directed_medial(plane_k4());
  std::vector<DirectedCycle> triangles;
  for (const DirectedCycle& c : enumerate_directed_cycles(medial))
    if (c.length() == 3) triangles.push_back(c);
  auto vertices_of = [&](const DirectedCycle& c) {
    std::vector<Vertex> vs;
    for (ArcId a : c.arcs) vs.push_back(medial.arc(a).tail);
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  for (std::size_t i = 0; i < triangles.size(); ++i)
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      std::vector<Vertex> vi = vertices_of(triangles[i]);
      std::vector<Vertex> vj = vertices_of(triangles[j]);
      std::vector<Vertex> common;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      std::vector<Arc> arcs = medial.arcs();
      for (const DirectedCycle* t : {&triangles[i], &triangles[j]})
        for (ArcId a : t->arcs)
          std::swap(arcs[static_cast<std::size_t>(a)].tail,
                    arcs[static_cast<std::size_t>(a)].head);
      MultiDigraph result(medial.vertex_count(), std::move(arcs));
      int directed_triangles = 0;
      for (const DirectedCycle& c : enumerate_directed_cycles(result))
        directed_triangles += (c.length() == 3);
      if (!is_quartic(result) || directed_triangles != 4)
        throw std::logic_error("oriented_k222: construction check failed");
      return result;
    }
  throw std::logic_error("oriented_k222: no vertex-sharing triangle pair found");
}

/// All Eulerian (2-in/2-out) orientations of K_{4,4} up to isomorphism that
/// are diplanarity obstructions, ordered by canonical form. Left vertices
/// are 0..3, right vertices 4..7.
inline std::vector<MultiDigraph> oriented_k44_candidates() {
  std::map<CanonicalForm, MultiDigraph> classes;
  // row/column sums 2 in the 4x4 "edge directed left->right" matrix
  for (int bits = 0; bits < (1 << 16); ++bits) {
    bool ok = true;
    for (int l = 0; l < 4 && ok; ++l) {
      int row = 0;
      for (int r = 0; r < 4; ++r) row += (bits >> (4 * l + r)) & 1;
      ok = row == 2;
    }
    for (int r = 0; r < 4 && ok; ++r) {
      int col = 0;
      for (int l = 0; l < 4; ++l) col += (bits >> (4 * l + r)) & 1;
      ok = col == 2;
    }
    if (!ok) continue;
    std::vector<Arc> arcs;
    for (int l = 0; l < 4; ++l)
      for (int r = 0; r < 4; ++r) {
        if ((bits >> (4 * l + r)) & 1)
          arcs.push_back(Arc{l, 4 + r});
        else
          arcs.push_back(Arc{4 + r, l});
      }
    MultiDigraph g(8, std::move(arcs));
    classes.emplace(canonical_form(g), std::move(g));
  }
  std::vector<MultiDigraph> out;
  for (const auto& [form, g] : classes)
    if (is_obstruction(g).obstruction) out.push_back(g);
  return out;
}

/// All obstructions reachable from the doubled 3-cycle by admissible
/// splittings of 1, 2, or 3 distinct vertices with a single digon each,
/// deduplicated by canonical form (kept in first-seen order).
inline std::vector<MultiDigraph> c3_digon_expansions() {
  const MultiDigraph base = doubled_cycle(3);
  std::vector<MultiDigraph> out;
  std::map<CanonicalForm, bool> seen;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < 3; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    const int k = static_cast<int>(verts.size());
    for (int pairings = 0; pairings < (1 << k); ++pairings) {
      std::vector<SplitSpec> specs;
      for (int i = 0; i < k; ++i)
        specs.push_back(SplitSpec{verts[static_cast<std::size_t>(i)],
                                  (pairings >> i) & 1, 1});
      MultiDigraph expanded;
      try {
        expanded = expand_obstruction(base, specs);
      } catch (const std::invalid_argument&) {
        continue;  // inadmissible split
      }
      if (seen.emplace(canonical_form(expanded), true).second)
        out.push_back(std::move(expanded));
    }
  }
  return out;
}

/// Discriminates the two full 3-split expansions of the doubled 3-cycle:
/// the prism's underlying simple graph has a triangle, the Moebius
/// ladder's (K_{3,3}) does not.
inline bool underlying_simple_has_triangle(const MultiDigraph& g) {
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.undirected_multiplicity(a, b) > 0 &&
            g.undirected_multiplicity(b, c) > 0 &&
            g.undirected_multiplicity(a, c) > 0)
          return true;
  return false;
}

}  // namespace qed
