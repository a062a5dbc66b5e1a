#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qed/multidigraph.hpp"
#include "qed/rotation.hpp"

namespace qed {

// Face tracing works on the combinatorial map induced by a rotation system:
// the face successor of dart d is succ[reverse(d)]. When rotations alternate
// in/out, out-darts map to out-darts and in-darts to in-darts, so the face
// orbits split into "forward" faces (directed cycles read along arc
// directions; each arc lies on exactly one) and "backward" faces. Euler's
// formula uses the total orbit count over all darts.

/// Witness of an embedding: alternating rotations, the traced directed
/// (forward) faces, and the per-component genus.
struct EmbeddingCertificate {
  RotationSystem rotation;
  std::vector<std::vector<ArcId>> faces;  // each a directed closed walk
  std::vector<int> component_genus;
  bool diplanar = false;
};

/// Directed faces: orbits of "arrive at the head along an arc, leave by the
/// out-dart following the in-dart in the rotation". Each arc appears in
/// exactly one face; every face is a directed closed walk.
inline std::vector<std::vector<ArcId>> trace_faces(const MultiDigraph& g,
                                                   const RotationSystem& rho) {
  if (!is_valid_rotation_system(g, rho, /*require_alternating=*/true))
    throw std::invalid_argument("trace_faces: rotation system invalid or not alternating");
  const auto succ = rotation_successors(g, rho);
  std::vector<bool> seen(static_cast<std::size_t>(g.arc_count()), false);
  std::vector<std::vector<ArcId>> faces;
  for (ArcId a0 = 0; a0 < g.arc_count(); ++a0) {
    if (seen[static_cast<std::size_t>(a0)]) continue;
    std::vector<ArcId> face;
    ArcId a = a0;
    while (!seen[static_cast<std::size_t>(a)]) {
      seen[static_cast<std::size_t>(a)] = true;
      face.push_back(a);
      Dart next = succ[static_cast<std::size_t>(in_dart(a))];
      a = dart_arc(next);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

/// Orientable genus of the cellular embedding induced by rho, one entry per
/// weak component (component order: smallest original vertex). A component
/// with no arcs is a lone vertex in a disk: genus 0.
inline std::vector<int> genus(const MultiDigraph& g, const RotationSystem& rho) {
  if (!is_valid_rotation_system(g, rho, /*require_alternating=*/true))
    throw std::invalid_argument("genus: rotation system invalid or not alternating");
  const auto succ = rotation_successors(g, rho);
  const auto comps = components(g);
  // trace orbits once globally, then attribute them to components
  std::vector<int> comp_of_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (Vertex v : comps[ci].vertex_map)
      comp_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(ci);
  std::vector<int> face_count(comps.size(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(2 * g.arc_count()), false);
  for (Dart d0 = 0; d0 < 2 * g.arc_count(); ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    ++face_count[static_cast<std::size_t>(
        comp_of_vertex[static_cast<std::size_t>(dart_vertex(g, d0))])];
    Dart d = d0;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      d = succ[static_cast<std::size_t>(dart_reverse(d))];
    }
  }
  std::vector<int> out(comps.size(), 0);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const int v = comps[ci].graph.vertex_count();
    const int e = comps[ci].graph.arc_count();
    const int f = e == 0 ? 1 : face_count[ci];
    const int euler = 2 - v + e - f;
    if (euler < 0 || euler % 2 != 0)
      throw std::logic_error("genus: inconsistent rotation system");
    out[ci] = euler / 2;
  }
  return out;
}

/// Outcome of the diplanarity search. On success `certificate` holds the
/// lexicographically least genus-0 system in assignment order; otherwise
/// `min_genus` is the least total genus over all alternating systems.
struct DiplanarityResult {
  bool diplanar = false;
  std::optional<EmbeddingCertificate> certificate;
  int min_genus = 0;
  std::uint64_t systems_examined = 0;
};

namespace detail {

struct ComponentScan {
  int min_genus = 0;
  std::uint64_t examined = 0;
  bool found_planar = false;
  std::vector<LocalRotation> planar_rotation;  // local vertex indexed
};

// Exhausts the alternating rotation systems of a connected graph, choice
// bits enumerated over degree-4 vertices in increasing vertex order. Stops
// early once genus 0 is found when `stop_at_zero`.
inline ComponentScan scan_component(const MultiDigraph& g, bool stop_at_zero) {
  const int n = g.vertex_count();
  const int e = g.arc_count();
  std::vector<std::vector<LocalRotation>> options(static_cast<std::size_t>(n));
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      options[static_cast<std::size_t>(v)] = {LocalRotation{}};
      continue;
    }
    options[static_cast<std::size_t>(v)] = alternating_rotations(g, v);
    if (options[static_cast<std::size_t>(v)].size() == 2) free_vertices.push_back(v);
  }
  if (free_vertices.size() > 30)
    throw std::invalid_argument("diplanarity search: too many degree-4 vertices");

  ComponentScan result;
  result.min_genus = std::numeric_limits<int>::max();
  std::vector<Dart> succ(static_cast<std::size_t>(2 * e), -1);
  auto install = [&](const LocalRotation& r) {
    const std::size_t k = r.darts.size();
    for (std::size_t i = 0; i < k; ++i)
      succ[static_cast<std::size_t>(r.darts[i])] = r.darts[(i + 1) % k];
  };
  for (Vertex v = 0; v < n; ++v)
    install(options[static_cast<std::size_t>(v)][0]);

  const std::uint64_t total = std::uint64_t{1} << free_vertices.size();
  std::vector<bool> seen(static_cast<std::size_t>(2 * e));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
      install(options[static_cast<std::size_t>(free_vertices[i])]
                     [(mask >> i) & 1ull]);
    ++result.examined;
    // count map faces
    std::fill(seen.begin(), seen.end(), false);
    int faces = 0;
    for (Dart d0 = 0; d0 < 2 * e; ++d0) {
      if (seen[static_cast<std::size_t>(d0)]) continue;
      ++faces;
      Dart d = d0;
      while (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        d = succ[static_cast<std::size_t>(dart_reverse(d))];
      }
    }
    const int f = e == 0 ? 1 : faces;
    const int gen = (2 - n + e - f) / 2;
    if (gen < result.min_genus) {
      result.min_genus = gen;
      if (gen == 0) {
        result.found_planar = true;
        result.planar_rotation.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
          result.planar_rotation[static_cast<std::size_t>(v)] =
              options[static_cast<std::size_t>(v)][0];
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
          result.planar_rotation[static_cast<std::size_t>(free_vertices[i])] =
              options[static_cast<std::size_t>(free_vertices[i])][(mask >> i) & 1ull];
        if (stop_at_zero) return result;
      }
    }
  }
  return result;
}

inline void check_degrees_at_most_4(const MultiDigraph& g, const char* who) {
  if (!is_eulerian(g)) throw std::invalid_argument(std::string(who) + ": graph is not Eulerian");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) > 2)
      throw std::invalid_argument(std::string(who) + ": vertex degree exceeds 4");
}

}  // namespace detail

/// Decides whether every weak component admits an alternating rotation
/// system of genus 0 (components embed in disjoint disks). Exhaustive over
/// the <= 2^(#degree-4 vertices) systems per component.
inline DiplanarityResult is_diplanar(const MultiDigraph& g) {
  detail::check_degrees_at_most_4(g, "is_diplanar");
  const auto comps = components(g);
  DiplanarityResult result;
  result.diplanar = true;
  std::vector<detail::ComponentScan> scans;
  int total_min = 0;
  for (const Component& c : comps) {
    auto scan = detail::scan_component(c.graph, /*stop_at_zero=*/true);
    result.systems_examined += scan.examined;
    total_min += scan.min_genus;
    if (!scan.found_planar) result.diplanar = false;
    scans.push_back(std::move(scan));
  }
  result.min_genus = total_min;
  if (!result.diplanar) return result;

  EmbeddingCertificate cert;
  cert.rotation.at.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Component& c = comps[ci];
    for (std::size_t lv = 0; lv < c.vertex_map.size(); ++lv) {
      LocalRotation global;
      for (Dart d : scans[ci].planar_rotation[lv].darts) {
        ArcId ga = c.arc_map[static_cast<std::size_t>(dart_arc(d))];
        global.darts.push_back(dart_is_out(d) ? out_dart(ga) : in_dart(ga));
      }
      cert.rotation.at[static_cast<std::size_t>(c.vertex_map[lv])] = std::move(global);
    }
  }
  cert.faces = trace_faces(g, cert.rotation);
  cert.component_genus = genus(g, cert.rotation);
  cert.diplanar = true;
  result.certificate = std::move(cert);
  return result;
}

/// Minimum over all alternating rotation systems of the sum of component
/// genera (per-component minima are independent).
inline int min_directed_genus(const MultiDigraph& g) {
  detail::check_degrees_at_most_4(g, "min_directed_genus");
  int total = 0;
  for (const Component& c : components(g))
    total += detail::scan_component(c.graph, /*stop_at_zero=*/true).min_genus;
  return total;
}

}  // namespace qed
