#pragma once

#include <stdexcept>
#include <vector>

#include "qed/embedding.hpp"
#include "qed/multidigraph.hpp"

namespace qed {

/// A digon: arcs uv and vu between distinct vertices. Loops do not count.
struct DigonRef {
  Vertex u = 0, v = 0;   // u < v
  ArcId arc_uv = -1;     // u -> v
  ArcId arc_vu = -1;     // v -> u
  friend bool operator==(const DigonRef&, const DigonRef&) = default;
};

/// An anti-digon: two parallel arcs u -> v between distinct vertices.
struct AntiDigonRef {
  Vertex u = 0, v = 0;   // both arcs run u -> v
  ArcId arc1 = -1, arc2 = -1;  // arc1 < arc2
  friend bool operator==(const AntiDigonRef&, const AntiDigonRef&) = default;
};

/// A vertex split: the four darts at `vertex` are paired into two (in, out)
/// couples; `pairing` selects one of the two possible pairings (in-arcs and
/// out-arcs each sorted by arc id; pairing 0 matches same ranks, pairing 1
/// crosses them). `digons` is the digon-path length used on expansion.
struct SplitSpec {
  Vertex vertex = 0;
  int pairing = 0;
  int digons = 1;
};

/// All digons, one entry per arc pair, ordered by (u, v, arc ids).
inline std::vector<DigonRef> find_digons(const MultiDigraph& g) {
  std::vector<DigonRef> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      std::vector<ArcId> uv, vu;
      for (ArcId a : g.out_arcs(u))
        if (g.arc(a).head == v) uv.push_back(a);
      for (ArcId a : g.out_arcs(v))
        if (g.arc(a).head == u) vu.push_back(a);
      for (ArcId a : uv)
        for (ArcId b : vu) out.push_back(DigonRef{u, v, a, b});
    }
  return out;
}

/// All anti-digons, one entry per unordered arc pair, ordered by
/// (tail, head, arc ids).
inline std::vector<AntiDigonRef> find_antidigons(const MultiDigraph& g) {
  std::vector<AntiDigonRef> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (u == v) continue;
      std::vector<ArcId> uv;
      for (ArcId a : g.out_arcs(u))
        if (g.arc(a).head == v) uv.push_back(a);
      std::sort(uv.begin(), uv.end());
      for (std::size_t i = 0; i < uv.size(); ++i)
        for (std::size_t j = i + 1; j < uv.size(); ++j)
          out.push_back(AntiDigonRef{u, v, uv[i], uv[j]});
    }
  return out;
}

/// Quotient G/D: identify the digon's endpoints and delete its two arcs.
/// Other arcs between the endpoints become loops at the merged vertex.
inline MultiDigraph contract_digon(const MultiDigraph& g, const DigonRef& d) {
  if (!is_quartic(g))
    throw std::invalid_argument("contract_digon: graph is not quartic");
  if (d.u == d.v || d.arc_uv < 0 || d.arc_uv >= g.arc_count() || d.arc_vu < 0 ||
      d.arc_vu >= g.arc_count() || g.arc(d.arc_uv).tail != d.u ||
      g.arc(d.arc_uv).head != d.v || g.arc(d.arc_vu).tail != d.v ||
      g.arc(d.arc_vu).head != d.u)
    throw std::invalid_argument("contract_digon: not a digon of the graph");
  const Vertex keep = std::min(d.u, d.v);
  const Vertex gone = std::max(d.u, d.v);
  auto remap = [&](Vertex w) { return w == gone ? keep : (w > gone ? w - 1 : w); };
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (a == d.arc_uv || a == d.arc_vu) continue;
    arcs.push_back(Arc{remap(g.arc(a).tail), remap(g.arc(a).head)});
  }
  return MultiDigraph(g.vertex_count() - 1, std::move(arcs));
}

/// Splits a degree-4 vertex into two degree-2 vertices per the pairing.
/// The first couple keeps the original index, the second becomes the new
/// last vertex. Degree-2 vertices are retained (no normalization), so a
/// digon path can be attached afterwards.
inline MultiDigraph split_vertex(const MultiDigraph& g, Vertex v, int pairing) {
  if (v < 0 || v >= g.vertex_count() || g.in_degree(v) != 2 || g.out_degree(v) != 2)
    throw std::invalid_argument("split_vertex: vertex does not have in = out = 2");
  if (pairing != 0 && pairing != 1)
    throw std::invalid_argument("split_vertex: pairing must be 0 or 1");
  std::vector<ArcId> ins(g.in_arcs(v).begin(), g.in_arcs(v).end());
  std::vector<ArcId> outs(g.out_arcs(v).begin(), g.out_arcs(v).end());
  std::sort(ins.begin(), ins.end());
  std::sort(outs.begin(), outs.end());
  const Vertex v1 = v;
  const Vertex v2 = g.vertex_count();
  // pairing 0: (ins[0], outs[0]) at v1; pairing 1: (ins[0], outs[1]) at v1.
  const ArcId in_at_v1 = ins[0];
  const ArcId out_at_v1 = pairing == 0 ? outs[0] : outs[1];
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    Arc e = g.arc(a);
    if (e.head == v) e.head = (a == in_at_v1) ? v1 : v2;
    if (e.tail == v) e.tail = (a == out_at_v1) ? v1 : v2;
    arcs.push_back(e);
  }
  return MultiDigraph(g.vertex_count() + 1, std::move(arcs));
}

inline MultiDigraph split_vertex(const MultiDigraph& g, const SplitSpec& spec) {
  return split_vertex(g, spec.vertex, spec.pairing);
}

/// A splitting is admissible when the split graph is diplanar.
inline bool is_admissible_splitting(const MultiDigraph& g, const SplitSpec& spec) {
  return is_diplanar(split_vertex(g, spec)).diplanar;
}

/// Adds a path of p digons between two degree-2 vertices (p-1 fresh
/// vertices chained by digons). Restores in = out = 2 at both endpoints.
inline MultiDigraph add_digon_path(const MultiDigraph& g, Vertex v1, Vertex v2, int p) {
  if (p < 1) throw std::invalid_argument("add_digon_path: path length must be >= 1");
  if (v1 == v2) throw std::invalid_argument("add_digon_path: endpoints coincide");
  for (Vertex v : {v1, v2})
    if (v < 0 || v >= g.vertex_count() || g.in_degree(v) != 1 || g.out_degree(v) != 1)
      throw std::invalid_argument("add_digon_path: endpoint does not have in = out = 1");
  std::vector<Arc> arcs = g.arcs();
  const int n = g.vertex_count();
  Vertex prev = v1;
  for (int i = 1; i <= p; ++i) {
    Vertex next = (i == p) ? v2 : n + i - 1;
    arcs.push_back(Arc{prev, next});
    arcs.push_back(Arc{next, prev});
    prev = next;
  }
  return MultiDigraph(n + p - 1, std::move(arcs));
}

/// Applies a sequence of splits at distinct vertices of h, each followed by
/// a digon path. Each split must be admissible (the split graph diplanar)
/// or the expansion is rejected.
inline MultiDigraph expand_obstruction(const MultiDigraph& h,
                                       const std::vector<SplitSpec>& specs) {
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].vertex < 0 || specs[i].vertex >= h.vertex_count())
      throw std::invalid_argument("expand_obstruction: split vertex out of range");
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i].vertex == specs[j].vertex)
        throw std::invalid_argument("expand_obstruction: split vertices must be distinct");
  }
  MultiDigraph g = h;
  for (const SplitSpec& spec : specs) {
    MultiDigraph split = split_vertex(g, spec);
    if (!is_diplanar(split).diplanar)
      throw std::invalid_argument("expand_obstruction: inadmissible split requested");
    g = add_digon_path(split, spec.vertex, split.vertex_count() - 1, spec.digons);
  }
  return g;
}

/// Contracts digons (smallest arc-id pair first) until none remain.
inline MultiDigraph digon_free_kernel(const MultiDigraph& g) {
  if (!is_quartic(g))
    throw std::invalid_argument("digon_free_kernel: graph is not quartic");
  MultiDigraph cur = g;
  for (;;) {
    auto digons = find_digons(cur);
    if (digons.empty()) return cur;
    const DigonRef* pick = &digons.front();
    for (const DigonRef& d : digons) {
      auto key = [](const DigonRef& x) {
        return std::pair{std::min(x.arc_uv, x.arc_vu), std::max(x.arc_uv, x.arc_vu)};
      };
      if (key(d) < key(*pick)) pick = &d;
    }
    cur = contract_digon(cur, *pick);
  }
}

}  // namespace qed
