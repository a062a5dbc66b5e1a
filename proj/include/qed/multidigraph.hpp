#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qed {

using Vertex = int;
using ArcId = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Vertex-indexed multidigraph. Arc ids are positions in the arc list;
/// parallel arcs and loops are allowed. Arc order carries identity only,
/// never semantics. Immutable after construction.
class MultiDigraph {
 public:
  MultiDigraph() = default;

  MultiDigraph(int vertex_count, std::vector<Arc> arcs)
      : vertex_count_(vertex_count),
        arcs_(std::move(arcs)),
        out_(static_cast<std::size_t>(std::max(vertex_count, 0))),
        in_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (ArcId a = 0; a < static_cast<ArcId>(arcs_.size()); ++a) {
      const Arc& e = arcs_[static_cast<std::size_t>(a)];
      if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 ||
          e.head >= vertex_count_)
        throw std::invalid_argument("arc endpoint out of range");
      out_[static_cast<std::size_t>(e.tail)].push_back(a);
      in_[static_cast<std::size_t>(e.head)].push_back(a);
    }
  }

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const ArcId> out_arcs(Vertex v) const {
    return {out_.at(static_cast<std::size_t>(v))};
  }
  std::span<const ArcId> in_arcs(Vertex v) const {
    return {in_.at(static_cast<std::size_t>(v))};
  }

  // A loop counts once toward the in-degree and once toward the out-degree.
  int out_degree(Vertex v) const {
    return static_cast<int>(out_.at(static_cast<std::size_t>(v)).size());
  }
  int in_degree(Vertex v) const {
    return static_cast<int>(in_.at(static_cast<std::size_t>(v)).size());
  }
  int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  /// Number of arcs u -> v.
  int multiplicity(Vertex u, Vertex v) const {
    int m = 0;
    for (ArcId a : out_arcs(u)) m += (arcs_[static_cast<std::size_t>(a)].head == v);
    return m;
  }

  /// Number of underlying undirected edges between u and v (loops when u == v).
  int undirected_multiplicity(Vertex u, Vertex v) const {
    if (u == v) return multiplicity(u, u);
    return multiplicity(u, v) + multiplicity(v, u);
  }

  bool has_loops() const {
    for (const Arc& e : arcs_)
      if (e.tail == e.head) return true;
    return false;
  }

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_, in_;
};

/// Per-vertex (in_degree, out_degree) pairs.
using DegreeProfile = std::vector<std::pair<int, int>>;

inline DegreeProfile degree_profile(const MultiDigraph& g) {
  DegreeProfile p;
  p.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    p.emplace_back(g.in_degree(v), g.out_degree(v));
  return p;
}

inline bool is_eulerian(const MultiDigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) != g.out_degree(v)) return false;
  return true;
}

/// Every vertex has in-degree = out-degree = 2 (the class of quartic
/// Eulerian digraphs). Vacuously true for the empty graph.
inline bool is_quartic(const MultiDigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) != 2 || g.out_degree(v) != 2) return false;
  return true;
}

/// Arc counts across a bipartition (A, B): returns (|A->B|, |B->A|).
/// Loops never cross a cut. For Eulerian graphs the two counts are equal.
inline std::pair<int, int> cut_balance(const MultiDigraph& g,
                                       const std::vector<bool>& in_a) {
  if (static_cast<int>(in_a.size()) != g.vertex_count())
    throw std::invalid_argument("cut_balance: bipartition size mismatch");
  int ab = 0, ba = 0;
  for (const Arc& e : g.arcs()) {
    bool ta = in_a[static_cast<std::size_t>(e.tail)];
    bool ha = in_a[static_cast<std::size_t>(e.head)];
    if (ta && !ha) ++ab;
    if (!ta && ha) ++ba;
  }
  return {ab, ba};
}

/// One weakly-connected component together with back-maps into the
/// original graph.
struct Component {
  MultiDigraph graph;
  std::vector<Vertex> vertex_map;  // component vertex -> original vertex
  std::vector<ArcId> arc_map;      // component arc id -> original arc id
};

/// Weakly-connected components, ordered by smallest original vertex.
/// Isolated vertices form singleton components; the empty graph has none.
inline std::vector<Component> components(const MultiDigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      auto visit = [&](Vertex w) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      };
      for (ArcId a : g.out_arcs(v)) visit(g.arc(a).head);
      for (ArcId a : g.in_arcs(v)) visit(g.arc(a).tail);
    }
    ++ncomp;
  }

  std::vector<Component> result(static_cast<std::size_t>(ncomp));
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    auto& c = result[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    local[static_cast<std::size_t>(v)] = static_cast<int>(c.vertex_map.size());
    c.vertex_map.push_back(v);
  }
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(ncomp));
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& e = g.arc(a);
    int ci = comp[static_cast<std::size_t>(e.tail)];
    result[static_cast<std::size_t>(ci)].arc_map.push_back(a);
    arcs[static_cast<std::size_t>(ci)].push_back(
        Arc{local[static_cast<std::size_t>(e.tail)],
            local[static_cast<std::size_t>(e.head)]});
  }
  for (int ci = 0; ci < ncomp; ++ci) {
    auto& c = result[static_cast<std::size_t>(ci)];
    c.graph = MultiDigraph(static_cast<int>(c.vertex_map.size()),
                           std::move(arcs[static_cast<std::size_t>(ci)]));
  }
  return result;
}

inline bool is_weakly_connected(const MultiDigraph& g) {
  return components(g).size() <= 1;
}

/// Removes isolated vertices and suppresses degree-2 vertices (arcs uv, vw
/// become the single arc uw). A vertex carrying only a single loop is
/// deleted outright. The result has no vertex of total degree 0 or 2,
/// stays Eulerian, and normalize is idempotent.
inline MultiDigraph normalize(const MultiDigraph& g) {
  if (!is_eulerian(g))
    throw std::invalid_argument("normalize: graph is not Eulerian");
  const int n = g.vertex_count();
  std::vector<std::optional<Arc>> arcs(g.arcs().begin(), g.arcs().end());
  std::vector<int> indeg(static_cast<std::size_t>(n), 0),
      outdeg(static_cast<std::size_t>(n), 0);
  for (const Arc& e : g.arcs()) {
    ++outdeg[static_cast<std::size_t>(e.tail)];
    ++indeg[static_cast<std::size_t>(e.head)];
  }

  for (;;) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (indeg[static_cast<std::size_t>(u)] == 1 &&
          outdeg[static_cast<std::size_t>(u)] == 1) {
        v = u;
        break;
      }
    }
    if (v < 0) break;
    ArcId ain = -1, aout = -1;
    for (ArcId a = 0; a < static_cast<ArcId>(arcs.size()); ++a) {
      if (!arcs[static_cast<std::size_t>(a)]) continue;
      if (arcs[static_cast<std::size_t>(a)]->head == v && ain < 0) ain = a;
      if (arcs[static_cast<std::size_t>(a)]->tail == v && aout < 0) aout = a;
    }
    if (ain == aout) {
      // v carries a single loop; its 1-cycle component vanishes
      arcs[static_cast<std::size_t>(ain)].reset();
      indeg[static_cast<std::size_t>(v)] = outdeg[static_cast<std::size_t>(v)] = 0;
    } else {
      Vertex u = arcs[static_cast<std::size_t>(ain)]->tail;
      Vertex w = arcs[static_cast<std::size_t>(aout)]->head;
      arcs[static_cast<std::size_t>(ain)] = Arc{u, w};
      arcs[static_cast<std::size_t>(aout)].reset();
      indeg[static_cast<std::size_t>(v)] = outdeg[static_cast<std::size_t>(v)] = 0;
      // u keeps its out-degree, w keeps its in-degree
    }
  }

  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int nn = 0;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] + outdeg[static_cast<std::size_t>(v)] > 0)
      remap[static_cast<std::size_t>(v)] = nn++;
  std::vector<Arc> out;
  for (const auto& e : arcs)
    if (e)
      out.push_back(Arc{remap[static_cast<std::size_t>(e->tail)],
                        remap[static_cast<std::size_t>(e->head)]});
  return MultiDigraph(nn, std::move(out));
}

}  // namespace qed
