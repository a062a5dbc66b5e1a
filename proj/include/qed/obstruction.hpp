#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qed/connectivity.hpp"
#include "qed/cycles.hpp"
#include "qed/embedding.hpp"
#include "qed/multidigraph.hpp"

namespace qed {

/// The four structural facts that hold for every minimal non-diplanar
/// quartic Eulerian digraph.
struct ObstructionSanity {
  bool loop_free = false;
  bool multiplicity_at_most_2 = false;
  bool edge_connectivity_4 = false;
  bool strongly_2_edge_connected = false;

  bool all() const {
    return loop_free && multiplicity_at_most_2 && edge_connectivity_4 &&
           strongly_2_edge_connected;
  }
};

inline ObstructionSanity obstruction_sanity(const MultiDigraph& g) {
  ObstructionSanity c;
  c.loop_free = !g.has_loops();
  c.multiplicity_at_most_2 = true;
  for (Vertex u = 0; u < g.vertex_count() && c.multiplicity_at_most_2; ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (g.undirected_multiplicity(u, v) > 2) {
        c.multiplicity_at_most_2 = false;
        break;
      }
  const int n = g.vertex_count();
  if (n <= 1) {
    c.edge_connectivity_4 = true;  // vacuous
    c.strongly_2_edge_connected = true;
  } else if (!is_weakly_connected(g)) {
    c.edge_connectivity_4 = false;
    c.strongly_2_edge_connected = false;
  } else {
    c.edge_connectivity_4 = underlying_edge_connectivity(g) >= 4;
    const auto cap = detail::directed_capacities(g);
    c.strongly_2_edge_connected = true;
    for (Vertex s = 0; s < n && c.strongly_2_edge_connected; ++s)
      for (Vertex t = 0; t < n; ++t)
        if (s != t && detail::max_flow(cap, s, t, 2) < 2) {
          c.strongly_2_edge_connected = false;
          break;
        }
  }
  return c;
}

/// Diplanarity evidence for one cycle removal.
struct CycleWitness {
  DirectedCycle cycle;
  bool reduced_diplanar = false;
  std::optional<EmbeddingCertificate> certificate;  // of remove_cycle(g, cycle)
};

/// Verdict of minimal non-diplanarity. When the graph itself is diplanar
/// the verdict is false and no per-cycle witnesses are computed; otherwise
/// every directed cycle gets a witness, in enumeration order.
struct ObstructionReport {
  bool obstruction = false;
  bool graph_diplanar = false;
  int min_genus = 0;
  std::uint64_t systems_examined = 0;
  std::vector<CycleWitness> cycle_witnesses;
  ObstructionSanity sanity;
};

/// A quartic Eulerian digraph is an obstruction iff it is not diplanar but
/// removing any one directed cycle (then normalizing) leaves a diplanar
/// graph. One-step checking suffices because diplanarity is hereditary
/// under cycle removal.
inline ObstructionReport is_obstruction(const MultiDigraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("is_obstruction: empty graph");
  if (!is_quartic(g))
    throw std::invalid_argument("is_obstruction: graph is not quartic");

  ObstructionReport report;
  report.sanity = obstruction_sanity(g);

  DiplanarityResult self = is_diplanar(g);
  report.graph_diplanar = self.diplanar;
  report.min_genus = self.min_genus;
  report.systems_examined = self.systems_examined;
  if (self.diplanar) {
    report.obstruction = false;
    return report;
  }

  bool all_reduced_diplanar = true;
  std::map<std::vector<Arc>, DiplanarityResult> memo;  // identical reductions recur
  for_each_directed_cycle(g, [&](const DirectedCycle& c) {
    MultiDigraph h = remove_cycle(g, c);
    std::vector<Arc> key = h.arcs();
    key.push_back(Arc{h.vertex_count(), h.vertex_count()});
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), is_diplanar(h)).first;
    const DiplanarityResult& r = it->second;
    all_reduced_diplanar = all_reduced_diplanar && r.diplanar;
    report.cycle_witnesses.push_back(CycleWitness{c, r.diplanar, r.certificate});
  });
  report.obstruction = all_reduced_diplanar;
  return report;
}

}  // namespace qed
