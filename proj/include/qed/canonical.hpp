#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qed/multidigraph.hpp"

namespace qed {

/// Isomorphism-invariant byte key: equal for two multidigraphs iff they are
/// isomorphic (respecting arc multiplicities and loops).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes <=> b.bytes;
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 0xf]);
    }
    return s;
  }
};

namespace detail {

inline std::vector<std::vector<int>> multiplicity_matrix(const MultiDigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Arc& e : g.arcs())
    ++m[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)];
  return m;
}

// Iterated degree refinement. Colors are dense ranks assigned in sorted key
// order, so the coloring and the order of color classes are both invariant
// under vertex relabeling.
inline std::vector<int> refinement_colors(const MultiDigraph& g) {
  const int n = g.vertex_count();
  const auto m = multiplicity_matrix(g);
  std::vector<int> color(static_cast<std::size_t>(n), 0);

  auto rank_keys = [&](const std::vector<std::vector<long long>>& keys) {
    std::map<std::vector<long long>, int> order;
    for (const auto& k : keys) order.emplace(k, 0);
    int next = 0;
    for (auto& [k, r] : order) r = next++;
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = order[keys[static_cast<std::size_t>(v)]];
    return out;
  };

  {
    std::vector<std::vector<long long>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      keys[static_cast<std::size_t>(v)] = {g.out_degree(v), g.in_degree(v),
                                           g.multiplicity(v, v)};
    color = rank_keys(keys);
  }

  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long long>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<long long>> nb;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int out = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        int in = m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (out == 0 && in == 0) continue;
        nb.push_back({color[static_cast<std::size_t>(u)], out, in});
      }
      std::sort(nb.begin(), nb.end());
      auto& k = keys[static_cast<std::size_t>(v)];
      k.push_back(color[static_cast<std::size_t>(v)]);
      for (const auto& t : nb) k.insert(k.end(), t.begin(), t.end());
    }
    std::vector<int> next = rank_keys(keys);
    if (next == color) break;
    color = next;
  }
  return color;
}

// Maximizes the "staircase" serialization over all permutations that list
// the refinement color classes in color order. Position p contributes
// m[p][p], then m[p][0..p-1], then m[0..p-1][p] (in the new labeling), so
// prefixes are comparable during the search. Maximization packs adjacency
// toward the earliest positions, which keeps tie branching local even on
// vertex-transitive graphs (a minimizing search would tie on every
// non-neighbor and explode combinatorially).
struct CanonSearch {
  const std::vector<std::vector<int>>& m;
  const std::vector<int>& pos_color;  // color required at each position
  const std::vector<int>& color;      // color of each original vertex
  int n;
  std::vector<int> perm;              // position -> original vertex
  std::vector<bool> used;
  std::vector<std::uint8_t> cur;
  std::vector<std::uint8_t> best;
  std::vector<int> best_perm;

  void run() {
    perm.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), false);
    cur.clear();
    best.clear();
    dfs(0);
  }

  void dfs(int p) {
    if (p == n) {
      if (best.empty() || cur > best) {
        best = cur;
        best_perm = perm;
      }
      return;
    }
    const std::size_t offset = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    const std::size_t rowlen = static_cast<std::size_t>(2 * p + 1);
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] ||
          color[static_cast<std::size_t>(v)] != pos_color[static_cast<std::size_t>(p)])
        continue;
      cur.resize(offset);
      auto push = [&](int mult) {
        if (mult > 255) throw std::invalid_argument("arc multiplicity too large");
        cur.push_back(static_cast<std::uint8_t>(mult));
      };
      push(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
      for (int j = 0; j < p; ++j)
        push(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
      for (int j = 0; j < p; ++j)
        push(m[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])][static_cast<std::size_t>(v)]);
      if (!best.empty()) {
        // prune only if the whole prefix is lexicographically worse: the
        // new row alone is not decisive when an earlier position already
        // beat the incumbent
        const std::size_t len = offset + rowlen;
        if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(),
                                         best.begin() + static_cast<std::ptrdiff_t>(len)))
          continue;
      }
      used[static_cast<std::size_t>(v)] = true;
      perm[static_cast<std::size_t>(p)] = v;
      dfs(p + 1);
      perm[static_cast<std::size_t>(p)] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
    cur.resize(offset);
  }
};

}  // namespace detail

/// Canonical labeling: position -> original vertex.
inline std::vector<Vertex> canonical_labeling(const MultiDigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  const auto m = detail::multiplicity_matrix(g);
  const auto color = detail::refinement_colors(g);
  std::vector<int> pos_color(color.begin(), color.end());
  std::sort(pos_color.begin(), pos_color.end());
  detail::CanonSearch search{m, pos_color, color, n, {}, {}, {}, {}, {}};
  search.run();
  std::vector<Vertex> out(search.best_perm.begin(), search.best_perm.end());
  return out;
}

inline CanonicalForm canonical_form(const MultiDigraph& g) {
  const int n = g.vertex_count();
  CanonicalForm f;
  auto push32 = [&](std::uint32_t x) {
    f.bytes.push_back(static_cast<std::uint8_t>(x >> 24));
    f.bytes.push_back(static_cast<std::uint8_t>(x >> 16));
    f.bytes.push_back(static_cast<std::uint8_t>(x >> 8));
    f.bytes.push_back(static_cast<std::uint8_t>(x));
  };
  push32(static_cast<std::uint32_t>(n));
  push32(static_cast<std::uint32_t>(g.arc_count()));
  if (n == 0) return f;
  const auto m = detail::multiplicity_matrix(g);
  const auto perm = canonical_labeling(g);
  for (int p = 0; p < n; ++p) {
    auto push = [&](int mult) {
      if (mult > 255) throw std::invalid_argument("arc multiplicity too large");
      f.bytes.push_back(static_cast<std::uint8_t>(mult));
    };
    int v = perm[static_cast<std::size_t>(p)];
    push(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
    for (int j = 0; j < p; ++j)
      push(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
    for (int j = 0; j < p; ++j)
      push(m[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])][static_cast<std::size_t>(v)]);
  }
  return f;
}

/// The canonically-labeled representative of g's isomorphism class, with
/// arcs sorted by (tail, head).
inline MultiDigraph canonical_graph(const MultiDigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  const auto m = detail::multiplicity_matrix(g);
  const auto perm = canonical_labeling(g);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.arc_count()));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int mult = m[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      for (int k = 0; k < mult; ++k) arcs.push_back(Arc{u, v});
    }
  return MultiDigraph(n, std::move(arcs));
}

inline bool is_isomorphic(const MultiDigraph& a, const MultiDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace qed
