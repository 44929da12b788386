// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcc/drawing.hpp"
#include "pcc/io.hpp"

#ifndef PCC_TEST_DATA
#error "PCC_TEST_DATA must point at tests/data"
#endif

namespace pcc::test {

inline std::string data_path(const std::string& name) {
  return std::string(PCC_TEST_DATA) + "/" + name + ".pcc";
}

inline Drawing fixture(const std::string& name) {
  return validated(read_drawing_file(data_path(name)));
}

inline DrawingData straight(const std::vector<Point>& pts,
                            const std::vector<std::pair<Id, Id>>& edges) {
  DrawingData d;
  for (std::size_t i = 0; i < pts.size(); ++i) d.vertices.push_back({i, pts[i]});
  for (std::size_t j = 0; j < edges.size(); ++j) {
    auto [u, v] = edges[j];
    d.edges.push_back({j, u, v, {pts[u], pts[v]}});
  }
  return d;
}

// Floating-point segment test; `margin` reports how far the deciding
// determinants are from zero relative to their scale.
struct FloatVerdict {
  bool proper = false;
  double margin = 0;
};

inline FloatVerdict float_proper_crossing(Point a, Point b, Point c, Point d) {
  auto cross = [](double ox, double oy, double px, double py, double qx, double qy) {
    return (px - ox) * (qy - oy) - (py - oy) * (qx - ox);
  };
  double d1 = cross(a.x, a.y, b.x, b.y, c.x, c.y);
  double d2 = cross(a.x, a.y, b.x, b.y, d.x, d.y);
  double d3 = cross(c.x, c.y, d.x, d.y, a.x, a.y);
  double d4 = cross(c.x, c.y, d.x, d.y, b.x, b.y);
  FloatVerdict v;
  v.proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
             ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
  v.margin = std::min({std::abs(d1), std::abs(d2), std::abs(d3), std::abs(d4)});
  return v;
}

// Straight-line crossing test for drawings whose edges are single segments,
// by the float determinant rule. Only used on small integer coordinates
// where doubles are exact.
inline bool straight_edges_cross(const Drawing& d, EdgeIndex e, EdgeIndex f) {
  const auto& p = d.polyline(e);
  const auto& q = d.polyline(f);
  return float_proper_crossing(p.front(), p.back(), q.front(), q.back()).proper;
}

// All cliques of size k by plain recursive enumeration; returns the
// lexicographically first.
inline std::optional<std::vector<std::size_t>> brute_clique(
    const std::vector<std::vector<bool>>& adj, std::size_t k) {
  std::vector<std::size_t> cur;
  std::optional<std::vector<std::size_t>> found;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (found) return;
    if (cur.size() == k) {
      found = cur;
      return;
    }
    for (std::size_t v = start; v < adj.size() && !found; ++v) {
      bool ok = true;
      for (std::size_t u : cur) ok = ok && adj[u][v];
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

inline std::vector<std::vector<bool>> crossing_matrix(const Drawing& d) {
  std::vector<std::vector<bool>> adj(d.edge_count(), std::vector<bool>(d.edge_count()));
  for (const CrossingPair& p : compute_crossings(d).pairs()) {
    adj[p.first][p.second] = adj[p.second][p.first] = true;
  }
  return adj;
}

// PCC by direct definition over all edge pairs.
inline bool brute_pcc(const Drawing& d) {
  const auto adj = crossing_matrix(d);
  std::vector<bool> free(d.edge_count(), true);
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    for (EdgeIndex f = 0; f < d.edge_count(); ++f) free[e] = free[e] && !adj[e][f];
  }
  auto linked = [&](VertexIndex a, VertexIndex b) {
    for (EdgeIndex g = 0; g < d.edge_count(); ++g) {
      if (!free[g]) continue;
      if ((d.source(g) == a && d.target(g) == b) || (d.source(g) == b && d.target(g) == a)) {
        return true;
      }
    }
    return false;
  };
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    for (EdgeIndex f = e + 1; f < d.edge_count(); ++f) {
      if (!adj[e][f] || d.adjacent(e, f)) continue;
      VertexIndex ends_e[2] = {d.source(e), d.target(e)};
      VertexIndex ends_f[2] = {d.source(f), d.target(f)};
      bool ok = false;
      for (VertexIndex a : ends_e) {
        for (VertexIndex b : ends_f) ok = ok || linked(a, b);
      }
      if (!ok) return false;
    }
  }
  return true;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace pcc::test
