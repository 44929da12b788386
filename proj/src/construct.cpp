#include "pcc/construct.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace pcc {

namespace {

class Builder {
 public:
  Id vertex(Point p) {
    Id id = data.vertices.size();
    data.vertices.push_back({id, p});
    return id;
  }

  void edge(Id u, Id v, std::vector<Point> bends = {}) {
    std::vector<Point> pl;
    pl.push_back(data.vertices[u].point);
    pl.insert(pl.end(), bends.begin(), bends.end());
    pl.push_back(data.vertices[v].point);
    data.edges.push_back({static_cast<Id>(data.edges.size()), u, v, std::move(pl)});
  }

  DrawingData data;
};

}  // namespace

DrawingData toth_construction(std::size_t n) {
  if (n < kTothMinVertices) {
    throw TooSmall("construction needs at least " + std::to_string(kTothMinVertices) +
                   " vertices, got " + std::to_string(n));
  }
  const std::size_t m = n - 6;
  // Axis vertices sit at (0, 4i). Side vertices are far enough out that
  // every side edge meets the axis at slope below 1/2, well under the slope
  // of the arcs. Three side edges from one side meet in a point only if the
  // height gaps have ratio (i - j) / (j - k) for axis indices i, j, k; gaps
  // 2 and 2D with odd D >= m rule that out.
  const Coord side = 8 * static_cast<Coord>(m) + 16;
  const Coord wide_gap = 2 * static_cast<Coord>(m | 1);
  const Coord side_heights[3] = {1, 3, 3 + wide_gap};

  Builder b;
  for (std::size_t i = 0; i < m; ++i) b.vertex({0, 4 * static_cast<Coord>(i)});
  Id left[3], right[3];
  for (int s = 0; s < 3; ++s) left[s] = b.vertex({-side, side_heights[s]});
  for (int s = 0; s < 3; ++s) right[s] = b.vertex({side, side_heights[s]});

  for (std::size_t i = 0; i + 1 < m; ++i) b.edge(i, i + 1);
  for (std::size_t i = 0; i + 2 < m; ++i) {
    b.edge(i, i + 2, {{-2, 4 * static_cast<Coord>(i) + 4}});
  }
  for (std::size_t i = 0; i + 3 < m; ++i) {
    b.edge(i, i + 3, {{2, 4 * static_cast<Coord>(i) + 6}});
  }
  for (int s = 0; s < 3; ++s) {
    for (std::size_t i = 0; i < m; ++i) b.edge(left[s], i);
  }
  for (int s = 0; s < 3; ++s) {
    for (std::size_t i = 0; i < m; ++i) b.edge(right[s], i);
  }
  // Side triangles; the outer pair detours around the middle vertex.
  b.edge(left[0], left[1]);
  b.edge(left[1], left[2]);
  b.edge(left[0], left[2], {{-side - 1, side_heights[1]}});
  b.edge(right[0], right[1]);
  b.edge(right[1], right[2]);
  b.edge(right[0], right[2], {{side + 1, side_heights[1]}});
  return b.data;
}

DrawingData star_complete(std::size_t n, GeneratorSeed seed) {
  if (n < 3) throw TooSmall("star drawing needs at least 3 vertices");
  if (n > kStarMaxVertices) {
    throw TooLarge("star drawing is capped at " + std::to_string(kStarMaxVertices) +
                   " vertices");
  }
  constexpr Coord kRange = 1000;
  // Below the parabola by more than kRange^2, every segment from the hub to a
  // parabola point stays under the parabola, so the hub's star is
  // crossing-free.
  constexpr Coord kDepth = kRange * kRange + 7;
  std::mt19937_64 rng(seed.value);
  std::uniform_int_distribution<Coord> pick(-kRange, kRange);
  for (;;) {
    std::set<Coord> xs;
    while (xs.size() < n - 1) xs.insert(pick(rng));
    Builder b;
    b.vertex({0, -kDepth});
    for (Coord x : xs) b.vertex({x, x * x});
    for (Id u = 0; u < n; ++u) {
      for (Id v = u + 1; v < n; ++v) b.edge(u, v);
    }
    // Chords of a parabola can be concurrent; resample until they are not.
    if (validate_drawing(b.data).report.ok()) return b.data;
  }
}

namespace {

class GreedyPcc {
 public:
  GreedyPcc(std::vector<Point> points)
      : points_(std::move(points)),
        edge_at_(points_.size(), std::vector<long>(points_.size(), -1)) {}

  bool try_add(std::size_t u, std::size_t v) {
    const Segment s{points_[u], points_[v]};
    std::vector<std::size_t> partners;
    std::vector<RationalPoint> fresh;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [a, b] = edges_[e];
      Intersection x = classify_segments(s, {points_[a], points_[b]});
      switch (x.kind) {
        case IntersectionKind::Disjoint:
        case IntersectionKind::EndpointTouch:
          break;
        case IntersectionKind::ProperCrossing:
          if (crossing_points_.count(x.point)) return false;
          partners.push_back(e);
          fresh.push_back(x.point);
          break;
        default:
          return false;
      }
    }
    std::sort(fresh.begin(), fresh.end());
    if (std::adjacent_find(fresh.begin(), fresh.end()) != fresh.end()) return false;

    const std::size_t id = edges_.size();
    edges_.emplace_back(u, v);
    degree_.push_back(partners.size());
    edge_at_[u][v] = edge_at_[v][u] = static_cast<long>(id);
    for (std::size_t e : partners) {
      ++degree_[e];
      pairs_.emplace_back(e, id);
    }
    if (pcc_holds()) {
      crossing_points_.insert(fresh.begin(), fresh.end());
      return true;
    }
    for (std::size_t e : partners) --degree_[e];
    pairs_.resize(pairs_.size() - partners.size());
    edge_at_[u][v] = edge_at_[v][u] = -1;
    degree_.pop_back();
    edges_.pop_back();
    return false;
  }

  DrawingData data() const {
    Builder b;
    for (const Point& p : points_) b.vertex(p);
    for (auto [u, v] : edges_) b.edge(u, v);
    return b.data;
  }

  std::size_t edge_count() const { return edges_.size(); }

 private:
  bool planar_link(std::size_t a, std::size_t b) const {
    long e = edge_at_[a][b];
    return e >= 0 && degree_[static_cast<std::size_t>(e)] == 0;
  }

  bool pcc_holds() const {
    for (auto [e, f] : pairs_) {
      auto [a, b] = edges_[e];
      auto [c, d] = edges_[f];
      if (!(planar_link(a, c) || planar_link(a, d) || planar_link(b, c) ||
            planar_link(b, d))) {
        return false;
      }
    }
    return true;
  }

  std::vector<Point> points_;
  std::vector<std::vector<long>> edge_at_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::size_t> degree_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::set<RationalPoint> crossing_points_;
};

}  // namespace

DrawingData random_pcc_greedy(std::size_t n, std::size_t m_target, GeneratorSeed seed) {
  if (n < 3) throw TooSmall("random drawing needs at least 3 vertices");
  const Coord grid = std::max<Coord>(64, 8 * static_cast<Coord>(n));
  std::mt19937_64 rng(seed.value);
  std::uniform_int_distribution<Coord> pick(0, grid - 1);

  std::vector<Point> points;
  while (points.size() < n) {
    Point p{pick(rng), pick(rng)};
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; ++i) {
      if (points[i] == p) ok = false;
      for (std::size_t j = i + 1; j < points.size() && ok; ++j) {
        if (orient(points[i], points[j], p) == Orientation::Collinear) ok = false;
      }
    }
    if (ok) points.push_back(p);
  }

  std::vector<std::tuple<Wide, std::size_t, std::size_t>> candidates;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Wide dx = points[u].x - points[v].x, dy = points[u].y - points[v].y;
      candidates.emplace_back(dx * dx + dy * dy, u, v);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  GreedyPcc greedy(std::move(points));
  for (const auto& [len, u, v] : candidates) {
    if (greedy.edge_count() >= m_target) break;
    greedy.try_add(u, v);
  }
  return greedy.data();
}

}  // namespace pcc
