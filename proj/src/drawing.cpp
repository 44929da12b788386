#include "pcc/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pcc {

namespace {

std::uint64_t pair_key(VertexIndex u, VertexIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

struct Box {
  Coord xmin, xmax, ymin, ymax;

  bool meets(const Box& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
};

Box box_of(std::span<const Point> pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const Point& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

Box box_of(const Point& a, const Point& b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
          std::max(a.y, b.y)};
}

// Everything the pairwise pass learns about one edge pair.
struct PairOutcome {
  EdgeIndex e, f;
  std::vector<RationalPoint> crossings;
  std::vector<Violation> violations;
};

class Validator {
 public:
  Validator(const DrawingData& raw, const ValidationOptions& options)
      : raw_(raw), options_(options) {}

  ValidationReport report;
  std::vector<std::pair<VertexIndex, VertexIndex>> ends;
  std::unordered_map<Id, VertexIndex> vertex_lookup;
  std::unordered_map<Id, EdgeIndex> edge_lookup;
  std::unordered_map<std::uint64_t, EdgeIndex> pair_lookup;
  std::vector<CrossingPair> crossing_pairs;

  void run() {
    check_vertices();
    check_edges_structure();
    check_vertex_on_edges();
    check_edge_pairs();
    std::sort(violations_.begin(), violations_.end());
    violations_.erase(std::unique(violations_.begin(), violations_.end()),
                      violations_.end());
    report.violations = std::move(violations_);
  }

 private:
  void add(ViolationKind kind, std::vector<Id> vids, std::vector<Id> eids) {
    std::sort(vids.begin(), vids.end());
    std::sort(eids.begin(), eids.end());
    violations_.push_back({kind, std::move(vids), std::move(eids)});
  }

  void check_vertices() {
    std::map<Point, Id> seen_points;
    for (VertexIndex v = 0; v < raw_.vertices.size(); ++v) {
      const VertexRecord& rec = raw_.vertices[v];
      if (!vertex_lookup.emplace(rec.id, v).second) {
        add(ViolationKind::DuplicateId, {rec.id}, {});
      }
      if (!in_range(rec.point)) {
        add(ViolationKind::CoordinateOutOfRange, {rec.id}, {});
        continue;
      }
      auto [it, fresh] = seen_points.emplace(rec.point, rec.id);
      if (!fresh) {
        add(ViolationKind::DuplicateVertexPoint, {it->second, rec.id}, {});
      } else {
        point_owner_.emplace(rec.point, v);
      }
    }
  }

  void check_edges_structure() {
    const std::size_t m = raw_.edges.size();
    ends.assign(m, {0, 0});
    well_formed_.assign(m, false);
    boxes_.assign(m, Box{0, 0, 0, 0});
    for (EdgeIndex e = 0; e < m; ++e) {
      const EdgeRecord& rec = raw_.edges[e];
      if (!edge_lookup.emplace(rec.id, e).second) {
        add(ViolationKind::DuplicateId, {}, {rec.id});
      }
      auto s = vertex_lookup.find(rec.source);
      auto t = vertex_lookup.find(rec.target);
      if (s == vertex_lookup.end() || t == vertex_lookup.end()) {
        add(ViolationKind::UnknownVertex, {}, {rec.id});
        continue;
      }
      ends[e] = {s->second, t->second};
      if (s->second == t->second) {
        add(ViolationKind::LoopOrParallelEdge, {}, {rec.id});
        continue;
      }
      auto [it, fresh] = pair_lookup.emplace(pair_key(s->second, t->second), e);
      if (!fresh) {
        add(ViolationKind::LoopOrParallelEdge, {},
            {raw_.edges[it->second].id, rec.id});
      }
      bool ok = true;
      for (const Point& p : rec.polyline) {
        if (!in_range(p)) {
          add(ViolationKind::CoordinateOutOfRange, {}, {rec.id});
          ok = false;
          break;
        }
      }
      if (ok) ok = polyline_ok(e);
      if (!ok) continue;
      well_formed_[e] = true;
      boxes_[e] = box_of(rec.polyline);
    }
  }

  bool polyline_ok(EdgeIndex e) {
    const EdgeRecord& rec = raw_.edges[e];
    const auto& pl = rec.polyline;
    auto malformed = [&] {
      add(ViolationKind::MalformedPolyline, {}, {rec.id});
      return false;
    };
    if (pl.size() < 2) return malformed();
    if (pl.front() != raw_.vertices[ends[e].first].point ||
        pl.back() != raw_.vertices[ends[e].second].point) {
      return malformed();
    }
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      if (pl[i] == pl[i + 1]) return malformed();
    }
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < pl.size(); ++j) {
        Intersection x = classify_segments({pl[i], pl[i + 1]}, {pl[j], pl[j + 1]});
        bool expected = (j == i + 1) ? x.kind == IntersectionKind::EndpointTouch
                                     : x.kind == IntersectionKind::Disjoint;
        if (!expected) return malformed();
      }
    }
    return true;
  }

  void check_vertex_on_edges() {
    for (EdgeIndex e = 0; e < raw_.edges.size(); ++e) {
      if (!well_formed_[e]) continue;
      const auto& pl = raw_.edges[e].polyline;
      const std::size_t segs = pl.size() - 1;
      for (std::size_t i = 0; i < segs; ++i) {
        Box sb = box_of(pl[i], pl[i + 1]);
        auto lo = point_owner_.lower_bound(Point{sb.xmin, sb.ymin});
        auto hi = point_owner_.upper_bound(Point{sb.xmax, sb.ymax});
        for (auto it = lo; it != hi; ++it) {
          const Point& p = it->first;
          if (p.y < sb.ymin || p.y > sb.ymax) continue;
          if (!on_segment(pl[i], pl[i + 1], p)) continue;
          if (i == 0 && p == pl.front()) continue;
          if (i + 1 == segs && p == pl.back()) continue;
          add(ViolationKind::VertexOnEdgeInterior,
              {raw_.vertices[it->second].id}, {raw_.edges[e].id});
        }
      }
    }
  }

  bool is_vertex_point(const RationalPoint& q) const {
    if (q.x.den() != 1 || q.y.den() != 1) return false;
    Point p{static_cast<Coord>(q.x.num()), static_cast<Coord>(q.y.num())};
    return point_owner_.count(p) != 0;
  }

  PairOutcome examine(EdgeIndex e, EdgeIndex f) const {
    PairOutcome out{e, f, {}, {}};
    const auto& pe = raw_.edges[e].polyline;
    const auto& pf = raw_.edges[f].polyline;
    const Id ide = raw_.edges[e].id, idf = raw_.edges[f].id;
    std::vector<Id> ids{std::min(ide, idf), std::max(ide, idf)};
    for (std::size_t i = 0; i + 1 < pe.size(); ++i) {
      Box si = box_of(pe[i], pe[i + 1]);
      if (!si.meets(boxes_[f])) continue;
      for (std::size_t j = 0; j + 1 < pf.size(); ++j) {
        if (!si.meets(box_of(pf[j], pf[j + 1]))) continue;
        Intersection x = classify_segments({pe[i], pe[i + 1]}, {pf[j], pf[j + 1]});
        switch (x.kind) {
          case IntersectionKind::Disjoint:
            break;
          case IntersectionKind::ProperCrossing:
            out.crossings.push_back(x.point);
            break;
          case IntersectionKind::Overlap:
            out.violations.push_back({ViolationKind::OverlapBetweenEdges, {}, ids});
            break;
          case IntersectionKind::EndpointTouch:
            if (is_vertex_point(x.point)) {
              // A shared graph vertex is fine; a vertex met in the middle of
              // a polyline is reported by the vertex pass.
              break;
            }
            out.violations.push_back({ViolationKind::CrossingAtBend, {}, ids});
            break;
          case IntersectionKind::EndpointOnInterior:
            if (!is_vertex_point(x.point)) {
              out.violations.push_back({ViolationKind::CrossingAtBend, {}, ids});
            }
            break;
        }
      }
    }
    std::sort(out.crossings.begin(), out.crossings.end());
    return out;
  }

  void check_edge_pairs() {
    const std::size_t m = raw_.edges.size();
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options_.threads,
                                        static_cast<unsigned>(std::max<std::size_t>(m, 1))));
    std::vector<std::vector<PairOutcome>> rows(m);
    auto work = [&](unsigned w) {
      for (EdgeIndex e = w; e < m; e += workers) {
        if (!well_formed_[e]) continue;
        for (EdgeIndex f = e + 1; f < m; ++f) {
          if (!well_formed_[f] || !boxes_[e].meets(boxes_[f])) continue;
          PairOutcome o = examine(e, f);
          if (!o.crossings.empty() || !o.violations.empty()) {
            rows[e].push_back(std::move(o));
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }

    std::vector<std::pair<RationalPoint, std::pair<EdgeIndex, EdgeIndex>>> all_points;
    for (auto& row : rows) {
      for (PairOutcome& o : row) {
        for (Violation& v : o.violations) violations_.push_back(std::move(v));
        if (o.crossings.empty()) continue;
        for (const RationalPoint& p : o.crossings) {
          all_points.push_back({p, {o.e, o.f}});
        }
        crossing_pairs.push_back({o.e, o.f, std::move(o.crossings)});
      }
    }
    std::sort(all_points.begin(), all_points.end());
    for (std::size_t i = 0; i < all_points.size();) {
      std::size_t j = i + 1;
      while (j < all_points.size() && all_points[j].first == all_points[i].first) ++j;
      if (j - i > 1) {
        std::vector<Id> eids;
        for (std::size_t k = i; k < j; ++k) {
          eids.push_back(raw_.edges[all_points[k].second.first].id);
          eids.push_back(raw_.edges[all_points[k].second.second].id);
        }
        std::sort(eids.begin(), eids.end());
        eids.erase(std::unique(eids.begin(), eids.end()), eids.end());
        add(ViolationKind::CoincidentCrossings, {}, std::move(eids));
      }
      i = j;
    }
  }

  const DrawingData& raw_;
  const ValidationOptions& options_;
  std::vector<Violation> violations_;
  std::map<Point, VertexIndex> point_owner_;
  std::vector<bool> well_formed_;
  std::vector<Box> boxes_;
};

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownVertex: return "UnknownVertex";
    case ViolationKind::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ViolationKind::DuplicateVertexPoint: return "DuplicateVertexPoint";
    case ViolationKind::LoopOrParallelEdge: return "LoopOrParallelEdge";
    case ViolationKind::MalformedPolyline: return "MalformedPolyline";
    case ViolationKind::VertexOnEdgeInterior: return "VertexOnEdgeInterior";
    case ViolationKind::OverlapBetweenEdges: return "OverlapBetweenEdges";
    case ViolationKind::CrossingAtBend: return "CrossingAtBend";
    case ViolationKind::CoincidentCrossings: return "CoincidentCrossings";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << pcc::to_string(v.kind);
    if (!v.vertex_ids.empty()) {
      out << " vertices";
      for (Id id : v.vertex_ids) out << ' ' << id;
    }
    if (!v.edge_ids.empty()) {
      out << " edges";
      for (Id id : v.edge_ids) out << ' ' << id;
    }
    out << '\n';
  }
  return out.str();
}

CrossingSet::CrossingSet(std::size_t edge_count, std::vector<CrossingPair> pairs)
    : pairs_(std::move(pairs)), neighbors_(edge_count) {
  for (CrossingPair& p : pairs_) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  for (const CrossingPair& p : pairs_) {
    neighbors_[p.first].push_back(p.second);
    neighbors_[p.second].push_back(p.first);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

bool CrossingSet::cross(EdgeIndex e, EdgeIndex f) const {
  const auto& n = neighbors_[e];
  return std::binary_search(n.begin(), n.end(), f);
}

std::size_t CrossingSet::crossing_point_count() const {
  std::size_t total = 0;
  for (const CrossingPair& p : pairs_) total += p.points.size();
  return total;
}

bool Drawing::adjacent(EdgeIndex e, EdgeIndex f) const {
  auto [a, b] = ends_[e];
  auto [c, d] = ends_[f];
  return a == c || a == d || b == c || b == d;
}

std::optional<VertexIndex> Drawing::vertex_index(Id id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Drawing::edge_index(Id id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Drawing::edge_between(VertexIndex u, VertexIndex v) const {
  auto it = pair_lookup_.find(pair_key(u, v));
  if (it == pair_lookup_.end()) return std::nullopt;
  return it->second;
}

ValidationResult validate_drawing(DrawingData raw, const ValidationOptions& options) {
  Validator check(raw, options);
  check.run();
  ValidationResult result;
  result.report = std::move(check.report);
  if (!result.report.ok()) return result;

  Drawing d;
  const std::size_t m = raw.edges.size();
  d.ends_ = std::move(check.ends);
  d.vertex_lookup_ = std::move(check.vertex_lookup);
  d.edge_lookup_ = std::move(check.edge_lookup);
  d.pair_lookup_ = std::move(check.pair_lookup);
  d.crossings_ = CrossingSet(m, std::move(check.crossing_pairs));
  d.data_ = std::move(raw);
  result.drawing = std::move(d);
  return result;
}

Drawing validated(DrawingData raw, const ValidationOptions& options) {
  ValidationResult r = validate_drawing(std::move(raw), options);
  if (!r.drawing) {
    throw std::invalid_argument("invalid drawing:\n" + r.report.to_string());
  }
  return std::move(*r.drawing);
}

const CrossingSet& compute_crossings(const Drawing& d) { return d.crossings(); }

SimplicityResult is_simple(const Drawing& d) {
  for (const CrossingPair& p : d.crossings().pairs()) {
    std::size_t meetings = p.points.size() + (d.adjacent(p.first, p.second) ? 1 : 0);
    if (meetings > 1) return {false, std::make_pair(p.first, p.second)};
  }
  return {true, std::nullopt};
}

EdgePartition partition_edges(const Drawing& d, const CrossingSet& c) {
  EdgePartition part;
  part.is_planar.assign(d.edge_count(), false);
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    if (c.degree(e) == 0) {
      part.planar.push_back(e);
      part.is_planar[e] = true;
    } else {
      part.crossed.push_back(e);
    }
  }
  return part;
}

}  // namespace pcc
