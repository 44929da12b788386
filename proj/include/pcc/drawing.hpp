// Topological drawings with polyline edges.
//
// DrawingData is the raw, unchecked description (as read from a file or
// produced by a generator). validate_drawing turns it into a Drawing, which
// is immutable and carries its full crossing structure.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcc/geom.hpp"

namespace pcc {

using Id = std::uint64_t;
using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct VertexRecord {
  Id id = 0;
  Point point;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

struct EdgeRecord {
  Id id = 0;
  Id source = 0;
  Id target = 0;
  std::vector<Point> polyline;  // includes both endpoint points

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct DrawingData {
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;

  friend bool operator==(const DrawingData&, const DrawingData&) = default;
};

enum class ViolationKind {
  DuplicateId,
  UnknownVertex,
  CoordinateOutOfRange,
  DuplicateVertexPoint,
  LoopOrParallelEdge,
  MalformedPolyline,
  VertexOnEdgeInterior,
  OverlapBetweenEdges,
  CrossingAtBend,
  CoincidentCrossings,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Id> vertex_ids;
  std::vector<Id> edge_ids;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

/// One unordered pair of crossing edges (first < second) and the exact
/// points where their polylines cross, sorted.
struct CrossingPair {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  std::vector<RationalPoint> points;

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

class CrossingSet {
 public:
  CrossingSet() = default;
  CrossingSet(std::size_t edge_count, std::vector<CrossingPair> pairs);

  const std::vector<CrossingPair>& pairs() const { return pairs_; }
  std::size_t degree(EdgeIndex e) const { return neighbors_[e].size(); }
  /// Edges crossing e, ascending.
  std::span<const EdgeIndex> neighbors(EdgeIndex e) const {
    return neighbors_[e];
  }
  bool cross(EdgeIndex e, EdgeIndex f) const;
  std::size_t crossing_point_count() const;

 private:
  std::vector<CrossingPair> pairs_;
  std::vector<std::vector<EdgeIndex>> neighbors_;
};

struct ValidationOptions {
  unsigned threads = 1;
};

struct ValidationResult;

class Drawing {
 public:
  const DrawingData& data() const { return data_; }
  std::size_t vertex_count() const { return data_.vertices.size(); }
  std::size_t edge_count() const { return data_.edges.size(); }

  const Point& point(VertexIndex v) const { return data_.vertices[v].point; }
  Id vertex_id(VertexIndex v) const { return data_.vertices[v].id; }
  Id edge_id(EdgeIndex e) const { return data_.edges[e].id; }
  VertexIndex source(EdgeIndex e) const { return ends_[e].first; }
  VertexIndex target(EdgeIndex e) const { return ends_[e].second; }
  std::span<const Point> polyline(EdgeIndex e) const {
    return data_.edges[e].polyline;
  }
  bool adjacent(EdgeIndex e, EdgeIndex f) const;
  std::optional<VertexIndex> vertex_index(Id id) const;
  std::optional<EdgeIndex> edge_index(Id id) const;
  std::optional<EdgeIndex> edge_between(VertexIndex u, VertexIndex v) const;

  const CrossingSet& crossings() const { return crossings_; }

 private:
  friend ValidationResult validate_drawing(DrawingData raw,
                                           const ValidationOptions& options);
  Drawing() = default;

  DrawingData data_;
  std::vector<std::pair<VertexIndex, VertexIndex>> ends_;
  std::unordered_map<Id, VertexIndex> vertex_lookup_;
  std::unordered_map<Id, EdgeIndex> edge_lookup_;
  std::unordered_map<std::uint64_t, EdgeIndex> pair_lookup_;
  CrossingSet crossings_;
};

struct ValidationResult {
  std::optional<Drawing> drawing;
  ValidationReport report;
};

/// Checks every drawing invariant and, on success, computes the crossing
/// structure. All violations are reported, not just the first.
ValidationResult validate_drawing(DrawingData raw,
                                  const ValidationOptions& options = {});

/// Convenience wrapper: throws std::invalid_argument with the report text if
/// the drawing is not valid.
Drawing validated(DrawingData raw, const ValidationOptions& options = {});

const CrossingSet& compute_crossings(const Drawing& d);

struct SimplicityResult {
  bool simple = true;
  std::optional<std::pair<EdgeIndex, EdgeIndex>> witness;
};

/// Every pair of edges meets at most once, counting a shared endpoint.
SimplicityResult is_simple(const Drawing& d);

/// E' (crossing-free) and E'' (crossed) edges, ascending.
struct EdgePartition {
  std::vector<EdgeIndex> planar;
  std::vector<EdgeIndex> crossed;
  std::vector<bool> is_planar;
};

EdgePartition partition_edges(const Drawing& d, const CrossingSet& c);

}  // namespace pcc
