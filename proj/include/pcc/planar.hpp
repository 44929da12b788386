// Plane-skeleton machinery: components of the crossing-free subgraph, face
// boundary walks from the geometric rotation system, placement of crossed
// edges into faces, convex chord traces, abstract planarity and 4-colouring.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcc/drawing.hpp"

namespace pcc {

struct Component {
  std::vector<VertexIndex> vertices;     // ascending
  std::vector<EdgeIndex> planar_edges;   // ascending
};

using ComponentPair = std::pair<std::size_t, std::size_t>;

/// Components G'_i of the crossing-free subgraph and the crossed edges sorted
/// by the components of their endpoints. Components are numbered by their
/// smallest vertex.
struct Decomposition {
  std::vector<Component> components;
  std::vector<std::size_t> component_of;           // per vertex
  std::vector<std::vector<EdgeIndex>> intra;       // E''_{i,i}
  std::map<ComponentPair, std::vector<EdgeIndex>> inter;  // E''_{i,j}, i < j
  // V_{i,j}: vertices of component i incident to an E''_{i,j} edge. Stored
  // for both (i, j) and (j, i).
  std::map<ComponentPair, std::vector<VertexIndex>> boundary;

  const std::vector<VertexIndex>& boundary_of(std::size_t i, std::size_t j) const;
};

Decomposition decompose(const Drawing& d, const EdgePartition& p);

/// A boundary walk of one face. Position t of the walk is the t-th vertex
/// instance; edges[t] joins boundary[t] to boundary[t + 1] (cyclically).
/// Bounded faces are walked clockwise (the face lies to the right).
struct FaceWalk {
  std::size_t face = 0;
  std::size_t component = 0;
  std::vector<VertexIndex> boundary;
  std::vector<EdgeIndex> edges;

  std::size_t size() const { return boundary.size(); }
};

std::vector<FaceWalk> face_walks(const Drawing& d, const Decomposition& dec,
                                 std::size_t component);

struct Chord {
  std::size_t a = 0;  // walk positions, a != b
  std::size_t b = 0;
  EdgeIndex edge = 0;
};

/// The crossed edges of one face re-encoded as chords on the walk positions.
struct ConvexTrace {
  std::size_t face = 0;
  std::size_t size = 0;
  std::vector<Chord> chords;
};

struct FaceAssignment {
  std::vector<FaceWalk> faces;
  std::vector<std::vector<EdgeIndex>> face_edges;  // E''(f_j), per face
  std::vector<ConvexTrace> traces;                 // one per face
};

class AssignmentImpossible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Places each edge of `intra` (crossed edges with both ends in the
/// component) into the face containing it, anchoring each end at the walk
/// position whose angular corner contains the edge's initial direction.
FaceAssignment assign_to_faces(const Drawing& d, const Decomposition& dec,
                               std::size_t component,
                               const std::vector<EdgeIndex>& intra);

/// Index pairs of chords that strictly interleave along the walk.
std::vector<std::pair<std::size_t, std::size_t>> trace_crossings(const ConvexTrace& t);

bool chords_interleave(std::size_t a, std::size_t b, std::size_t c, std::size_t d);

struct AbstractGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws std::invalid_argument on loops, parallel edges or bad endpoints.
void require_simple(const AbstractGraph& g);

struct PlanarityResult {
  bool planar = true;
  std::vector<std::pair<std::size_t, std::size_t>> kuratowski;  // when not planar
};

PlanarityResult is_planar(const AbstractGraph& g);

class SearchFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// colors[v] in {1, 2, 3, 4}.
struct Coloring {
  std::vector<int> colors;
};

bool is_proper(const AbstractGraph& g, const Coloring& c);

/// Proper colouring with at most four colours: smallest-last greedy order,
/// Kempe-chain interchanges when a vertex sees all four colours, and exact
/// backtracking if interchanges do not free a colour.
Coloring four_color(const AbstractGraph& g);

/// The crossing-free subgraph (V, E') as an abstract graph on vertex indices.
AbstractGraph skeleton_graph(const Drawing& d, const EdgePartition& p);

}  // namespace pcc
