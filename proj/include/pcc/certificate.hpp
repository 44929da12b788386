// Replays the linear sparsity argument for PCC drawings on a concrete
// drawing and records every inequality it relies on.
//
// The chain, per drawing with n vertices:
//   per face f of a plane component:   |E''(f)| <= CP(|f|, 8) <= 16|f|
//   per component i:                   |E''_{i,i}| <= 96 |V_i|
//   per component pair i < j:          |E''_{i,j}| <= 8 (|V_{i,j}| + |V_{j,i}|)
//   per component i:                   sum_j |V_{i,j}| <= 3 |V_i| + 12 deg_H(u_i)
//   totals:                            |E''| <= 696 n,  |E| <= 699 n
// where CP is the maximum size of a convex geometric graph without 9
// pairwise crossing edges and H is the component graph.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcc/checkers.hpp"
#include "pcc/drawing.hpp"
#include "pcc/planar.hpp"

namespace pcc {

/// Largest crossing family allowed inside one face (no 9 pairwise crossing).
inline constexpr std::uint64_t kFaceFamilyCap = 8;

class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of edges of an n-vertex convex geometric graph with no
/// k + 1 pairwise crossing edges: C(n, 2) if n <= 2k + 1, otherwise
/// 2kn - C(2k + 1, 2).
std::uint64_t capoyleas_pach_bound(std::uint64_t n, std::uint64_t k);

struct FaceRecord {
  std::size_t component = 0;
  std::size_t face = 0;
  std::uint64_t size = 0;            // |f_j|
  std::uint64_t crossed_edges = 0;   // |E''(f_j)|
  std::uint64_t max_family = 0;      // largest pairwise-interleaving chord set, capped at 9
  std::uint64_t cp_bound = 0;        // CP(|f_j|, 8)
  std::uint64_t coarse_bound = 0;    // 16 |f_j|
  bool trace_consistent = true;      // interleaving chords cross in the drawing
};

struct ComponentRecord {
  std::size_t component = 0;
  std::uint64_t vertices = 0;        // |V_i|
  std::uint64_t planar_edges = 0;    // |E'_i|
  std::uint64_t faces = 0;
  std::uint64_t face_size_sum = 0;   // sum |f_j|, equals 2 |E'_i|
  std::uint64_t intra_edges = 0;     // |E''_{i,i}|
  std::uint64_t cp_sum = 0;          // sum CP(|f_j|, 8)
  std::uint64_t coarse_sum = 0;      // sum 16 |f_j| = 32 |E'_i|
  std::uint64_t bound = 0;           // 96 |V_i|
};

struct IntraAudit {
  std::vector<ComponentRecord> components;
  std::vector<FaceRecord> faces;
};

struct GStarAudit {
  int color_left = 0;
  int color_right = 0;
  std::uint64_t edges = 0;
  std::uint64_t left = 0;    // |V_{i,j}^c|
  std::uint64_t right = 0;   // |V_{j,i}^c'|
  bool crossing_free = true;
  bool bipartite = true;

  std::uint64_t bound() const { return 2 * (left + right); }
};

struct PairRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t edges = 0;       // |E''_{i,j}|
  std::uint64_t boundary_i = 0;  // |V_{i,j}|
  std::uint64_t boundary_j = 0;  // |V_{j,i}|
  std::vector<GStarAudit> audits;

  std::uint64_t bound() const { return 8 * (boundary_i + boundary_j); }
};

struct HcAudit {
  std::size_t component = 0;
  int color = 0;
  std::uint64_t vertices = 0;  // |V_i^c| + deg_H(u_i)
  std::uint64_t edges = 0;     // sum_j |V_{i,j}^c|
  bool planar = true;
};

struct SumRecord {
  std::size_t component = 0;
  std::uint64_t vertices = 0;       // |V_i|
  std::uint64_t degree_h = 0;       // deg_H(u_i)
  std::uint64_t boundary_sum = 0;   // sum_{j != i} |V_{i,j}|
  std::vector<HcAudit> audits;

  std::uint64_t bound() const { return 3 * vertices + 12 * degree_h; }
};

struct HRecord {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool planar = true;
};

struct Totals {
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  std::uint64_t planar_edges = 0;    // |E'|
  std::uint64_t crossed_edges = 0;   // |E''|
  std::uint64_t intra_edges = 0;     // sum_i |E''_{i,i}|
  std::uint64_t inter_edges = 0;     // sum_{i<j} |E''_{i,j}|
  std::uint64_t boundary_sum = 0;    // sum_i sum_{j != i} |V_{i,j}|
  std::uint64_t h_edges = 0;

  std::uint64_t planar_bound() const { return 3 * n; }
  std::uint64_t intra_bound() const { return 96 * n; }
  std::uint64_t crossed_bound() const { return 696 * n; }
  std::uint64_t total_bound() const { return 699 * n; }
  double density() const { return n == 0 ? 0.0 : static_cast<double>(edges) / n; }
};

struct Certificate {
  bool hypothesis_ok = false;
  PccReport hypothesis;
  std::vector<ComponentRecord> components;
  std::vector<FaceRecord> faces;
  HRecord h;
  std::vector<PairRecord> pairs;
  std::vector<SumRecord> sums;
  Totals totals;

  /// Every recorded inequality holds and every planarity flag is set.
  bool valid() const;
};

IntraAudit verify_intra(const Drawing& d, const Decomposition& dec,
                        const std::vector<FaceAssignment>& faces);

/// One vertex per component, an edge where E''_{i,j} is nonempty.
AbstractGraph build_H(const Decomposition& dec);

std::vector<PairRecord> verify_inter(const Drawing& d, const Decomposition& dec,
                                     const Coloring& coloring);

std::vector<SumRecord> verify_sum(const Decomposition& dec, const AbstractGraph& h,
                                  const Coloring& coloring);

/// Re-checks every record; throws LemmaViolation naming the first failure.
void audit(const Certificate& cert);

/// Full pipeline. A drawing failing the hypothesis yields hypothesis_ok =
/// false and no bound records.
Certificate certify(const Drawing& d);

}  // namespace pcc
