// Drawing generators. All return raw DrawingData; callers validate.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "pcc/drawing.hpp"

namespace pcc {

class TooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorSeed {
  std::uint64_t value = 0;
};

inline constexpr std::size_t kTothMinVertices = 10;
inline constexpr std::size_t kStarMaxVertices = 12;

/// Number of edges of toth_construction(n).
constexpr std::uint64_t toth_edge_count(std::uint64_t n) { return 9 * n - 54; }

/// The dense PCC construction: n - 6 vertices on the y-axis joined to their
/// next, second-next (arc to the left) and third-next (arc to the right)
/// neighbours, plus three vertices on each side joined to every axis vertex
/// and to each other. Exactly 9n - 54 edges. Throws TooSmall for n < 10.
///
/// Vertex ids: axis 0..n-7 bottom to top, left side n-6..n-4, right side
/// n-3..n-1.
DrawingData toth_construction(std::size_t n);

/// K_n drawn with a crossing-free star at vertex 0 (so every crossing pair is
/// joined through vertex 0 by two crossing-free edges). The other vertices
/// lie on a parabola whose abscissae are drawn from `seed`. Requires
/// 3 <= n <= 12.
DrawingData star_complete(std::size_t n, GeneratorSeed seed);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// n random grid points in general position; straight candidate edges are
/// tried shortest first (ties broken by endpoint ids) and kept iff the
/// drawing stays valid and PCC. Stops after m_target edges.
DrawingData random_pcc_greedy(std::size_t n, std::size_t m_target, GeneratorSeed seed);

}  // namespace pcc
