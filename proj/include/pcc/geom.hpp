// Exact geometric primitives over bounded integer coordinates.
//
// All predicates are evaluated in 128-bit integer arithmetic. Input
// coordinates are limited to |x|, |y| <= 2^30, which keeps every determinant
// and every crossing-point numerator inside a signed 128-bit word.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcc {

using Coord = std::int64_t;
using Wide = __int128;

inline constexpr Coord kCoordLimit = Coord{1} << 30;

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline bool in_range(const Point& p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

/// Throws OutOfRange when a coordinate exceeds the supported bound.
void require_in_range(const Point& p);

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Sign of the doubled signed area of triangle pqr.
Orientation orient(const Point& p, const Point& q, const Point& r);

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Wide num, Wide den);
  explicit Rational(Coord value) : num_(value), den_(1) {}

  Wide num() const { return num_; }
  Wide den() const { return den_; }
  double to_double() const;
  std::string to_string() const;

  // Lexicographic on the canonical (num, den) pair. This is a total order
  // for use as a key, not the numeric order.
  friend auto operator<=>(const Rational&, const Rational&) = default;

 private:
  Wide num_ = 0;
  Wide den_ = 1;
};

struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational px, Rational py) : x(px), y(py) {}
  explicit RationalPoint(const Point& p) : x(p.x), y(p.y) {}

  friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

enum class IntersectionKind {
  Disjoint,
  ProperCrossing,
  EndpointTouch,
  EndpointOnInterior,
  Overlap,
};

const char* to_string(IntersectionKind kind);

/// Result of classifying two segments. `point` is meaningful for
/// ProperCrossing (the crossing), EndpointTouch (the shared endpoint) and
/// EndpointOnInterior (the endpoint lying inside the other segment).
struct Intersection {
  IntersectionKind kind = IntersectionKind::Disjoint;
  RationalPoint point;

  friend bool operator==(const Intersection&, const Intersection&) = default;
};

/// Exact classification of a pair of nondegenerate segments. Symmetric in
/// its arguments.
Intersection classify_segments(const Segment& s, const Segment& t);

/// True when p lies on the closed segment ab (including its endpoints).
bool on_segment(const Point& a, const Point& b, const Point& p);

std::string to_string(Wide value);

}  // namespace pcc
