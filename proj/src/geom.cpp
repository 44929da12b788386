#include "pcc/geom.hpp"

#include <algorithm>
#include <utility>

namespace pcc {

namespace {

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Wide cross(Coord ax, Coord ay, Coord bx, Coord by) {
  return Wide{ax} * Wide{by} - Wide{ay} * Wide{bx};
}

int sign(Wide v) { return (v > 0) - (v < 0); }

int orient_sign(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y));
}

// Position of p along the dominant axis of segment ab; used for collinear
// overlap tests.
Coord along(const Point& a, const Point& b, const Point& p) {
  return (a.x != b.x) ? p.x : p.y;
}

}  // namespace

void require_in_range(const Point& p) {
  if (!in_range(p)) {
    throw OutOfRange("coordinate (" + std::to_string(p.x) + ", " +
                     std::to_string(p.y) + ") exceeds the 2^30 bound");
  }
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
  require_in_range(p);
  require_in_range(q);
  require_in_range(r);
  return static_cast<Orientation>(orient_sign(p, q, r));
}

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return pcc::to_string(num_);
  return pcc::to_string(num_) + "/" + pcc::to_string(den_);
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Disjoint: return "Disjoint";
    case IntersectionKind::ProperCrossing: return "ProperCrossing";
    case IntersectionKind::EndpointTouch: return "EndpointTouch";
    case IntersectionKind::EndpointOnInterior: return "EndpointOnInterior";
    case IntersectionKind::Overlap: return "Overlap";
  }
  return "?";
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Intersection classify_segments(const Segment& s, const Segment& t) {
  for (const Point* p : {&s.a, &s.b, &t.a, &t.b}) require_in_range(*p);
  if (s.a == s.b || t.a == t.b) {
    throw std::invalid_argument("degenerate segment");
  }

  // Bounding boxes first: most pairs in a drawing are far apart.
  if (std::max(s.a.x, s.b.x) < std::min(t.a.x, t.b.x) ||
      std::max(t.a.x, t.b.x) < std::min(s.a.x, s.b.x) ||
      std::max(s.a.y, s.b.y) < std::min(t.a.y, t.b.y) ||
      std::max(t.a.y, t.b.y) < std::min(s.a.y, s.b.y)) {
    return {};
  }

  const int o1 = orient_sign(s.a, s.b, t.a);
  const int o2 = orient_sign(s.a, s.b, t.b);
  const int o3 = orient_sign(t.a, t.b, s.a);
  const int o4 = orient_sign(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the parameter intervals on the shared line.
    Coord s0 = along(s.a, s.b, s.a), s1 = along(s.a, s.b, s.b);
    Coord t0 = along(s.a, s.b, t.a), t1 = along(s.a, s.b, t.b);
    if (s0 > s1) std::swap(s0, s1);
    if (t0 > t1) std::swap(t0, t1);
    Coord lo = std::max(s0, t0), hi = std::min(s1, t1);
    if (lo > hi) return {};
    if (lo < hi) return {IntersectionKind::Overlap, {}};
    // Single common point; it is an endpoint of both segments.
    const Point& q = (along(s.a, s.b, s.a) == lo) ? s.a : s.b;
    return {IntersectionKind::EndpointTouch, RationalPoint(q)};
  }

  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    if (o1 == o2 || o3 == o4) return {};
    const Wide rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    const Wide qx = t.b.x - t.a.x, qy = t.b.y - t.a.y;
    const Wide den = rx * qy - ry * qx;
    const Wide tnum = Wide{t.a.x - s.a.x} * qy - Wide{t.a.y - s.a.y} * qx;
    RationalPoint p(Rational(Wide{s.a.x} * den + rx * tnum, den),
                    Rational(Wide{s.a.y} * den + ry * tnum, den));
    return {IntersectionKind::ProperCrossing, p};
  }

  // Exactly the degenerate non-collinear cases remain: some endpoint lies on
  // the supporting line of the other segment.
  for (const Point* p : {&s.a, &s.b}) {
    if (*p == t.a || *p == t.b) {
      return {IntersectionKind::EndpointTouch, RationalPoint(*p)};
    }
  }
  if (o1 == 0 && on_segment(s.a, s.b, t.a)) {
    return {IntersectionKind::EndpointOnInterior, RationalPoint(t.a)};
  }
  if (o2 == 0 && on_segment(s.a, s.b, t.b)) {
    return {IntersectionKind::EndpointOnInterior, RationalPoint(t.b)};
  }
  if (o3 == 0 && on_segment(t.a, t.b, s.a)) {
    return {IntersectionKind::EndpointOnInterior, RationalPoint(s.a)};
  }
  if (o4 == 0 && on_segment(t.a, t.b, s.b)) {
    return {IntersectionKind::EndpointOnInterior, RationalPoint(s.b)};
  }
  return {};
}

}  // namespace pcc
