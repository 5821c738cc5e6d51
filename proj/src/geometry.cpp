#include "linkcube/geometry.hpp"

#include <cstdlib>

namespace linkcube {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Vec2 {
  double x, y;
};

inline Vec2 project(const Point3& p, const Direction& d) {
  return {dot(p, d.u), dot(p, d.v)};
}

inline double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Orientation of r relative to the directed line p->q.
inline double orient2(const Vec2& p, const Vec2& q, const Vec2& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// det[b-a, c-a, d-a]; positive when d lies on the side of plane (a,b,c)
// pointed to by (b-a) x (c-a).
inline double orient3(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return dot(cross(b - a, c - a), d - a);
}

// Signed transversal intersection of oriented segment (q0,q1) with oriented
// triangle (t0,t1,t2): +1 along the triangle normal, -1 against it, 0 when
// there is no interior crossing.
int segment_triangle_crossing(const Point3& q0, const Point3& q1, const Point3& t0,
                              const Point3& t1, const Point3& t2) {
  double dp = orient3(t0, t1, t2, q0);
  double dq = orient3(t0, t1, t2, q1);
  if (std::abs(dp) < kDegenerateTol || std::abs(dq) < kDegenerateTol)
    throw DegenerateIntersection("segment endpoint on triangle plane");
  if ((dp > 0) == (dq > 0)) return 0;
  double s1 = orient3(q0, q1, t0, t1);
  double s2 = orient3(q0, q1, t1, t2);
  double s3 = orient3(q0, q1, t2, t0);
  if (std::abs(s1) < kDegenerateTol || std::abs(s2) < kDegenerateTol ||
      std::abs(s3) < kDegenerateTol)
    throw DegenerateIntersection("segment meets triangle boundary");
  bool pos = s1 > 0;
  if ((s2 > 0) != pos || (s3 > 0) != pos) return 0;
  return dq > 0 ? 1 : -1;
}

}  // namespace

Direction Direction::along(const Vec3& d) {
  double n = norm(d);
  if (n < 1e-9) throw std::invalid_argument("Direction::along: zero vector");
  Direction out;
  out.axis = d * (1.0 / n);
  Vec3 h = std::abs(out.axis.x) <= 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 u = cross(h, out.axis);
  out.u = u * (1.0 / norm(u));
  out.v = cross(out.axis, out.u);
  return out;
}

const Direction& Direction::plus_z() {
  static const Direction d = Direction::along({0, 0, 1});
  return d;
}

const Direction& Direction::plus_x() {
  static const Direction d = Direction::along({1, 0, 0});
  return d;
}

int signed_crossing(const Segment& a, const Segment& b, const Direction& dir) {
  Vec2 a0 = project(a.tail, dir), a1 = project(a.head, dir);
  Vec2 b0 = project(b.tail, dir), b1 = project(b.head, dir);

  double d1 = orient2(b0, b1, a0);
  double d2 = orient2(b0, b1, a1);
  double d3 = orient2(a0, a1, b0);
  double d4 = orient2(a0, a1, b1);
  if (std::abs(d1) < kDegenerateTol || std::abs(d2) < kDegenerateTol ||
      std::abs(d3) < kDegenerateTol || std::abs(d4) < kDegenerateTol)
    throw DegenerateProjection("near-degenerate orientation determinant");

  if ((d1 > 0) == (d2 > 0) || (d3 > 0) == (d4 > 0)) return 0;

  // Proper crossing; interpolate heights along the view axis.
  double t = d1 / (d1 - d2);
  double s = d3 / (d3 - d4);
  double ha = dir.height(a.tail);
  ha += t * (dir.height(a.head) - ha);
  double hb = dir.height(b.tail);
  hb += s * (dir.height(b.head) - hb);
  if (std::abs(ha - hb) < kDegenerateTol)
    throw DegenerateProjection("strands at equal height at crossing");

  double sigma = cross2({a1.x - a0.x, a1.y - a0.y}, {b1.x - b0.x, b1.y - b0.y});
  if (std::abs(sigma) < kDegenerateTol)
    throw DegenerateProjection("parallel projected segments");
  int sign = sigma > 0 ? 1 : -1;
  return ha > hb ? sign : -sign;
}

int linking_number(std::span<const Point3> a, std::span<const Point3> b, const Direction& dir) {
  int sum = 0;
  std::size_t na = a.size(), nb = b.size();
  for (std::size_t i = 0; i < na; ++i) {
    Segment ea{a[i], a[(i + 1) % na]};
    for (std::size_t j = 0; j < nb; ++j) {
      Segment eb{b[j], b[(j + 1) % nb]};
      sum += signed_crossing(ea, eb, dir);
    }
  }
  if (sum % 2 != 0) throw OddCrossingSum("odd signed crossing sum between disjoint cycles");
  return sum / 2;
}

int linking_number_oracle(std::span<const Point3> a, std::span<const Point3> b) {
  int total = 0;
  std::size_t na = a.size(), nb = b.size();
  for (std::size_t i = 1; i + 1 < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      total += segment_triangle_crossing(b[j], b[(j + 1) % nb], a[0], a[i], a[i + 1]);
    }
  }
  return total;
}

int directional_writhe(std::span<const Point3> poly, const Direction& dir) {
  int sum = 0;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei{poly[i], poly[(i + 1) % n]};
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // cyclically adjacent
      Segment ej{poly[j], poly[(j + 1) % n]};
      sum += signed_crossing(ei, ej, dir);
    }
  }
  return sum;
}

Direction sample_direction(Pcg32& rng) {
  double z = 2.0 * rng.uniform01() - 1.0;
  double phi = kTwoPi * rng.uniform01();
  double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction::along({r * std::cos(phi), r * std::sin(phi), z});
}

}  // namespace linkcube
