#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "linkcube/rng.hpp"

namespace linkcube {

// Absolute tolerance for orientation determinants and height gaps.
// Configurations this close to degenerate are rejected, never guessed.
inline constexpr double kDegenerateTol = 1e-12;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

using Point3 = Vec3;

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Segment {
  Point3 tail;
  Point3 head;
};

struct DegenerateProjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateIntersection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Internal consistency failure: the raw signed crossing sum between two
// disjoint closed curves must always be even.
struct OddCrossingSum : std::logic_error {
  using std::logic_error::logic_error;
};

// A unit projection direction with a precomputed right-handed orthonormal
// frame (u, v, axis).  Crossing signs are invariant under in-plane rotation
// of (u, v), so the particular completion does not matter.
struct Direction {
  Vec3 axis;  // unit within 1e-12
  Vec3 u;
  Vec3 v;

  static Direction along(const Vec3& d);
  static const Direction& plus_z();
  static const Direction& plus_x();

  double height(const Point3& p) const { return dot(p, axis); }
};

// Signed crossing of the projections of two oriented segments that share no
// endpoint.  0 when the projected open segments do not intersect; otherwise
// the sign of the projected orientation determinant, negated when `a` passes
// under `b`.  Throws DegenerateProjection when any determinant or the height
// gap falls below kDegenerateTol.
int signed_crossing(const Segment& a, const Segment& b, const Direction& dir);

// Half the signed crossing sum over all edge pairs of two vertex-disjoint
// closed polygons (>= 3 vertices each).
int linking_number(std::span<const Point3> a, std::span<const Point3> b, const Direction& dir);

// Independent linking oracle: fan-triangulates `a` from its first vertex and
// sums signed transversal intersections of b's edges with the fan. Equals the
// linking number for any spanning 2-chain, self-intersecting or not.
int linking_number_oracle(std::span<const Point3> a, std::span<const Point3> b);

// Algebraic self-crossing sum of one closed polygon over all unordered pairs
// of non-adjacent edges (adjacent edges contribute 0 by convention).
int directional_writhe(std::span<const Point3> poly, const Direction& dir);

// Uniform direction on S^2: uniform height, uniform angle.
Direction sample_direction(Pcg32& rng);

}  // namespace linkcube
