#pragma once

#include "henig/space.hpp"

#include <functional>
#include <numbers>
#include <optional>

// Planar cones are angular sectors; everything here is exact up to rounding.
namespace henig {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double t);  // into [0, 2pi)
double angle_of(const Point& x);
// Point of unit norm n in direction theta.
Point unit_at(Norm n, double theta);
double cross2(const Point& a, const Point& b);

struct Sector {
  double start = 0.0;  // angle of the first ray (counter-clockwise orientation)
  double width = 0.0;  // in [0, 2pi]

  static Sector plane() { return {0.0, kTwoPi}; }
  static Sector from_angles(double lo, double hi);  // hi - lo measured ccw, clamped to a plane

  bool is_plane() const { return width >= kTwoPi - 1e-14; }
  double end() const { return start + width; }
  double center() const { return start + width / 2; }
  Point first_ray() const;
  Point last_ray() const;
  Sector negated() const { return {wrap_angle(start + kPi), width}; }

  // Angle by which x's direction lies outside the sector (<= 0 inside).
  double excess(const Point& x) const;
  // tol is an angular tolerance (sine of the allowed excess).
  bool contains(const Point& x, double tol) const;
  // Strictly inside by at least margin (angular sine).
  bool contains_strictly(const Point& x, double margin) const;
};

// Sector of cone(dirs); nullopt when the cone is a full line.
std::optional<Sector> sector_of_directions(const Points& dirs);

// Arc {theta : g(unit_at(n, theta)) >= 0} containing `center`, found by bisection.
Sector sector_from_predicate(Norm n, double center, const std::function<bool(const Point&)>& inside);

// Vertices of conv(arc of S_X over the sector) for a polygonal norm.
Points arc_vertices(Norm n, const Sector& s);
// Unit points along the arc with spacing at most mesh (norm length); covering radius returned.
SphereSample arc_sample(Norm n, const Sector& s, double mesh);
// argmin over the arc of <d, x>.
Point arc_support(Norm n, const Sector& s, const Point& d);
// min over the arc of f.
double arc_min(Norm n, const Sector& s, const Functional& f);

}  // namespace henig
