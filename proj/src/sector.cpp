#include "henig/sector.hpp"

#include <algorithm>
#include <cmath>

namespace henig {

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

double angle_of(const Point& x) { return wrap_angle(std::atan2(x[1], x[0])); }

Point unit_at(Norm n, double theta) {
  Point u = make_point({std::cos(theta), std::sin(theta)});
  return u / norm_value(n, u);
}

double cross2(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

Sector Sector::from_angles(double lo, double hi) {
  if (hi - lo >= kTwoPi - 1e-14) return plane();
  return {wrap_angle(lo), std::max(0.0, hi - lo)};
}

Point Sector::first_ray() const { return make_point({std::cos(start), std::sin(start)}); }
Point Sector::last_ray() const { return make_point({std::cos(end()), std::sin(end())}); }

double Sector::excess(const Point& x) const {
  if (is_plane()) return -kPi;
  double phi = wrap_angle(angle_of(x) - start);
  if (phi <= width) return -std::min(phi, width - phi);
  return std::min(phi - width, kTwoPi - phi);
}

bool Sector::contains(const Point& x, double tol) const {
  if (x[0] == 0.0 && x[1] == 0.0) return true;
  return excess(x) <= std::asin(std::min(1.0, tol));
}

bool Sector::contains_strictly(const Point& x, double margin) const {
  if (x[0] == 0.0 && x[1] == 0.0) return false;
  return excess(x) < -std::asin(std::min(1.0, margin));
}

std::optional<Sector> sector_of_directions(const Points& dirs) {
  std::vector<double> a;
  for (const auto& d : dirs)
    if (d.norm() > 0) a.push_back(angle_of(d));
  if (a.empty()) return std::nullopt;
  std::sort(a.begin(), a.end());
  size_t k = a.size();
  size_t gi = 0;
  double gap = -1.0;
  for (size_t i = 0; i < k; ++i) {
    double g = (i + 1 < k ? a[i + 1] : a[0] + kTwoPi) - a[i];
    if (g > gap) {
      gap = g;
      gi = i;
    }
  }
  double first = a[(gi + 1) % k];
  if (gap > kPi + 1e-12) return Sector{first, kTwoPi - gap};
  if (gap < kPi - 1e-12) return Sector::plane();
  // largest gap is exactly pi: half-plane unless all directions sit on one line
  for (double t : a) {
    double phi = wrap_angle(t - first);
    if (phi > 1e-12 && phi < kPi - 1e-12) return Sector{first, kPi};
  }
  return std::nullopt;
}

Sector sector_from_predicate(Norm n, double center, const std::function<bool(const Point&)>& inside) {
  if (inside(unit_at(n, center + kPi))) {
    // antipode inside: the arc is the whole circle only if every probe agrees
    bool all = true;
    for (int i = 0; i < 64 && all; ++i) all = inside(unit_at(n, center + kTwoPi * i / 64));
    if (all) return Sector::plane();
  }
  auto reach = [&](double sign) {
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      double mid = 0.5 * (lo + hi);
      (inside(unit_at(n, center + sign * mid)) ? lo : hi) = mid;
    }
    return lo;
  };
  double right = reach(1.0), left = reach(-1.0);
  return Sector::from_angles(center - left, center + right);
}

namespace {

std::vector<double> corner_angles(Norm n) {
  double off = n == Norm::linf ? kPi / 4 : 0.0;
  return {off, off + kPi / 2, off + kPi, off + 3 * kPi / 2};
}

// Arc breakpoints as offsets from s.start, in order.
std::vector<double> arc_offsets(Norm n, const Sector& s) {
  std::vector<double> off;
  if (!s.is_plane()) off.push_back(0.0);
  for (double c : corner_angles(n)) {
    double phi = wrap_angle(c - s.start);
    if (s.is_plane() || (phi > 0 && phi < s.width)) off.push_back(phi);
  }
  std::sort(off.begin(), off.end());
  if (!s.is_plane() && s.width > 0) off.push_back(s.width);
  return off;
}

}  // namespace

Points arc_vertices(Norm n, const Sector& s) {
  Points v;
  for (double o : arc_offsets(n, s)) v.push_back(unit_at(n, s.start + o));
  return v;
}

SphereSample arc_sample(Norm n, const Sector& s, double mesh) {
  SphereSample out;
  if (n == Norm::l2) {
    int N = std::max(1, static_cast<int>(std::ceil(s.width / (2 * mesh))));
    int last = s.is_plane() ? N - 1 : N;
    if (s.width == 0) last = 0;
    for (int i = 0; i <= last; ++i) out.points.push_back(unit_at(n, s.start + s.width * i / N));
    out.covering_radius = s.width == 0 ? 0.0 : 2 * std::sin(s.width / (4.0 * N));
    return out;
  }
  Points v = arc_vertices(n, s);
  if (s.is_plane()) v.push_back(v.front());
  if (v.size() == 1) return {v, 0.0};
  double cover = 0.0;
  for (size_t j = 0; j + 1 < v.size(); ++j) {
    double len = norm_value(n, v[j + 1] - v[j]);
    int m = std::max(1, static_cast<int>(std::ceil(len / mesh)));
    for (int i = 0; i < m; ++i) out.points.push_back(v[j] + (v[j + 1] - v[j]) * (static_cast<double>(i) / m));
    cover = std::max(cover, len / m / 2);
  }
  if (!s.is_plane()) out.points.push_back(v.back());
  out.covering_radius = cover;
  return out;
}

Point arc_support(Norm n, const Sector& s, const Point& d) {
  if (n == Norm::l2) {
    if (d.norm() > 0) {
      Point c = -d / d.norm();
      if (s.contains(c, 0.0)) return c;
    }
    Point a = unit_at(n, s.start), b = unit_at(n, s.end());
    return d.dot(a) <= d.dot(b) ? a : b;
  }
  Points v = arc_vertices(n, s);
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (d.dot(v[i]) < d.dot(v[best])) best = i;
  return v[best];
}

double arc_min(Norm n, const Sector& s, const Functional& f) { return f(arc_support(n, s, f.coeffs)); }

}  // namespace henig
