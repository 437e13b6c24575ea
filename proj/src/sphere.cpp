#include "henig/space.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <tuple>

namespace henig {

namespace {

SphereSample circle(Norm n, double mesh) {
  SphereSample out;
  if (n == Norm::l2) {
    int N = static_cast<int>(std::ceil(2 * std::numbers::pi / mesh));
    for (int i = 0; i < N; ++i) {
      double t = 2 * std::numbers::pi * i / N;
      out.points.push_back(make_point({std::cos(t), std::sin(t)}));
    }
    out.covering_radius = 2 * std::sin(std::numbers::pi / (2.0 * N));
    return out;
  }
  // polygonal unit sphere: walk the four edges (each has length 2 in its own norm)
  std::vector<Point> corners = n == Norm::linf
                                   ? Points{make_point({1, -1}), make_point({1, 1}), make_point({-1, 1}),
                                            make_point({-1, -1})}
                                   : Points{make_point({1, 0}), make_point({0, 1}), make_point({-1, 0}),
                                            make_point({0, -1})};
  int m = static_cast<int>(std::ceil(1.0 / mesh));
  for (int e = 0; e < 4; ++e) {
    const Point& a = corners[e];
    const Point& b = corners[(e + 1) % 4];
    for (int i = 0; i < m; ++i) out.points.push_back(a + (b - a) * (static_cast<double>(i) / m));
  }
  out.covering_radius = 1.0 / m;
  return out;
}

// Integer lattice on the surface of [-1,1]^d, pushed radially onto S_X.
SphereSample cube_lattice(int dim, Norm n, double mesh) {
  double s = n == Norm::l2 ? mesh * std::sqrt(2.0) : (n == Norm::linf ? 2 * mesh : mesh / 2);
  int k = std::max(1, static_cast<int>(std::ceil(2.0 / s)));
  s = 2.0 / k;
  SphereSample out;
  std::vector<int> idx(dim, 0);
  while (true) {
    bool surface = false;
    for (int v : idx)
      if (v == 0 || v == k) surface = true;
    if (surface) {
      Point p(dim);
      for (int i = 0; i < dim; ++i) p[i] = -1.0 + s * idx[i];
      out.points.push_back(p / norm_value(n, p));
    }
    int i = 0;
    while (i < dim && ++idx[i] > k) idx[i++] = 0;
    if (i == dim) break;
  }
  double face = n == Norm::l2 ? s / 2 * std::sqrt(dim - 1.0) : (n == Norm::linf ? s / 2 : s / 2 * (dim - 1));
  out.covering_radius = n == Norm::l1 ? 2 * face : face;
  return out;
}

SphereSample random_directions(int dim, Norm n, double mesh, std::uint64_t seed) {
  double want = 2.0 * std::pow(2.0 / mesh, dim - 1);
  auto count = static_cast<size_t>(std::min(20000.0, std::ceil(want)));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  auto draw = [&]() {
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = g(rng);
    return Point(p / norm_value(n, p));
  };
  SphereSample out;
  for (int i = 0; i < 2 * dim; ++i) {  // coordinate axes always included
    Point e = Point::Zero(dim);
    e[i / 2] = i % 2 ? -1.0 : 1.0;
    out.points.push_back(e);
  }
  while (out.points.size() < count) out.points.push_back(draw());
  // covering estimate from independent probes, padded by 1.5
  double worst = 0.0;
  for (int t = 0; t < 400; ++t) {
    Point p = draw();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : out.points) best = std::min(best, norm_value(n, p - q));
    worst = std::max(worst, best);
  }
  out.covering_radius = 1.5 * worst;
  return out;
}

}  // namespace

SphereSample sample_unit_sphere(const Space& s, double mesh, std::uint64_t seed) {
  if (!(mesh > 0 && mesh < 1)) throw InputError("sample_unit_sphere: mesh must lie in (0,1)");
  if (s.dim == 1) return {{make_point({1}), make_point({-1})}, 0.0};
  if (s.dim == 2) return circle(s.norm, mesh);
  if (s.dim == 3) return cube_lattice(3, s.norm, mesh);

  static std::mutex mu;
  static std::map<std::tuple<int, int, double, std::uint64_t>, SphereSample> cache;
  auto key = std::make_tuple(s.dim, static_cast<int>(s.norm), mesh, seed);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SphereSample out = random_directions(s.dim, s.norm, mesh, seed);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace henig
