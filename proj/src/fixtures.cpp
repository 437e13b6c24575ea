#include "henig/problem.hpp"

#include <cmath>

namespace henig {

PointCloud sine_grid(double h, double y_top) {
  if (!(h > 0 && h <= 1)) throw InputError("sine_grid needs 0 < h <= 1");
  PointCloud A;
  A.label = "sine_grid";
  const int K = static_cast<int>(std::floor(kPi / (2 * h) + 1e-9));
  for (int k = -K; k <= K; ++k) {
    double x = k * h;
    A.points.push_back(make_point({x, 0.0 - std::sin(std::abs(x))}));
  }
  for (int k = -K; k <= K; ++k) {
    double x = k * h, c = -std::sin(std::abs(x));
    for (int j = 1; c + j * h <= y_top + 1e-12; ++j) A.points.push_back(make_point({x, c + j * h}));
  }
  return A;
}

std::vector<std::string> fixture_names() {
  return {"example-3-ssp", "example-3-bp", "example-4-curve", "example-4-clipped", "example-4-density"};
}

ProblemSpec make_fixture(const std::string& name, double h) {
  ProblemSpec p;
  p.space = Space(2, Norm::l2);
  const double r3 = std::sqrt(3.0);
  Json wedge = {{"polyhedral", {{-1.0, 1.0}, {1.0, 1.0}}}};
  if (name == "example-3-ssp") {
    p.cone = {{"polyhedral", {{-1.0, r3}, {1.0, r3}}}};
    p.against = wedge;
    return p;
  }
  if (name == "example-3-bp") {
    p.cone = {{"bishop_phelps", {{"f", {0.0, 1.0}}, {"alpha", 0.6}}}};
    p.against = Json{{"bishop_phelps", {{"f", {0.0, 1.0}}, {"alpha", 0.3}}}};
    return p;
  }
  if (name == "example-4-curve" || name == "example-4-clipped" || name == "example-4-density") {
    if (!(h > 0 && h <= 1)) throw InputError("fixture grid step h must lie in (0, 1]");
    p.cone = wedge;
    SetSpec set;
    set.kind = SetSpec::Kind::sine_grid;
    set.h = h;
    set.y_top = name == "example-4-curve" ? 2.0 : 1.0;
    p.set = set;
    p.params.x0 = make_point({0.0, 0.0});
    p.params.delta = std::sqrt(2.0) / 2;
    p.params.eps_list = std::vector<double>{0.2, 0.1, 0.05};
    return p;
  }
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace henig
