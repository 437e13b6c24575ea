#pragma once

#include "henig/density.hpp"

#include <json.hpp>

namespace henig {

using Json = nlohmann::json;

struct WitnessSpec {
  Functional f;
  double alpha = 0.0;
};

struct Parameters {
  std::optional<double> mesh, tol, eps, delta, h;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> eps_ladder;
  std::optional<std::vector<double>> eps_list;
  std::optional<int> n_max;
  std::optional<Point> x0;
  std::optional<WitnessSpec> witness;
};

struct SetSpec {
  enum class Kind { points, file, sine_grid };
  Kind kind = Kind::points;
  Points points;
  std::string file;
  double h = 0.01;
  double y_top = 2.0;
};

// One problem file. Cones stay in their tagged JSON form until a Space is fixed.
struct ProblemSpec {
  Space space{2, Norm::l2};
  Json cone;
  std::optional<Json> against;  // second cone for ssp
  std::optional<SetSpec> set;
  Parameters params;
  std::string base_dir;  // for relative set files
};

// Throws InputError with "line L, column C" for syntax errors and the field path otherwise.
ProblemSpec parse_problem(const std::string& text, const std::string& base_dir = ".");
ProblemSpec load_problem(const std::string& path);
Json to_json(const ProblemSpec& p);
std::string serialize(const ProblemSpec& p);

Cone build_cone(const Space& s, const Json& j);
OrderCone build_order_cone(const Space& s, const Json& j, double mesh, std::uint64_t seed);
PointCloud load_set(const Space& s, const SetSpec& set, const std::string& base_dir);
Points read_points_csv(std::istream& in, const std::string& name);

// Deterministic grid of the region {y >= -sin|x|, |x| <= pi/2, y <= y_top}: the curve
// points x = k h, then each column upward in steps of h.
PointCloud sine_grid(double h, double y_top);

std::vector<std::string> fixture_names();
ProblemSpec make_fixture(const std::string& name, double h = 0.01);

}  // namespace henig
