#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace henig {

using Point = Eigen::VectorXd;
using Points = std::vector<Point>;

// Bad input shape or value (CLI exit 3).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation called outside its hypotheses (CLI exit 4).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Norm { l1, l2, linf };

std::string to_string(Norm n);
Norm parse_norm(std::string_view s);
Norm dual(Norm n);

struct Space {
  int dim;
  Norm norm;

  Space(int d, Norm n);
};

// Acts on points by the standard pairing.
struct Functional {
  Eigen::VectorXd coeffs;

  Functional() = default;
  explicit Functional(Eigen::VectorXd c) : coeffs(std::move(c)) {}
  Functional(std::initializer_list<double> c);

  double operator()(const Point& x) const { return coeffs.dot(x); }
  int dim() const { return static_cast<int>(coeffs.size()); }
  Functional operator-() const { return Functional(-coeffs); }
  Functional scaled(double s) const { return Functional(coeffs * s); }
};

Point make_point(std::initializer_list<double> c);

void check_dim(const Space& s, const Point& x);
void check_dim(const Space& s, const Functional& f);

double norm_value(Norm n, const Eigen::VectorXd& x);
double norm(const Space& s, const Point& x);
double dual_norm(const Space& s, const Functional& f);

// Unit x with f(x) = dual_norm(f). f must be nonzero.
Point norming_point(const Space& s, const Functional& f);
// f with dual_norm(f) = 1 and f(x) = norm(x). x must be nonzero.
Functional norming_functional(const Space& s, const Point& x);

double dist_to_cloud(const Space& s, const Point& x, const Points& A);
bool thickened_set_membership(const Space& s, const Point& x, const Points& A, double eps);

inline constexpr double tol_qp = 1e-9;

struct HullDistance {
  double distance = 0.0;
  Point p;  // in conv(P)
  Point q;  // in conv(Q)
  // dual-norm-1 functional with min_P f - max_Q f = distance (empty if distance is 0)
  Eigen::VectorXd separator;
};

// Distance between conv(P) and conv(Q) with a nearest pair.
HullDistance polytope_distance(const Space& s, const Points& P, const Points& Q);
double dist_to_polytope(const Space& s, const Point& x, const Points& V);

struct SphereSample {
  Points points;
  double covering_radius = 0.0;
};

// Finite unit-norm set covering S_X to within covering_radius (<= mesh up to dim 3).
SphereSample sample_unit_sphere(const Space& s, double mesh, std::uint64_t seed);

}  // namespace henig
