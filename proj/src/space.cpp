#include "henig/space.hpp"
#include "henig/hull.hpp"

#include <cmath>
#include <limits>

namespace henig {

std::string to_string(Norm n) {
  switch (n) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
  }
  return "?";
}

Norm parse_norm(std::string_view s) {
  if (s == "l1" || s == "L1") return Norm::l1;
  if (s == "l2" || s == "L2") return Norm::l2;
  if (s == "linf" || s == "Linf" || s == "LINF") return Norm::linf;
  throw InputError("unknown norm '" + std::string(s) + "' (expected l1, l2 or linf)");
}

Norm dual(Norm n) {
  switch (n) {
    case Norm::l1: return Norm::linf;
    case Norm::linf: return Norm::l1;
    default: return Norm::l2;
  }
}

Space::Space(int d, Norm n) : dim(d), norm(n) {
  if (d < 1) throw InputError("space dimension must be >= 1");
}

Functional::Functional(std::initializer_list<double> c) : coeffs(static_cast<Eigen::Index>(c.size())) {
  Eigen::Index i = 0;
  for (double v : c) coeffs[i++] = v;
}

Point make_point(std::initializer_list<double> c) {
  Point p(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double v : c) p[i++] = v;
  return p;
}

void check_dim(const Space& s, const Point& x) {
  if (x.size() != s.dim)
    throw InputError("dimension mismatch: point has " + std::to_string(x.size()) + " coordinates, space has " +
                     std::to_string(s.dim));
}

void check_dim(const Space& s, const Functional& f) {
  if (f.dim() != s.dim)
    throw InputError("dimension mismatch: functional has " + std::to_string(f.dim()) +
                     " coefficients, space has " + std::to_string(s.dim));
}

double norm_value(Norm n, const Eigen::VectorXd& x) {
  switch (n) {
    case Norm::l1: return x.lpNorm<1>();
    case Norm::l2: return x.norm();
    case Norm::linf: return x.size() ? x.lpNorm<Eigen::Infinity>() : 0.0;
  }
  return 0.0;
}

double norm(const Space& s, const Point& x) {
  check_dim(s, x);
  return norm_value(s.norm, x);
}

double dual_norm(const Space& s, const Functional& f) {
  check_dim(s, f);
  return norm_value(dual(s.norm), f.coeffs);
}

Point norming_point(const Space& s, const Functional& f) {
  check_dim(s, f);
  const Eigen::VectorXd& c = f.coeffs;
  Point x = Point::Zero(s.dim);
  switch (s.norm) {
    case Norm::l2: x = c / c.norm(); break;
    case Norm::linf:
      // every sign vector attains ||f||_1; zeros go to +1
      for (int i = 0; i < s.dim; ++i) x[i] = c[i] < 0 ? -1.0 : 1.0;
      break;
    case Norm::l1: {
      Eigen::Index k;
      c.cwiseAbs().maxCoeff(&k);
      x[k] = c[k] < 0 ? -1.0 : 1.0;
      break;
    }
  }
  return x;
}

Functional norming_functional(const Space& s, const Point& x) {
  check_dim(s, x);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(s.dim);
  switch (s.norm) {
    case Norm::l2: c = x / x.norm(); break;
    case Norm::l1:
      for (int i = 0; i < s.dim; ++i) c[i] = x[i] < 0 ? -1.0 : (x[i] > 0 ? 1.0 : 0.0);
      break;
    case Norm::linf: {
      Eigen::Index k;
      x.cwiseAbs().maxCoeff(&k);
      c[k] = x[k] < 0 ? -1.0 : 1.0;
      break;
    }
  }
  return Functional(c);
}

double dist_to_cloud(const Space& s, const Point& x, const Points& A) {
  check_dim(s, x);
  if (A.empty()) throw InputError("dist_to_cloud: empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : A) {
    check_dim(s, a);
    best = std::min(best, norm_value(s.norm, x - a));
  }
  return best;
}

bool thickened_set_membership(const Space& s, const Point& x, const Points& A, double eps) {
  if (!(eps > 0)) throw InputError("thickened_set_membership: eps must be positive");
  return dist_to_cloud(s, x, A) <= eps;
}

HullDistance polytope_distance(const Space& s, const Points& P, const Points& Q) {
  if (P.empty() || Q.empty()) throw InputError("polytope_distance: empty vertex set");
  for (const auto& p : P) check_dim(s, p);
  for (const auto& q : Q) check_dim(s, q);
  if (s.norm == Norm::l2)
    return convex_distance_l2(s.dim, polytope_support(P), polytope_support(Q), P.front(), Q.front());
  return polytope_distance_lp(s.norm, P, Q);
}

double dist_to_polytope(const Space& s, const Point& x, const Points& V) {
  check_dim(s, x);
  if (V.empty()) throw InputError("dist_to_polytope: empty vertex set");
  if (V.size() == 1) return norm(s, x - V.front());
  return polytope_distance(s, Points{x}, V).distance;
}

}  // namespace henig
