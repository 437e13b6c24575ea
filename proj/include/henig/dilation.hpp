#pragma once

#include "henig/cones.hpp"

#include <variant>

namespace henig {

// x -> inf_{lambda>0} d(x/lambda, C cap S_X), the smallest eps with x in C_eps.
// Exact in 2-D and for polyhedral C under L2; otherwise evaluated on a sphere
// sample and accurate to within slack().
class EpsGauge {
 public:
  EpsGauge(const Space& s, Cone base, double mesh = 0.05, std::uint64_t seed = 42);

  double operator()(const Point& x) const;
  double slack() const { return slack_; }
  const Cone& base_cone() const { return base_; }
  const std::optional<Sector>& base_sector() const { return sector_; }
  const Points& sphere_sample() const { return sample_; }

 private:
  Space space_;
  Cone base_;
  std::optional<Sector> sector_;
  Points arc_;  // polygonal-norm arc vertices (2-D)
  Points sample_;
  Eigen::MatrixXd gens_;  // unit generators (polyhedral, L2)
  double slack_ = 0.0;
  enum class Mode { sector_l2, sector_poly, nnls, sampled } mode_;
};

// Distance in norm n from c to the ray {t u : t >= 0}.
double ray_distance(Norm n, const Point& c, const Point& u);

class EpsNeighborhood {
 public:
  EpsNeighborhood(const Space& s, const Cone& base, double eps, double mesh = 0.05, std::uint64_t seed = 42);

  double eps() const { return eps_; }
  const Cone& base_cone() const { return gauge_.base_cone(); }
  const EpsGauge& gauge() const { return gauge_; }
  const std::optional<Sector>& sector() const { return sector_; }
  const Points& sphere_sample() const { return gauge_.sphere_sample(); }

 private:
  EpsGauge gauge_;
  double eps_;
  std::optional<Sector> sector_;
};

bool eps_membership(const Space& s, const EpsNeighborhood& n, const Point& x, double tol = kMembershipTol);

class HenigDilation {
 public:
  HenigDilation(const Space& s, BasePolytope base, double eps);

  double eps() const { return eps_; }
  const BasePolytope& base() const { return base_; }
  const std::optional<Sector>& sector() const { return sector_; }
  // min over mu >= 0 of d(mu x / ||x||, conv B), capped at delta_B.
  double gauge(const Point& x) const;

 private:
  Space space_;
  BasePolytope base_;
  double eps_;
  std::optional<Sector> sector_;
};

bool henig_membership(const Space& s, const HenigDilation& h, const Point& x, double tol = kMembershipTol);

// Base rescaled so that delta_B >= 1.
BasePolytope normalize_base(const Space& s, const Cone& c);

using OrderCone = std::variant<Cone, EpsNeighborhood, HenigDilation>;

bool contains(const Space& s, const OrderCone& k, const Point& x, double tol = kMembershipTol);
std::optional<Sector> order_sector(const Space& s, const OrderCone& k);
Point order_interior(const Space& s, const OrderCone& k);
ConeSample order_sample(const Space& s, const OrderCone& k, double mesh, std::uint64_t seed);
std::string describe(const OrderCone& k);

struct InclusionReport {
  BasePolytope base;
  double eps = 0.0;
  double eps_prime = 0.0;  // eps / (2M)
  double alpha = 0.0;      // eps_prime / 2
  size_t samples_a = 0, samples_b = 0;
  Points counterexamples_a;  // members of C_(B,eps) outside C_eps
  Points counterexamples_b;  // members of C_alpha not strictly inside C_(B,eps)
  double max_gauge_a = 0.0;  // largest eps-gauge seen in (a); <= eps expected
  double min_slack_b = 0.0;  // smallest eps - henig gauge in (b); > 0 expected
};

InclusionReport inclusion_check(const Space& s, const Cone& c, double eps, double mesh, std::uint64_t seed);

}  // namespace henig
