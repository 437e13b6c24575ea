#pragma once

#include "henig/separation.hpp"

namespace henig {

struct PointCloud {
  Points points;
  std::string label;
};

void check_cloud(const Space& s, const PointCloud& A);

enum class CertKind { dilating_cone, bishop_phelps };
std::string to_string(CertKind k);

struct GheCertificate {
  CertKind kind = CertKind::dilating_cone;
  double eps = 0.0;    // dilation scale the certificate came from
  BasePolytope base;   // dilating_cone
  Functional f;        // bishop_phelps
  double alpha = 0.0;  // bishop_phelps
  double slack = 0.0;  // smallest margin over the other points; > 0 when valid
};

enum class EffLabel { min_and_ghe, min_only_at_resolution, dominated };
std::string to_string(EffLabel l);

struct PointLabel {
  EffLabel label = EffLabel::dominated;
  std::optional<size_t> dominator;
  std::optional<GheCertificate> cert;
};

// Min vs dominated only (ghe points come out as min_only_at_resolution).
std::vector<PointLabel> min_set(const Space& s, const PointCloud& A, const Cone& C, double tol = kMembershipTol);

std::vector<double> default_eps_ladder(double delta_B);

std::optional<GheCertificate> ghe_certify(const Space& s, const PointCloud& A, const Point& x0, const Cone& C,
                                          const std::vector<double>& eps_ladder, double tol = kMembershipTol,
                                          double mesh = 0.05, std::uint64_t seed = 42);

// min_set followed by ghe_certify on every Min point; same answers, shared work.
std::vector<PointLabel> classify_cloud(const Space& s, const PointCloud& A, const Cone& C,
                                       const std::vector<double>& eps_ladder, double tol = kMembershipTol,
                                       double mesh = 0.05, std::uint64_t seed = 42);

// Recomputes the certificate's slack for x0 against the whole cloud.
double certificate_slack(const Space& s, const PointCloud& A, const Point& x0, const GheCertificate& cert);

PointCloud section(const Space& s, const PointCloud& A, const Point& x0, const OrderCone& K,
                   double tol = kMembershipTol);

std::pair<Point, GheCertificate> scalarize_section(const Space& s, const PointCloud& A, const Point& x0,
                                                   const Cone& C, double delta, const Witness& w,
                                                   double tol = kMembershipTol, double mesh = 0.05,
                                                   std::uint64_t seed = 42);

std::pair<Point, GheCertificate> ghe_exists(const Space& s, const PointCloud& A, const Cone& C, double eps,
                                            double tol = kMembershipTol, double mesh = 0.05,
                                            std::uint64_t seed = 42);

}  // namespace henig
