#pragma once

#include "henig/efficiency.hpp"

namespace henig {

inline constexpr int kDefaultNMax = 20000;

struct ShrinkReport {
  double eps = 0.0;
  std::optional<int> n_eps;
  std::vector<double> max_norm_in_section;  // entry n-1 for n = 1, 2, ...
};

// Smallest n with A cap (-C_{1/n}) inside the closed eps-ball. 0 must be a Min point of A.
ShrinkReport section_shrink(const Space& s, const PointCloud& A, const Cone& C, double eps, int n_max = kDefaultNMax,
                            double tol = kMembershipTol, double mesh = 0.05, std::uint64_t seed = 42);

struct ApproxOptions {
  double delta = 0.5;
  double tol = kMembershipTol;
  int n_max = kDefaultNMax;
  double mesh = 0.05;
  std::uint64_t seed = 42;
};

struct LocalResult {
  std::optional<Point> x;
  std::optional<GheCertificate> cert;
  double distance = 0.0;
  std::string failed_stage;  // ssp, shrink, witness, scalarize; empty on success
  int n_eps = 0;
  int m = 0;
};

LocalResult local_approximation(const Space& s, const PointCloud& A, const Cone& C, const Point& xbar, double eps,
                                const ApproxOptions& opt = {});

struct DensityRow {
  size_t index = 0;  // of xbar in the cloud
  Point xbar;
  double eps = 0.0;
  LocalResult result;
};

struct DensityTable {
  std::vector<DensityRow> rows;
  size_t successes = 0, failures = 0;
};

DensityTable abb_experiment(const Space& s, const PointCloud& A, const Cone& C, const std::vector<double>& eps_list,
                            const ApproxOptions& opt = {});

}  // namespace henig
