#pragma once

#include <Eigen/Dense>

namespace henig::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  double value = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd dual;  // row prices y with c - A'y >= 0 at the optimum
};

// min c'x  s.t.  A x = b, x >= 0.  Dense two-phase simplex.
Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

// min ||G w - x||_2 s.t. w >= 0 (Lawson-Hanson).
Eigen::VectorXd nnls(const Eigen::MatrixXd& G, const Eigen::VectorXd& x);

}  // namespace henig::lp
