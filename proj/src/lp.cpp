#include "henig/lp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace henig::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;

struct Tableau {
  Eigen::MatrixXd T;
  std::vector<Eigen::Index> basis;
  Eigen::Index rows, cols;  // constraint rows, structural+artificial columns

  double& rhs(Eigen::Index i) { return T(i, cols); }

  void pivot(Eigen::Index r, Eigen::Index k) {
    T.row(r) /= T(r, k);
    for (Eigen::Index i = 0; i <= rows; ++i) {
      if (i == r) continue;
      double v = T(i, k);
      if (v != 0.0) T.row(i) -= v * T.row(r);
    }
    basis[r] = k;
  }

  // Returns false when unbounded.
  bool run(Eigen::Index allowed) {
    int degenerate = 0;
    for (int iter = 0; iter < 100000; ++iter) {
      bool bland = degenerate > 50;
      Eigen::Index k = -1;
      double best = -kCostTol;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        double d = T(rows, j);
        if (d < best) {
          k = j;
          if (bland) break;
          best = d;
        }
      }
      if (k < 0) return true;
      Eigen::Index r = -1;
      double ratio = 0.0;
      for (Eigen::Index i = 0; i < rows; ++i) {
        double a = T(i, k);
        if (a <= kPivotTol) continue;
        double q = T(i, cols) / a;
        if (r < 0 || q < ratio - 1e-14 || (q <= ratio + 1e-14 && basis[i] < basis[r])) {
          r = i;
          ratio = q;
        }
      }
      if (r < 0) return false;
      degenerate = ratio <= 1e-14 ? degenerate + 1 : 0;
      pivot(r, k);
    }
    return true;
  }
};

}  // namespace

Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  Tableau tb;
  tb.rows = m;
  tb.cols = n + m;
  tb.T = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tb.basis.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double sg = b[i] < 0 ? -1.0 : 1.0;
    tb.T.row(i).head(n) = sg * A.row(i);
    tb.T(i, n + i) = 1.0;
    tb.rhs(i) = sg * b[i];
    tb.basis[i] = n + i;
  }
  // phase 1: minimise the sum of artificials
  for (Eigen::Index i = 0; i < m; ++i) {
    tb.T.row(m).head(n) -= tb.T.row(i).head(n);
    tb.T(m, tb.cols) -= tb.rhs(i);
  }
  tb.run(tb.cols);
  Result res;
  double scale = 1.0 + b.cwiseAbs().sum();
  if (-tb.T(m, tb.cols) > 1e-9 * scale) return res;

  for (Eigen::Index i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(tb.T(i, j)) > 1e-9) {
        tb.pivot(i, j);
        break;
      }
    }
  }

  tb.T.row(m).setZero();
  tb.T.row(m).head(n) = c.transpose();
  for (Eigen::Index i = 0; i < m; ++i)
    if (tb.basis[i] < n) tb.T.row(m) -= c[tb.basis[i]] * tb.T.row(i);
  if (!tb.run(n)) {
    res.status = Status::unbounded;
    return res;
  }
  res.status = Status::optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = std::max(0.0, tb.rhs(i));
  res.value = c.dot(res.x);
  res.dual.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) res.dual[i] = -(b[i] < 0 ? -1.0 : 1.0) * tb.T(m, n + i);
  return res;
}

Eigen::VectorXd nnls(const Eigen::MatrixXd& G, const Eigen::VectorXd& x) {
  const Eigen::Index n = G.cols();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(n, false);
  const double tol = 1e-13 * (1.0 + G.cwiseAbs().maxCoeff()) * (1.0 + x.cwiseAbs().maxCoeff());

  auto solve_passive = [&](std::vector<Eigen::Index>& idx) {
    idx.clear();
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[j]) idx.push_back(j);
    Eigen::MatrixXd Gp(G.rows(), static_cast<Eigen::Index>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) Gp.col(static_cast<Eigen::Index>(k)) = G.col(idx[k]);
    return Eigen::VectorXd(Gp.colPivHouseholderQr().solve(x));
  };

  for (Eigen::Index outer = 0; outer < 3 * n + 10; ++outer) {
    Eigen::VectorXd grad = G.transpose() * (x - G * w);
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[j] && grad[j] > best) {
        best = grad[j];
        t = j;
      }
    if (t < 0) break;
    passive[t] = true;
    std::vector<Eigen::Index> idx;
    for (int inner = 0; inner < 3 * n + 10; ++inner) {
      Eigen::VectorXd z = solve_passive(idx);
      bool ok = true;
      for (Eigen::Index k = 0; k < z.size(); ++k)
        if (z[k] <= 0) ok = false;
      if (ok) {
        w.setZero();
        for (size_t k = 0; k < idx.size(); ++k) w[idx[k]] = z[static_cast<Eigen::Index>(k)];
        break;
      }
      double a = 1.0;
      for (size_t k = 0; k < idx.size(); ++k) {
        double zk = z[static_cast<Eigen::Index>(k)], wk = w[idx[k]];
        if (zk <= 0) a = std::min(a, wk / (wk - zk));
      }
      for (size_t k = 0; k < idx.size(); ++k) {
        Eigen::Index j = idx[k];
        w[j] += a * (z[static_cast<Eigen::Index>(k)] - w[j]);
        if (w[j] <= 1e-15) {
          w[j] = 0.0;
          passive[j] = false;
        }
      }
      // the newest column can be dropped immediately when a == 0; stop cycling
      if (std::none_of(passive.begin(), passive.end(), [](bool b) { return b; })) break;
    }
  }
  return w;
}

}  // namespace henig::lp
