#include "henig/hull.hpp"
#include "henig/lp.hpp"

#include <cmath>
#include <limits>

namespace henig {

SupportFn polytope_support(const Points& V) {
  return [&V](const Point& d) -> Point {
    size_t best = 0;
    double bv = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < V.size(); ++i) {
      double v = d.dot(V[i]);
      if (v < bv) {
        bv = v;
        best = i;
      }
    }
    return V[best];
  };
}

namespace {

struct Atom {
  Point p, q, s;  // s = p - q
};

// Weights minimising ||sum w_i s_i|| over the affine hull of the atoms.
Eigen::VectorXd affine_min(const std::vector<Atom>& atoms) {
  const auto k = static_cast<Eigen::Index>(atoms.size());
  Eigen::MatrixXd H(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) H(i, j) = H(j, i) = atoms[i].s.dot(atoms[j].s) + 1.0;
  Eigen::VectorXd y = H.colPivHouseholderQr().solve(Eigen::VectorXd::Ones(k));
  return y / y.sum();
}

}  // namespace

HullDistance convex_distance_l2(int dim, const SupportFn& P, const SupportFn& Q, const Point& p0,
                                const Point& q0) {
  std::vector<Atom> atoms{{p0, q0, p0 - q0}};
  Eigen::VectorXd lam = Eigen::VectorXd::Ones(1);
  Point x = atoms[0].s;
  double scale = 1.0 + x.norm();

  auto combine = [&]() {
    x = Point::Zero(dim);
    for (size_t i = 0; i < atoms.size(); ++i) x += lam[static_cast<Eigen::Index>(i)] * atoms[i].s;
  };

  for (int major = 0; major < 500; ++major) {
    double xn = x.norm();
    if (xn <= 1e-15 * scale) break;
    Point p = P(x), q = Q(-x);
    Point s = p - q;
    scale = std::max(scale, 1.0 + s.norm());
    // duality gap on the distance: ||x|| - <x, s>/||x||
    if (xn - x.dot(s) / xn <= 1e-13 * scale) break;
    bool dup = false;
    for (const auto& a : atoms)
      if ((a.s - s).squaredNorm() <= 1e-28 * scale * scale) dup = true;
    if (dup) break;
    atoms.push_back({p, q, s});
    lam.conservativeResize(lam.size() + 1);
    lam[lam.size() - 1] = 0.0;

    for (int minor = 0; minor < 100; ++minor) {
      Eigen::VectorXd mu = affine_min(atoms);
      if ((mu.array() > 1e-14).all()) {
        lam = mu;
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < mu.size(); ++i)
        if (mu[i] <= 1e-14) theta = std::min(theta, lam[i] / (lam[i] - mu[i]));
      lam = lam + theta * (mu - lam);
      std::vector<Atom> keep;
      std::vector<double> kl;
      for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam[i] > 1e-14) {
          keep.push_back(atoms[static_cast<size_t>(i)]);
          kl.push_back(lam[i]);
        }
      if (keep.empty()) {  // numerical breakdown; keep the newest atom
        keep.push_back(atoms.back());
        kl.push_back(1.0);
      }
      atoms = std::move(keep);
      lam = Eigen::Map<Eigen::VectorXd>(kl.data(), static_cast<Eigen::Index>(kl.size()));
      lam /= lam.sum();
    }
    combine();
  }

  HullDistance out;
  out.p = Point::Zero(dim);
  out.q = Point::Zero(dim);
  for (size_t i = 0; i < atoms.size(); ++i) {
    out.p += lam[static_cast<Eigen::Index>(i)] * atoms[i].p;
    out.q += lam[static_cast<Eigen::Index>(i)] * atoms[i].q;
  }
  out.distance = (out.p - out.q).norm();
  if (out.distance > 0) out.separator = (out.p - out.q) / out.distance;
  return out;
}

HullDistance polytope_distance_lp(Norm n, const Points& P, const Points& Q) {
  const auto d = static_cast<Eigen::Index>(P.front().size());
  const auto k = static_cast<Eigen::Index>(P.size());
  const auto l = static_cast<Eigen::Index>(Q.size());
  Eigen::MatrixXd A;
  Eigen::VectorXd b, c;
  if (n == Norm::linf) {
    // vars: lambda(k) mu(l) t sp(d) sm(d); rows: diff - t + sp = 0, diff + t - sm = 0
    const Eigen::Index nv = k + l + 1 + 2 * d;
    A = Eigen::MatrixXd::Zero(2 * d + 2, nv);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) A(i, j) = A(d + i, j) = P[static_cast<size_t>(j)][i];
      for (Eigen::Index j = 0; j < l; ++j) A(i, k + j) = A(d + i, k + j) = -Q[static_cast<size_t>(j)][i];
      A(i, k + l) = -1.0;
      A(d + i, k + l) = 1.0;
      A(i, k + l + 1 + i) = 1.0;
      A(d + i, k + l + 1 + d + i) = -1.0;
    }
    A.row(2 * d).head(k).setOnes();
    A.row(2 * d + 1).segment(k, l).setOnes();
    b = Eigen::VectorXd::Zero(2 * d + 2);
    b[2 * d] = b[2 * d + 1] = 1.0;
    c = Eigen::VectorXd::Zero(nv);
    c[k + l] = 1.0;
  } else {
    // vars: lambda(k) mu(l) ep(d) em(d); rows: diff - ep + em = 0
    const Eigen::Index nv = k + l + 2 * d;
    A = Eigen::MatrixXd::Zero(d + 2, nv);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) A(i, j) = P[static_cast<size_t>(j)][i];
      for (Eigen::Index j = 0; j < l; ++j) A(i, k + j) = -Q[static_cast<size_t>(j)][i];
      A(i, k + l + i) = -1.0;
      A(i, k + l + d + i) = 1.0;
    }
    A.row(d).head(k).setOnes();
    A.row(d + 1).segment(k, l).setOnes();
    b = Eigen::VectorXd::Zero(d + 2);
    b[d] = b[d + 1] = 1.0;
    c = Eigen::VectorXd::Zero(nv);
    c.tail(2 * d).setOnes();
  }
  lp::Result r = lp::solve(A, b, c);
  if (r.status != lp::Status::optimal) throw std::runtime_error("polytope distance LP failed");
  HullDistance out;
  out.p = Point::Zero(d);
  out.q = Point::Zero(d);
  double sp = r.x.head(k).sum(), sq = r.x.segment(k, l).sum();
  for (Eigen::Index j = 0; j < k; ++j) out.p += r.x[j] / sp * P[static_cast<size_t>(j)];
  for (Eigen::Index j = 0; j < l; ++j) out.q += r.x[k + j] / sq * Q[static_cast<size_t>(j)];
  out.distance = norm_value(n, out.p - out.q);
  if (out.distance > 1e-13) {
    // f = -(prices of the coordinate rows), see the LP dual
    out.separator = -r.dual.head(d);
    if (n == Norm::linf) out.separator -= r.dual.segment(d, d);
  }
  return out;
}

}  // namespace henig
