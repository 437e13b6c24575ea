#include "henig/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace henig {

namespace {

constexpr int kNever = std::numeric_limits<int>::max();

// Largest n with gauge value g inside C_{1/n} (kNever if inside all of them).
int last_section(double g) {
  if (g <= 0) return kNever;
  double r = 1.0 / g;
  if (r >= 1e9) return kNever;
  int n = std::max(1, static_cast<int>(std::floor(r)));
  while (1.0 / (n + 1) >= g) ++n;
  while (n > 1 && 1.0 / n < g) --n;
  return n;
}

// Shrink scan for the cloud seen from `origin` (points a - origin).
ShrinkReport shrink_from(const Space& s, const PointCloud& A, const Point& origin, const EpsGauge& G, double eps,
                         int n_max, double tol) {
  ShrinkReport rep;
  rep.eps = eps;
  std::vector<double> bucket(static_cast<size_t>(n_max) + 2, 0.0);
  double always = 0.0;
  Point d(s.dim);
  for (const auto& a : A.points) {
    d.noalias() = origin - a;
    double na = norm_value(s.norm, d);
    if (na == 0.0) continue;
    int n = last_section(G(d) - tol - G.slack());
    if (n >= n_max) always = std::max(always, na);
    else bucket[static_cast<size_t>(n)] = std::max(bucket[static_cast<size_t>(n)], na);
  }
  // max_norm(n) = max over points whose last section is >= n
  std::vector<double> suffix(static_cast<size_t>(n_max) + 2, always);
  for (int n = n_max - 1; n >= 1; --n)
    suffix[static_cast<size_t>(n)] = std::max(suffix[static_cast<size_t>(n) + 1], bucket[static_cast<size_t>(n)]);
  for (int n = 1; n <= n_max; ++n) {
    rep.max_norm_in_section.push_back(suffix[static_cast<size_t>(n)]);
    if (suffix[static_cast<size_t>(n)] <= eps) {
      rep.n_eps = n;
      break;
    }
  }
  return rep;
}

bool is_min_point(const Space& s, const PointCloud& A, const Point& x, const Cone& C, double tol) {
  Point d(s.dim);
  for (const auto& a : A.points) {
    if (a == x) continue;
    d.noalias() = x - a;
    if (membership(s, C, d, tol)) return false;
  }
  return true;
}

class Approximator {
 public:
  Approximator(const Space& s, const PointCloud& A, const Cone& C, const ApproxOptions& opt)
      : s_(s), A_(A), C_(C), opt_(opt), gauge_(s, C, opt.mesh, opt.seed), base_(normalize_base(s, C)) {
    if (!(opt.delta > 0 && opt.delta < 1)) throw InputError("delta must lie in (0,1)");
    SspReport r = ssp_gap(s, C, EpsNeighborhood(s, C, opt.delta, opt.mesh, opt.seed), opt.mesh, opt.seed);
    if (r.verdict != Verdict::holds_certified)
      throw PreconditionError("SSP for (C, C_delta) is not certified on this instance");
  }

  LocalResult run(const Point& xbar, double eps) {
    LocalResult res;
    ShrinkReport sh = shrink_from(s_, A_, xbar, gauge_, eps, opt_.n_max, opt_.tol);
    if (!sh.n_eps) {
      res.failed_stage = "shrink";
      return res;
    }
    res.n_eps = *sh.n_eps;
    res.m = std::max(res.n_eps, static_cast<int>(std::floor(1.0 / opt_.delta))) + 1;
    const Stage& st = stage(res.m);
    if (!st.failed.empty()) {
      res.failed_stage = st.failed;
      return res;
    }
    // minimise g(a - xbar) over the section at xbar
    const Witness& w = *st.w;
    Point d(s_.dim);
    const Point* best = nullptr;
    double gb = 0.0;
    for (const auto& a : A_.points) {
      d.noalias() = xbar - a;
      if (!henig_membership(s_, *st.H, d, opt_.tol)) continue;
      double ga = -w.f(d) + w.alpha * norm_value(s_.norm, d);
      if (!best || ga < gb ||
          (ga == gb && std::lexicographical_compare(a.data(), a.data() + a.size(), best->data(),
                                                    best->data() + best->size()))) {
        best = &a;
        gb = ga;
      }
    }
    GheCertificate c;
    c.kind = CertKind::bishop_phelps;
    c.eps = 1.0 / res.m;
    c.base = base_;
    c.f = w.f;
    c.alpha = w.alpha;
    c.slack = certificate_slack(s_, A_, *best, c);
    res.distance = norm_value(s_.norm, *best - xbar);
    if (!(c.slack > opt_.tol) || !(res.distance < eps)) {
      res.failed_stage = "scalarize";
      return res;
    }
    res.x = *best;
    res.cert = c;
    return res;
  }

 private:
  struct Stage {
    std::optional<HenigDilation> H;
    std::optional<Witness> w;
    std::string failed;
  };

  const Stage& stage(int m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    Stage st;
    st.H.emplace(s_, base_, 1.0 / m);
    SspReport r = ssp_gap(s_, C_, *st.H, opt_.mesh, opt_.seed);
    if (r.verdict != Verdict::holds_certified) {
      st.failed = "ssp";
    } else {
      WitnessOptions wo;
      wo.mesh = opt_.mesh;
      wo.seed = opt_.seed;
      st.w = find_witness(s_, C_, *st.H, r, wo);
      if (!st.w) st.failed = "witness";
    }
    return cache_.emplace(m, std::move(st)).first->second;
  }

  Space s_;
  const PointCloud& A_;
  const Cone& C_;
  ApproxOptions opt_;
  EpsGauge gauge_;
  BasePolytope base_;
  std::map<int, Stage> cache_;
};

}  // namespace

ShrinkReport section_shrink(const Space& s, const PointCloud& A, const Cone& C, double eps, int n_max, double tol,
                            double mesh, std::uint64_t seed) {
  check_cloud(s, A);
  if (!(eps > 0 && eps < 1)) throw InputError("section_shrink needs 0 < eps < 1");
  if (n_max < 1) throw InputError("section_shrink needs n_max >= 1");
  Point zero = Point::Zero(s.dim);
  bool has_zero = std::any_of(A.points.begin(), A.points.end(), [&](const Point& a) { return a == zero; });
  if (!has_zero) throw PreconditionError("section_shrink: 0 is not in the cloud");
  if (!is_min_point(s, A, zero, C, tol)) throw PreconditionError("section_shrink: 0 is not a Min point");
  return shrink_from(s, A, zero, EpsGauge(s, C, mesh, seed), eps, n_max, tol);
}

LocalResult local_approximation(const Space& s, const PointCloud& A, const Cone& C, const Point& xbar, double eps,
                                const ApproxOptions& opt) {
  check_cloud(s, A);
  check_dim(s, xbar);
  if (!(eps > 0)) throw InputError("local_approximation needs eps > 0");
  if (std::none_of(A.points.begin(), A.points.end(), [&](const Point& a) { return a == xbar; }))
    throw InputError("local_approximation: xbar is not a point of the cloud");
  if (!is_min_point(s, A, xbar, C, opt.tol)) throw PreconditionError("local_approximation: xbar is not a Min point");
  return Approximator(s, A, C, opt).run(xbar, eps);
}

DensityTable abb_experiment(const Space& s, const PointCloud& A, const Cone& C, const std::vector<double>& eps_list,
                            const ApproxOptions& opt) {
  check_cloud(s, A);
  DensityTable t;
  if (eps_list.empty()) return t;
  for (double e : eps_list)
    if (!(e > 0)) throw InputError("eps values must be positive");
  auto labels = min_set(s, A, C, opt.tol);
  Approximator ap(s, A, C, opt);
  for (size_t i = 0; i < A.points.size(); ++i) {
    if (labels[i].label == EffLabel::dominated) continue;
    for (double e : eps_list) {
      DensityRow row;
      row.index = i;
      row.xbar = A.points[i];
      row.eps = e;
      row.result = ap.run(A.points[i], e);
      (row.result.x ? t.successes : t.failures)++;
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace henig
