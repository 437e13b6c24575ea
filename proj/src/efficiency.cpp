#include "henig/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace henig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_point(const Point& a, const Point& b) { return a == b; }

// Skyline coordinates for a pointed planar cone: x0 - a lies in the (tol-widened)
// sector exactly when p(a) <= p(x0) and q(a) <= q(x0).
std::optional<std::pair<Point, Point>> skyline_frame(const Space& s, const Cone& C, double tol) {
  if (s.dim != 2) return std::nullopt;
  auto sec = cone_sector(s, C);
  if (!sec || sec->is_plane()) return std::nullopt;
  double tau = std::asin(std::min(1.0, tol));
  if (sec->width + 2 * tau >= kPi - 1e-9) return std::nullopt;
  double a = sec->start - tau, b = sec->end() + tau;
  return std::make_pair(make_point({std::cos(a), std::sin(a)}), make_point({std::cos(b), std::sin(b)}));
}

std::vector<PointLabel> min_skyline(const PointCloud& A, const Point& u, const Point& v) {
  const size_t n = A.points.size();
  std::vector<double> p(n), q(n);
  for (size_t i = 0; i < n; ++i) {
    p[i] = cross2(u, A.points[i]);
    q[i] = cross2(A.points[i], v);
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return p[i] != p[j] ? p[i] < p[j] : q[i] < q[j]; });

  std::vector<PointLabel> out(n);
  double best_q = kInf;
  size_t best = 0;
  for (size_t g = 0; g < n;) {
    size_t e = g;
    while (e < n && p[order[e]] == p[order[g]]) ++e;
    size_t head = order[g];
    for (size_t k = g; k < e; ++k) {
      size_t i = order[k];
      PointLabel& L = out[i];
      if (best_q <= q[i]) {
        L.dominator = best;
      } else if (q[head] < q[i]) {
        L.dominator = head;
      } else {
        L.label = EffLabel::min_only_at_resolution;
      }
    }
    if (q[head] < best_q) {
      best_q = q[head];
      best = head;
    }
    g = e;
  }
  return out;
}

struct Rung {
  double eps;
  HenigDilation H;
  std::optional<Witness> w;
};

std::vector<Rung> build_rungs(const Space& s, const Cone& C, const std::vector<double>& ladder, double mesh,
                              std::uint64_t seed) {
  BasePolytope B = normalize_base(s, C);
  std::vector<Rung> out;
  double cap = std::min(1.0, B.delta_B);
  for (double eps : ladder) {
    if (!(eps > 0 && eps < cap)) continue;
    Rung r{eps, HenigDilation(s, B, eps), std::nullopt};
    SspReport rep = ssp_gap(s, C, r.H, mesh, seed);
    if (rep.verdict == Verdict::holds_certified) {
      WitnessOptions wo;
      wo.mesh = mesh;
      wo.seed = seed;
      r.w = find_witness(s, C, r.H, rep, wo);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Smallest outside-margin of x0 - a over the cloud (sine of the angular excess in 2-D).
double dilating_slack(const Space& s, const PointCloud& A, const Point& x0, const HenigDilation& H) {
  double m = kInf;
  Point d(s.dim);
  for (const auto& a : A.points) {
    if (same_point(a, x0)) continue;
    d.noalias() = x0 - a;
    double v;
    if (H.sector())
      v = std::sin(std::min(H.sector()->excess(d), kPi / 2));
    else
      v = H.gauge(d) - H.eps();
    m = std::min(m, v);
  }
  return m;
}

double bp_slack(const Space& s, const PointCloud& A, const Point& x0, const Functional& f, double alpha) {
  double m = kInf;
  Point d(s.dim);
  for (const auto& a : A.points) {
    if (same_point(a, x0)) continue;
    d.noalias() = a - x0;
    double nd = norm_value(s.norm, d);
    m = std::min(m, (f(d) + alpha * nd) / nd);
  }
  return m;
}

std::optional<GheCertificate> certify_with(const Space& s, const PointCloud& A, const Point& x0,
                                           const std::vector<Rung>& rungs, double tol) {
  for (const auto& r : rungs) {
    double sl = dilating_slack(s, A, x0, r.H);
    if (sl > tol) {
      GheCertificate c;
      c.kind = CertKind::dilating_cone;
      c.eps = r.eps;
      c.base = r.H.base();
      c.slack = sl;
      return c;
    }
    if (r.w) {
      double bs = bp_slack(s, A, x0, r.w->f, r.w->delta2);
      if (bs > tol) {
        GheCertificate c;
        c.kind = CertKind::bishop_phelps;
        c.eps = r.eps;
        c.base = r.H.base();
        c.f = r.w->f;
        c.alpha = r.w->delta2;
        c.slack = bs;
        return c;
      }
    }
  }
  return std::nullopt;
}

bool in_cloud(const PointCloud& A, const Point& x) {
  return std::any_of(A.points.begin(), A.points.end(), [&](const Point& a) { return same_point(a, x); });
}

}  // namespace

void check_cloud(const Space& s, const PointCloud& A) {
  if (A.points.empty()) throw InputError("point cloud '" + A.label + "' is empty");
  for (const auto& x : A.points) check_dim(s, x);
}

std::string to_string(CertKind k) { return k == CertKind::dilating_cone ? "dilating_cone" : "bishop_phelps"; }

std::string to_string(EffLabel l) {
  switch (l) {
    case EffLabel::min_and_ghe: return "min_and_ghe";
    case EffLabel::min_only_at_resolution: return "min_only_at_resolution";
    case EffLabel::dominated: return "dominated";
  }
  return "?";
}

std::vector<PointLabel> min_set(const Space& s, const PointCloud& A, const Cone& C, double tol) {
  check_cloud(s, A);
  if (auto fr = skyline_frame(s, C, tol)) return min_skyline(A, fr->first, fr->second);
  const size_t n = A.points.size();
  std::vector<PointLabel> out(n);
  Point d(s.dim);
  for (size_t i = 0; i < n; ++i) {
    out[i].label = EffLabel::min_only_at_resolution;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || same_point(A.points[i], A.points[j])) continue;
      d.noalias() = A.points[i] - A.points[j];
      if (membership(s, C, d, tol)) {
        out[i].label = EffLabel::dominated;
        out[i].dominator = j;
        break;
      }
    }
  }
  return out;
}

std::vector<double> default_eps_ladder(double delta_B) {
  std::vector<double> l;
  double cap = std::min(1.0, delta_B);
  for (int k = 0; k <= 10; ++k) {
    double e = 0.2 * std::ldexp(1.0, -k);
    if (e < cap) l.push_back(e);
  }
  return l;
}

std::optional<GheCertificate> ghe_certify(const Space& s, const PointCloud& A, const Point& x0, const Cone& C,
                                          const std::vector<double>& eps_ladder, double tol, double mesh,
                                          std::uint64_t seed) {
  check_cloud(s, A);
  check_dim(s, x0);
  if (!in_cloud(A, x0)) throw InputError("ghe_certify: x0 is not a point of the cloud");
  return certify_with(s, A, x0, build_rungs(s, C, eps_ladder, mesh, seed), tol);
}

std::vector<PointLabel> classify_cloud(const Space& s, const PointCloud& A, const Cone& C,
                                       const std::vector<double>& eps_ladder, double tol, double mesh,
                                       std::uint64_t seed) {
  auto labels = min_set(s, A, C, tol);
  auto rungs = build_rungs(s, C, eps_ladder, mesh, seed);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].label == EffLabel::dominated) continue;
    labels[i].cert = certify_with(s, A, A.points[i], rungs, tol);
    if (labels[i].cert) labels[i].label = EffLabel::min_and_ghe;
  }
  return labels;
}

double certificate_slack(const Space& s, const PointCloud& A, const Point& x0, const GheCertificate& cert) {
  if (cert.kind == CertKind::bishop_phelps) return bp_slack(s, A, x0, cert.f, cert.alpha);
  return dilating_slack(s, A, x0, HenigDilation(s, cert.base, cert.eps));
}

PointCloud section(const Space& s, const PointCloud& A, const Point& x0, const OrderCone& K, double tol) {
  check_dim(s, x0);
  PointCloud out;
  out.label = A.label + " section";
  Point d(s.dim);
  for (const auto& a : A.points) {
    d.noalias() = x0 - a;
    if (contains(s, K, d, tol)) out.points.push_back(a);
  }
  return out;
}

std::pair<Point, GheCertificate> scalarize_section(const Space& s, const PointCloud& A, const Point& x0,
                                                   const Cone& C, double delta, const Witness& w, double tol,
                                                   double mesh, std::uint64_t seed) {
  check_cloud(s, A);
  check_dim(s, x0);
  check_dim(s, w.f);
  if (!(delta > 0 && delta < 1)) throw InputError("scalarize_section needs 0 < delta < 1");
  HenigDilation H(s, normalize_base(s, C), delta);
  if (!verify_witness(s, C, H, w, mesh, seed).valid())
    throw PreconditionError("scalarize_section: witness margins are not all positive");
  PointCloud sec = section(s, A, x0, H, tol);
  if (sec.points.empty()) throw PreconditionError("scalarize_section: empty section");

  auto g = [&](const Point& x) { return w.f(x) + w.alpha * norm_value(s.norm, x); };
  const Point* best = &sec.points.front();
  double gb = g(*best);
  for (const auto& a : sec.points) {
    double ga = g(a);
    if (ga < gb || (ga == gb && std::lexicographical_compare(a.data(), a.data() + a.size(), best->data(),
                                                              best->data() + best->size()))) {
      best = &a;
      gb = ga;
    }
  }
  GheCertificate c;
  c.kind = CertKind::bishop_phelps;
  c.eps = delta;
  c.base = H.base();
  c.f = w.f;
  c.alpha = w.alpha;
  c.slack = bp_slack(s, A, *best, w.f, w.alpha);
  if (!(c.slack > tol)) throw std::logic_error("scalarize_section: certificate failed its re-check");
  return {*best, c};
}

std::pair<Point, GheCertificate> ghe_exists(const Space& s, const PointCloud& A, const Cone& C, double eps,
                                            double tol, double mesh, std::uint64_t seed) {
  check_cloud(s, A);
  if (!(eps > 0 && eps < 1)) throw InputError("ghe_exists needs 0 < eps < 1");
  SspReport r0 = ssp_gap(s, C, EpsNeighborhood(s, C, eps, mesh, seed), mesh, seed);
  if (r0.verdict != Verdict::holds_certified) throw PreconditionError("ghe_exists: SSP for (C, C_eps) not certified");
  HenigDilation H(s, normalize_base(s, C), eps);
  SspReport r1 = ssp_gap(s, C, H, mesh, seed);
  if (r1.verdict != Verdict::holds_certified)
    throw PreconditionError("ghe_exists: SSP for (C, C_(B,eps)) not certified");
  WitnessOptions wo;
  wo.mesh = mesh;
  wo.seed = seed;
  auto w = find_witness(s, C, H, r1, wo);
  if (!w) throw PreconditionError("ghe_exists: no witness found at this resolution");
  return scalarize_section(s, A, A.points.front(), C, eps, *w, tol, mesh, seed);
}

}  // namespace henig
