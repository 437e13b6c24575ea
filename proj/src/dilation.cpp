#include "henig/dilation.hpp"
#include "henig/hull.hpp"
#include "henig/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace henig {

namespace {

Points ball_corners(Norm n) {
  if (n == Norm::linf) return {make_point({1, 1}), make_point({-1, 1}), make_point({-1, -1}), make_point({1, -1})};
  return {make_point({1, 0}), make_point({0, 1}), make_point({-1, 0}), make_point({0, -1})};
}

double signed_angle(const Point& from, const Point& to) {
  return std::atan2(cross2(from, to), from.dot(to));
}

// Sector spanned by the union of the sets {v + eps*B} over v, relative to a centre direction.
std::optional<Sector> thickened_sector(Norm n, const Points& verts, double eps, const Point& centre) {
  double ctr = angle_of(centre);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  Point cdir = make_point({std::cos(ctr), std::sin(ctr)});
  for (const auto& v : verts) {
    double rv = signed_angle(cdir, v);
    if (n == Norm::l2) {
      double r = v.norm();
      if (eps >= r) return Sector::plane();
      double ext = std::asin(eps / r);
      lo = std::min(lo, rv - ext);
      hi = std::max(hi, rv + ext);
    } else {
      for (const auto& w : ball_corners(n)) {
        Point y = v + eps * w;
        if (y.norm() == 0.0) return Sector::plane();
        double ry = rv + signed_angle(v, y);
        lo = std::min(lo, ry);
        hi = std::max(hi, ry);
      }
    }
  }
  return Sector::from_angles(ctr + lo, ctr + hi);
}

}  // namespace

double ray_distance(Norm n, const Point& c, const Point& u) {
  if (n == Norm::l2) {
    double t = std::max(0.0, c.dot(u)) / u.squaredNorm();
    return (c - t * u).norm();
  }
  std::vector<double> ts{0.0};
  const auto d = c.size();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (u[i] != 0) ts.push_back(c[i] / u[i]);
    if (n == Norm::linf)
      for (Eigen::Index j = 0; j < i; ++j) {
        if (u[i] != u[j]) ts.push_back((c[i] - c[j]) / (u[i] - u[j]));
        if (u[i] != -u[j]) ts.push_back((c[i] + c[j]) / (u[i] + u[j]));
      }
  }
  double best = std::numeric_limits<double>::infinity();
  for (double t : ts)
    if (t >= 0) best = std::min(best, norm_value(n, c - t * u));
  return best;
}

EpsGauge::EpsGauge(const Space& s, Cone base, double mesh, std::uint64_t seed)
    : space_(s), base_(std::move(base)) {
  sector_ = cone_sector(s, base_);
  if (sector_) {
    if (s.norm == Norm::l2) {
      mode_ = Mode::sector_l2;
    } else {
      mode_ = Mode::sector_poly;
      arc_ = arc_vertices(s.norm, *sector_);
      if (sector_->is_plane()) arc_.push_back(arc_.front());
    }
    return;
  }
  if (auto p = base_.as<Polyhedral>(); p && s.norm == Norm::l2) {
    mode_ = Mode::nnls;
    gens_.resize(s.dim, static_cast<Eigen::Index>(p->generators.size()));
    for (size_t i = 0; i < p->generators.size(); ++i)
      gens_.col(static_cast<Eigen::Index>(i)) = p->generators[i] / p->generators[i].norm();
    return;
  }
  mode_ = Mode::sampled;
  ConeSample cs = cone_sample(s, base_, mesh, seed);
  sample_ = std::move(cs.surface);
  slack_ = cs.surface_radius;
}

double EpsGauge::operator()(const Point& x) const {
  check_dim(space_, x);
  double nx = norm_value(space_.norm, x);
  if (nx == 0.0) return 0.0;
  Point u = x / nx;
  switch (mode_) {
    case Mode::sector_l2: {
      double th = sector_->excess(x);
      if (th <= 0) return 0.0;
      if (th >= kPi / 2) return 1.0;
      return std::sin(th);
    }
    case Mode::sector_poly: {
      if (sector_->excess(x) <= 0) return 0.0;
      double best = 1.0;
      Points ray{Point::Zero(2), 2 * u};
      if (arc_.size() == 1) return std::min(best, ray_distance(space_.norm, arc_[0], u));
      for (size_t j = 0; j + 1 < arc_.size(); ++j)
        best = std::min(best, polytope_distance_lp(space_.norm, {arc_[j], arc_[j + 1]}, ray).distance);
      return best;
    }
    case Mode::nnls: {
      Point v = x / x.norm();
      Eigen::VectorXd w = lp::nnls(gens_, v);
      Point p = gens_ * w;
      if (p.norm() < 1e-12) return 1.0;
      return std::min(1.0, (v - p).norm());
    }
    case Mode::sampled: {
      double best = 1.0;
      for (const auto& c : sample_) best = std::min(best, ray_distance(space_.norm, c, u));
      return best;
    }
  }
  return 1.0;
}

EpsNeighborhood::EpsNeighborhood(const Space& s, const Cone& base, double eps, double mesh, std::uint64_t seed)
    : gauge_(s, base, mesh, seed), eps_(eps) {
  if (!(eps > 0 && eps < 1)) throw InputError("eps-conic neighbourhood needs 0 < eps < 1");
  if (auto sec = gauge_.base_sector()) {
    if (sec->is_plane()) {
      sector_ = Sector::plane();
    } else if (s.norm == Norm::l2) {
      double e = std::asin(eps);
      sector_ = Sector::from_angles(sec->start - e, sec->end() + e);
    } else {
      Point ctr = make_point({std::cos(sec->center()), std::sin(sec->center())});
      sector_ = thickened_sector(s.norm, arc_vertices(s.norm, *sec), eps, ctr);
    }
  }
}

bool eps_membership(const Space& s, const EpsNeighborhood& n, const Point& x, double tol) {
  check_dim(s, x);
  if (x.norm() == 0.0) return true;
  if (n.sector()) return n.sector()->contains(x, tol);
  return n.gauge()(x) <= n.eps() + tol + n.gauge().slack();
}

HenigDilation::HenigDilation(const Space& s, BasePolytope base, double eps)
    : space_(s), base_(std::move(base)), eps_(eps) {
  if (!(eps > 0 && eps < std::min(1.0, base_.delta_B)))
    throw InputError("Henig dilating cone needs 0 < eps < min(1, delta_B)");
  if (s.dim == 2) {
    Point ctr = Point::Zero(2);
    for (const auto& v : base_.vertices) ctr += v / v.norm();
    sector_ = thickened_sector(s.norm, base_.vertices, eps, ctr);
  }
}

double HenigDilation::gauge(const Point& x) const {
  check_dim(space_, x);
  double nx = norm_value(space_.norm, x);
  if (nx == 0.0) return 0.0;
  double R = base_.M + base_.delta_B;
  return polytope_distance(space_, {Point::Zero(space_.dim), x * (R / nx)}, base_.vertices).distance;
}

bool henig_membership(const Space& s, const HenigDilation& h, const Point& x, double tol) {
  check_dim(s, x);
  if (x.norm() == 0.0) return true;
  if (h.sector()) return h.sector()->contains(x, tol);
  return h.gauge(x) <= h.eps() + tol;
}

BasePolytope normalize_base(const Space& s, const Cone& c) {
  auto b = bounded_base(s, c);
  if (!b) throw PreconditionError("cone has no bounded base (not pointed)");
  double m = b->delta_B;
  for (auto& v : b->vertices) v /= m;
  b->f = b->f.scaled(m);
  b->delta_B = dist_to_polytope(s, Point::Zero(s.dim), b->vertices);
  b->M /= m;
  return *b;
}

bool contains(const Space& s, const OrderCone& k, const Point& x, double tol) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Cone>) return membership(s, c, x, tol);
        else if constexpr (std::is_same_v<T, EpsNeighborhood>) return eps_membership(s, c, x, tol);
        else return henig_membership(s, c, x, tol);
      },
      k);
}

std::optional<Sector> order_sector(const Space& s, const OrderCone& k) {
  if (auto c = std::get_if<Cone>(&k)) return cone_sector(s, *c);
  if (auto n = std::get_if<EpsNeighborhood>(&k)) return n->sector();
  return std::get<HenigDilation>(k).sector();
}

Point order_interior(const Space& s, const OrderCone& k) {
  if (auto c = std::get_if<Cone>(&k)) return interior_direction(s, *c);
  if (auto n = std::get_if<EpsNeighborhood>(&k)) return interior_direction(s, n->base_cone());
  Point sum = Point::Zero(s.dim);
  for (const auto& v : std::get<HenigDilation>(k).base().vertices) sum += v / norm_value(s.norm, v);
  return sum / norm_value(s.norm, sum);
}

ConeSample order_sample(const Space& s, const OrderCone& k, double mesh, std::uint64_t seed) {
  if (auto c = std::get_if<Cone>(&k)) return cone_sample(s, *c, mesh, seed);
  if (auto sec = order_sector(s, k)) {
    ConeSample out;
    SphereSample arc = arc_sample(s.norm, *sec, mesh);
    out.surface = arc.points;
    out.surface_radius = arc.covering_radius;
    if (!sec->is_plane()) {
      out.boundary.push_back(unit_at(s.norm, sec->start));
      if (sec->width > 0) out.boundary.push_back(unit_at(s.norm, sec->end()));
    }
    return out;
  }
  auto inside = [&](const Point& x) { return contains(s, k, x, 1e-12); };
  ConeSample out = sample_by_predicate(s, inside, order_interior(s, k), mesh, seed);
  if (auto n = std::get_if<EpsNeighborhood>(&k)) {
    out.surface_radius += n->gauge().slack();
    out.boundary_radius += n->gauge().slack();
  }
  return out;
}

std::string describe(const OrderCone& k) {
  if (std::holds_alternative<Cone>(k)) return "cone";
  if (auto n = std::get_if<EpsNeighborhood>(&k)) return "eps_neighborhood(" + std::to_string(n->eps()) + ")";
  return "henig_dilation(" + std::to_string(std::get<HenigDilation>(k).eps()) + ")";
}

InclusionReport inclusion_check(const Space& s, const Cone& c, double eps, double mesh, std::uint64_t seed) {
  if (!(eps > 0 && eps < 1)) throw InputError("inclusion_check needs 0 < eps < 1");
  if (!(mesh > 0 && mesh < 1)) throw InputError("inclusion_check needs 0 < mesh < 1");
  auto poly = c.as<Polyhedral>();
  if (!poly) throw InputError("inclusion_check expects a polyhedral cone");
  InclusionReport rep;
  rep.base = normalize_base(s, c);
  rep.eps = eps;
  rep.eps_prime = eps / (2 * rep.base.M);
  rep.alpha = rep.eps_prime / 2;
  HenigDilation H(s, rep.base, eps);
  EpsNeighborhood E(s, c, eps, std::min(0.05, mesh), seed);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::normal_distribution<double> G;
  auto direction = [&]() {
    Point w(s.dim);
    for (int i = 0; i < s.dim; ++i) w[i] = G(rng);
    return Point(w / norm_value(s.norm, w));
  };
  auto combination = [&](const Points& P) {
    Point x = Point::Zero(s.dim);
    double tot = 0;
    for (const auto& p : P) {
      double e = -std::log(1.0 - U(rng));
      x += e * p;
      tot += e;
    }
    return Point(x / tot);
  };
  const size_t N = std::max<size_t>(100, static_cast<size_t>(std::ceil(4.0 / mesh)));
  const auto& V = rep.base.vertices;

  rep.max_gauge_a = 0.0;
  for (size_t i = 0; i < N; ++i) {
    Point b = i < V.size() ? V[i] : combination(V);
    double r = i % 2 ? eps : eps * U(rng);
    Point x = b + r * direction();
    rep.max_gauge_a = std::max(rep.max_gauge_a, E.gauge()(x));
    if (!eps_membership(s, E, x)) rep.counterexamples_a.push_back(x);
  }
  rep.samples_a = N;

  Points units;
  for (const auto& g : poly->generators) units.push_back(g / norm_value(s.norm, g));
  rep.min_slack_b = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < N; ++i) {
    Point cpt = i < units.size() ? units[i] : combination(units);
    cpt /= norm_value(s.norm, cpt);
    double r = i % 2 ? rep.alpha : rep.alpha * U(rng);
    Point y = cpt + r * direction();
    double slack = eps - H.gauge(y);
    rep.min_slack_b = std::min(rep.min_slack_b, slack);
    if (!(slack > 0)) rep.counterexamples_b.push_back(y);
  }
  rep.samples_b = N;
  return rep;
}

}  // namespace henig
