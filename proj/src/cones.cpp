#include "henig/cones.hpp"
#include "henig/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace henig {

Cone Cone::polyhedral(Points generators) {
  if (generators.empty()) throw InputError("polyhedral cone needs at least one generator");
  auto d = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != d) throw InputError("polyhedral generators differ in dimension");
    if (g.norm() == 0.0) throw InputError("polyhedral generators must be nonzero");
  }
  return Cone(Polyhedral{std::move(generators)}, static_cast<int>(d));
}

Cone Cone::bishop_phelps(const Space& s, const Functional& f, double alpha) {
  double d = dual_norm(s, f);
  if (!(alpha > 0) || !(alpha < d))
    throw InputError("Bishop-Phelps cone needs 0 < alpha < dual_norm(f)");
  return Cone(BishopPhelps{f.scaled(1.0 / d), alpha / d}, s.dim);
}

Cone Cone::sublevel(const Space& s, const Functional& f, double alpha) {
  check_dim(s, f);
  if (!(alpha >= 0)) throw InputError("sublevel cone needs alpha >= 0");
  return Cone(Sublevel{f, alpha}, s.dim);
}

Cone Cone::negated(const Cone& inner) {
  return Cone(Negated{std::make_shared<const Cone>(inner)}, inner.dim());
}

namespace {

Eigen::MatrixXd unit_generators(const Points& gens) {
  Eigen::MatrixXd G(gens.front().size(), static_cast<Eigen::Index>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i) G.col(static_cast<Eigen::Index>(i)) = gens[i] / gens[i].norm();
  return G;
}

bool polyhedral_contains(const Space& s, const Polyhedral& p, const Point& x, double tol) {
  if (x.norm() == 0.0) return true;
  if (s.dim == 2) {
    if (auto sec = sector_of_directions(p.generators)) return sec->contains(x, tol);
  }
  Eigen::MatrixXd G = unit_generators(p.generators);
  Point u = x / x.norm();
  Eigen::VectorXd w = lp::nnls(G, u);
  return (G * w - u).norm() <= tol;
}

// Cones of the form {g(x) - a ||x|| >= 0}.
std::optional<std::pair<Functional, double>> bp_form(const Cone& c) {
  if (auto bp = c.as<BishopPhelps>()) return std::make_pair(bp->f, bp->alpha);
  if (auto sl = c.as<Sublevel>()) return std::make_pair(-sl->f, sl->alpha);
  return std::nullopt;
}

}  // namespace

bool membership(const Space& s, const Cone& c, const Point& x, double tol) {
  check_dim(s, x);
  if (auto p = c.as<Polyhedral>()) return polyhedral_contains(s, *p, x, tol);
  if (auto n = c.as<Negated>()) return membership(s, *n->inner, -x, tol);
  double nx = norm_value(s.norm, x);
  if (nx == 0.0) return true;
  auto [g, a] = *bp_form(c);
  return g(x) / nx - a >= -tol;
}

bool interior_membership(const Space& s, const Cone& c, const Point& x) {
  check_dim(s, x);
  auto sl = c.as<Sublevel>();
  if (!sl) throw InputError("interior_membership expects a sublevel cone");
  if (!(sl->alpha > 0 && sl->alpha < dual_norm(s, sl->f)))
    throw PreconditionError("interior_membership needs 0 < alpha < dual_norm(f)");
  return sl->f(x) + sl->alpha * norm_value(s.norm, x) < 0;
}

std::optional<Sector> cone_sector(const Space& s, const Cone& c) {
  if (s.dim != 2) return std::nullopt;
  if (auto p = c.as<Polyhedral>()) return sector_of_directions(p->generators);
  if (auto n = c.as<Negated>()) {
    auto inner = cone_sector(s, *n->inner);
    if (!inner) return std::nullopt;
    return inner->negated();
  }
  auto [g, a] = *bp_form(c);
  double d = dual_norm(s, g);
  if (d == 0.0) {
    if (a == 0.0) return Sector::plane();
    return std::nullopt;  // {0}
  }
  if (a > d * (1 + 1e-15)) return std::nullopt;
  if (s.norm == Norm::l2) {
    double ctr = angle_of(g.coeffs);
    double half = std::acos(std::min(1.0, a / d));
    return Sector::from_angles(ctr - half, ctr + half);
  }
  double ctr = angle_of(norming_point(s, g));
  double slack = a >= d * (1 - 1e-15) ? 1e-12 * d : 0.0;
  return sector_from_predicate(s.norm, ctr, [&](const Point& u) { return g(u) - a >= -slack; });
}

Point interior_direction(const Space& s, const Cone& c) {
  if (auto p = c.as<Polyhedral>()) {
    Point sum = Point::Zero(c.dim());
    for (const auto& g : p->generators) sum += g / g.norm();
    if (sum.norm() < 1e-12) sum = p->generators.front();
    return sum / norm_value(s.norm, sum);
  }
  if (auto n = c.as<Negated>()) return -interior_direction(s, *n->inner);
  auto [g, a] = *bp_form(c);
  return norming_point(s, g);
}

ConeSample sample_by_predicate(const Space& s, const ConePredicate& inside, const Point& interior, double mesh,
                               std::uint64_t seed) {
  SphereSample sph = sample_unit_sphere(s, mesh, seed);
  ConeSample out;
  out.surface.push_back(interior);
  for (const auto& p : sph.points) {
    if (inside(p)) {
      out.surface.push_back(p);
      continue;
    }
    // segment interior -> p; skip if it passes through the origin
    double lo = 0.0, hi = 1.0;
    Point a = interior / interior.norm(), b = p / p.norm();
    if ((a + b).norm() < 1e-6) continue;
    for (int it = 0; it < 50; ++it) {
      double mid = 0.5 * (lo + hi);
      (inside((1 - mid) * a + mid * b) ? lo : hi) = mid;
    }
    Point q = (1 - lo) * a + lo * b;
    q /= norm_value(s.norm, q);
    out.boundary.push_back(q);
    out.surface.push_back(q);
  }
  out.boundary_radius = sph.covering_radius;
  out.surface_radius = 2 * sph.covering_radius;
  return out;
}

ConeSample cone_sample(const Space& s, const Cone& c, double mesh, std::uint64_t seed) {
  if (auto n = c.as<Negated>()) {
    ConeSample in = cone_sample(s, *n->inner, mesh, seed);
    for (auto& p : in.surface) p = -p;
    for (auto& p : in.boundary) p = -p;
    return in;
  }
  if (auto sec = cone_sector(s, c)) {
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
  auto form = bp_form(c);
  if (form && s.norm == Norm::l2 && s.dim >= 2) {
    auto [g, a] = *form;
    double d = g.coeffs.norm();
    if (d == 0.0 || a > d) throw InputError("degenerate cone: empty intersection with the sphere");
    Point u = g.coeffs / d;
    double ca = std::min(1.0, a / d), sa = std::sqrt(std::max(0.0, 1 - ca * ca));
    // orthonormal basis of u-perp
    Eigen::MatrixXd um = u;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(um);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(s.dim, s.dim);
    Eigen::MatrixXd W = Q.rightCols(s.dim - 1);
    ConeSample out;
    out.surface.push_back(u);
    if (sa > 0) {
      double mw = std::min(0.5, mesh / sa);
      SphereSample ws = sample_unit_sphere(Space(s.dim - 1, Norm::l2), mw, seed);
      for (const auto& w : ws.points) out.boundary.push_back(ca * u + sa * (W * w));
      out.boundary_radius = sa * ws.covering_radius;
    } else {
      out.boundary.push_back(u);
    }
    SphereSample sph = sample_unit_sphere(s, mesh, seed);
    for (const auto& p : sph.points)
      if (g(p) - a >= 0) out.surface.push_back(p);
    out.surface.insert(out.surface.end(), out.boundary.begin(), out.boundary.end());
    out.surface_radius = sph.covering_radius + out.boundary_radius;
    return out;
  }
  auto inside = [&](const Point& x) { return membership(s, c, x, 1e-12); };
  ConeSample out = sample_by_predicate(s, inside, interior_direction(s, c), mesh, seed);
  if (auto p = c.as<Polyhedral>()) {
    for (const auto& g : p->generators) {
      out.surface.push_back(g / norm_value(s.norm, g));
      out.boundary.push_back(g / norm_value(s.norm, g));
    }
  }
  return out;
}

BasePolytope polyhedral_base(const Space& s, const Cone& c, const Functional& f) {
  auto p = c.as<Polyhedral>();
  if (!p) throw InputError("polyhedral_base expects a polyhedral cone");
  check_dim(s, f);
  BasePolytope b;
  b.f = f;
  for (const auto& g : p->generators) {
    double v = f(g);
    if (!(v > 1e-14 * g.norm() * f.coeffs.norm()))
      throw PreconditionError("functional is not strictly positive on the generators");
    b.vertices.push_back(g / v);
  }
  b.delta_B = dist_to_polytope(s, Point::Zero(s.dim), b.vertices);
  for (const auto& v : b.vertices) b.M = std::max(b.M, norm_value(s.norm, v));
  return b;
}

std::optional<BasePolytope> bounded_base(const Space& s, const Cone& c) {
  auto p = c.as<Polyhedral>();
  if (!p) throw InputError("bounded_base expects a polyhedral cone");
  Eigen::MatrixXd G = unit_generators(p->generators);
  const Eigen::Index d = G.rows(), k = G.cols();
  Eigen::VectorXd f = G.rowwise().sum();
  bool ok = f.norm() > 1e-12;
  for (Eigen::Index i = 0; ok && i < k; ++i) ok = G.col(i).dot(f) > 1e-9 * f.norm();
  if (!ok) {
    // max t s.t. <f, g_i> >= t, -1 <= f <= 1
    const Eigen::Index nv = 2 * d + 1 + k + 2 * d;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k + 2 * d, nv);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(k + 2 * d), cost = Eigen::VectorXd::Zero(nv);
    for (Eigen::Index i = 0; i < k; ++i) {
      A.block(i, 0, 1, d) = G.col(i).transpose();
      A.block(i, d, 1, d) = -G.col(i).transpose();
      A(i, 2 * d) = -1.0;
      A(i, 2 * d + 1 + i) = -1.0;
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      A(k + j, j) = 1.0;
      A(k + j, 2 * d + 1 + k + j) = 1.0;
      A(k + d + j, d + j) = 1.0;
      A(k + d + j, 2 * d + 1 + k + d + j) = 1.0;
      b[k + j] = b[k + d + j] = 1.0;
    }
    cost[2 * d] = -1.0;
    lp::Result r = lp::solve(A, b, cost);
    if (r.status != lp::Status::optimal || r.x[2 * d] <= 1e-9) return std::nullopt;
    f = r.x.head(d) - r.x.segment(d, d);
  }
  Functional fn(f);
  fn = fn.scaled(1.0 / dual_norm(s, fn));
  return polyhedral_base(s, c, fn);
}

SublevelBase sublevel_base(const Space& s, const Functional& f, double alpha, double mesh, std::uint64_t seed) {
  double d = dual_norm(s, f);
  if (!(alpha > 0)) throw InputError("sublevel_base needs alpha > 0");
  if (alpha > d * (1 + 1e-15)) throw PreconditionError("sublevel_base needs alpha <= dual_norm(f)");
  SublevelBase out;
  out.g = -f;
  out.bound = 1.0 / alpha;
  auto push = [&](const Point& x) {
    double v = out.g(x);
    if (v > 1e-12 * norm_value(s.norm, x)) out.sample.push_back(x / v);
  };
  if (s.norm == Norm::l2 && alpha >= d * (1 - 1e-15)) {
    out.sample.push_back(out.g.coeffs / (d * d));
    return out;
  }
  Cone c = Cone::sublevel(s, f, alpha);
  if (auto sec = cone_sector(s, c)) {
    for (const auto& x : arc_sample(s.norm, *sec, mesh).points) push(x);
    push(unit_at(s.norm, sec->start));
    push(unit_at(s.norm, sec->end()));
    return out;
  }
  for (const auto& x : cone_sample(s, c, mesh, seed).surface) push(x);
  return out;
}

std::string to_string(AugClass c) {
  switch (c) {
    case AugClass::a_star: return "a_star";
    case AugClass::a_sharp: return "a_sharp";
    case AugClass::a_star_plus: return "a_star_plus";
    case AugClass::a_sharp_plus: return "a_sharp_plus";
    case AugClass::none: return "none";
  }
  return "?";
}

std::pair<double, double> inf_on_cone_sphere(const Space& s, const Cone& c, const Functional& f,
                                             const ClassifyOptions& opt, bool* exact) {
  check_dim(s, f);
  double df = dual_norm(s, f);
  if (exact) *exact = true;
  if (!opt.force_sampled) {
    if (auto p = c.as<Polyhedral>()) {
      // f/||.|| is quasi-concave on C where f >= 0, so the infimum sits on a generator
      double m = std::numeric_limits<double>::infinity();
      for (const auto& g : p->generators) m = std::min(m, f(g) / norm_value(s.norm, g));
      if (m >= 0) return {m, m};
      if (exact) *exact = false;
      return {-df, m};
    }
    if (auto sec = cone_sector(s, c)) {
      double m = arc_min(s.norm, *sec, f);
      return {m, m};
    }
  }
  if (exact) *exact = false;
  ConeSample cs = cone_sample(s, c, opt.mesh, opt.seed);
  if (cs.surface.empty()) throw InputError("degenerate cone: empty intersection with the sphere");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& x : cs.surface) m = std::min(m, f(x));
  return {m - df * cs.surface_radius, m};
}

AugPair classify_aug_pair(const Space& s, const Cone& c, const Functional& f, double alpha,
                          const ClassifyOptions& opt) {
  if (!(alpha >= 0)) throw InputError("classify_aug_pair needs alpha >= 0");
  AugPair out;
  out.f = f;
  out.alpha = alpha;
  auto [lo, sampled] = inf_on_cone_sphere(s, c, f, opt, &out.exact);
  out.margin = lo - alpha;
  out.margin_sampled = sampled - alpha;
  constexpr double eq = 1e-12;
  if (alpha == 0.0) {
    out.cls = sampled > eq ? AugClass::a_sharp : AugClass::none;
  } else if (out.margin_sampled > eq) {
    out.cls = AugClass::a_sharp_plus;
  } else if (out.margin_sampled >= -eq) {
    out.cls = AugClass::a_star_plus;
  } else {
    out.cls = AugClass::none;
  }
  return out;
}

std::optional<AugPair> augmented_witness_search(const Space& s, const Cone& c) {
  auto base = bounded_base(s, c);
  if (!base) return std::nullopt;
  auto [delta, sampled] = inf_on_cone_sphere(s, c, base->f, {});
  if (!(delta > 0)) return std::nullopt;
  AugPair p = classify_aug_pair(s, c, base->f, delta / 2);
  if (p.cls != AugClass::a_sharp_plus) return std::nullopt;
  return p;
}

}  // namespace henig
