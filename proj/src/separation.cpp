#include "henig/separation.hpp"
#include "henig/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace henig {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_certified: return "holds_certified";
    case Verdict::fails_certified: return "fails_certified";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Points boundary_with_origin(const Space& s, const Sector& k) {
  Points Q{Point::Zero(s.dim)};
  if (!k.is_plane()) {
    Q.push_back(unit_at(s.norm, k.start));
    if (k.width > 0) Q.push_back(unit_at(s.norm, k.end()));
  }
  return Q;
}

}  // namespace

SspReport ssp_gap(const Space& s, const OrderCone& C, const OrderCone& K, double mesh, std::uint64_t seed) {
  SspReport rep;
  HullDistance hd;
  auto sc = order_sector(s, C), sk = order_sector(s, K);
  if (sc && sk) {
    rep.exact = true;
    Points Q = boundary_with_origin(s, *sk);
    if (s.norm == Norm::l2) {
      Sector arc = *sc;
      SupportFn P = [arc](const Point& d) { return arc_support(Norm::l2, arc, d); };
      hd = convex_distance_l2(2, P, polytope_support(Q), unit_at(Norm::l2, arc.center()), Q.front());
    } else {
      hd = polytope_distance_lp(s.norm, arc_vertices(s.norm, *sc), Q);
    }
  } else {
    ConeSample cs = order_sample(s, C, mesh, seed);
    ConeSample ks = order_sample(s, K, mesh, seed);
    if (cs.surface.empty()) throw InputError("ssp_gap: degenerate cone (empty intersection with the sphere)");
    Points Q{Point::Zero(s.dim)};
    Q.insert(Q.end(), ks.boundary.begin(), ks.boundary.end());
    hd = polytope_distance(s, cs.surface, Q);
    rep.covering_radius = std::max(cs.surface_radius, ks.boundary_radius);
  }
  rep.gap_sampled = hd.distance;
  rep.gap_lower_bound = rep.gap_sampled - 2 * rep.covering_radius;
  rep.p = hd.p;
  rep.q = hd.q;
  if (rep.gap_sampled <= kFailTol)
    rep.verdict = Verdict::fails_certified;
  else if (rep.gap_lower_bound > 0)
    rep.verdict = Verdict::holds_certified;
  else
    rep.verdict = Verdict::inconclusive;
  if (rep.gap_sampled > 0 && hd.separator.size() == s.dim) {
    Functional f(hd.separator);
    rep.separating_functional = f.scaled(1.0 / dual_norm(s, f));
  }
  return rep;
}

BpHullReport bp_hull_bounds_check(const Space& s, const Functional& f, double alpha, double mesh,
                                  std::uint64_t seed) {
  if (!(alpha > 0 && alpha < 1)) throw InputError("bp_hull_bounds_check needs 0 < alpha < 1");
  if (std::abs(dual_norm(s, f) - 1.0) > 1e-9) throw InputError("bp_hull_bounds_check needs dual_norm(f) = 1");
  Cone c = Cone::bishop_phelps(s, f, alpha);
  ConeSample cs = cone_sample(s, c, mesh, seed);
  Points second{Point::Zero(s.dim)};
  second.insert(second.end(), cs.boundary.begin(), cs.boundary.end());

  BpHullReport rep;
  rep.min_f_first = std::numeric_limits<double>::infinity();
  rep.max_f_second = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto visit = [&](const Points& pts, bool first) {
    auto check = [&](const Point& x) {
      double v = f(x);
      if (first) {
        rep.min_f_first = std::min(rep.min_f_first, v);
        ++rep.checked_first;
        if (v < alpha - 1e-9) ++rep.violations;
      } else {
        rep.max_f_second = std::max(rep.max_f_second, v);
        ++rep.checked_second;
        if (v > alpha + 1e-9) ++rep.violations;
      }
    };
    for (const auto& x : pts) check(x);
    // random points of the hull, not just of the sample
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (size_t t = 0; t < pts.size(); ++t) {
      int k = 2 + static_cast<int>(t % 4);
      Point x = Point::Zero(s.dim);
      double tot = 0.0;
      for (int j = 0; j < k; ++j) {
        double w = -std::log(1.0 - U(rng));
        x += w * pts[pick(rng)];
        tot += w;
      }
      check(x / tot);
    }
  };
  visit(cs.surface, true);
  visit(second, false);
  return rep;
}

WitnessBounds witness_bounds(const Space& s, const Cone& C, const OrderCone& K, const Functional& f, double mesh,
                             std::uint64_t seed) {
  WitnessBounds b;
  ClassifyOptions opt;
  opt.mesh = std::min(mesh, 1e-3);
  opt.seed = seed;
  b.inf_on_cone = inf_on_cone_sphere(s, C, f, opt).first;

  // S_X \ int(-K)
  if (auto sk = order_sector(s, K)) {
    if (sk->is_plane()) {
      b.sup_off_interior = -std::numeric_limits<double>::infinity();
    } else {
      Sector neg = sk->negated();
      Sector off = Sector::from_angles(neg.end(), neg.start + kTwoPi);
      b.sup_off_interior = -arc_min(s.norm, off, f);
    }
    return b;
  }
  SphereSample sph = sample_unit_sphere(s, mesh, seed);
  ConeSample ks = order_sample(s, K, mesh, seed);
  double sup = -std::numeric_limits<double>::infinity();
  for (const auto& x : sph.points)
    if (!contains(s, K, -x, 0.0)) sup = std::max(sup, -f(x));
  for (const auto& x : ks.boundary) sup = std::max(sup, f(x));  // -x ranges over bd(-K)
  double r = std::max(sph.covering_radius, ks.boundary_radius);
  b.sup_off_interior = sup + dual_norm(s, f) * r;
  return b;
}

WitnessChecks witness_margins(const WitnessBounds& b, double alpha) {
  WitnessChecks c;
  c.aug = alpha > 0 ? b.inf_on_cone - alpha : -1.0;
  c.neg_cone = b.inf_on_cone - alpha;
  c.outside = std::isinf(b.sup_off_interior) ? 1.0 : alpha - b.sup_off_interior;
  return c;
}

WitnessChecks verify_witness(const Space& s, const Cone& C, const OrderCone& K, const Witness& w, double mesh,
                             std::uint64_t seed) {
  check_dim(s, w.f);
  WitnessChecks c = witness_margins(witness_bounds(s, C, K, w.f, mesh, seed), w.alpha);
  // condition (1) goes through the classifier so its certified margin is the one reported
  ClassifyOptions opt;
  opt.mesh = std::min(mesh, 1e-3);
  opt.seed = seed;
  if (w.alpha > 0) {
    AugPair p = classify_aug_pair(s, C, w.f, w.alpha, opt);
    c.aug = p.cls == AugClass::a_sharp_plus ? p.margin : std::min(p.margin, 0.0);
  }
  return c;
}

std::optional<Witness> find_witness(const Space& s, const Cone& C, const OrderCone& K, const SspReport& report,
                                    const WitnessOptions& opt) {
  if (report.verdict != Verdict::holds_certified || !report.separating_functional)
    throw PreconditionError("find_witness needs a holds_certified SSP report");
  if (opt.alpha_grid_size < 3) throw InputError("find_witness needs alpha_grid_size >= 3");
  Functional f = *report.separating_functional;
  f = f.scaled(1.0 / dual_norm(s, f));
  WitnessBounds b = witness_bounds(s, C, K, f, opt.mesh, opt.seed);
  double lo = std::max(0.0, b.sup_off_interior), hi = b.inf_on_cone;
  if (!(hi > lo)) return std::nullopt;
  const int N = opt.alpha_grid_size;
  int first = -1, last = -1;
  for (int i = 1; i <= N; ++i) {
    double a = lo + (hi - lo) * i / (N + 1);
    bool pass = witness_margins(b, a).valid();
    if (pass && first < 0) first = i;
    if (pass) last = i;
    if (!pass && first >= 0) break;  // keep the first contiguous run
  }
  if (first < 0 || last - first < 2) return std::nullopt;
  Witness w;
  w.f = f;
  w.delta1 = lo + (hi - lo) * first / (N + 1);
  w.delta2 = lo + (hi - lo) * last / (N + 1);
  w.alpha = lo + (hi - lo) * ((first + last) / 2) / (N + 1);
  w.checks = verify_witness(s, C, K, w, opt.mesh, opt.seed);
  if (!w.checks.valid()) return std::nullopt;
  return w;
}

MonotoneReport ssp_monotone_check(const Space& s, const OrderCone& C, const OrderCone& K1, const OrderCone& K2,
                                  double mesh, std::uint64_t seed) {
  ConeSample k1 = order_sample(s, K1, mesh, seed);
  for (const auto& x : k1.surface)
    if (!contains(s, K2, x, 1e-9)) throw PreconditionError("ssp_monotone_check: sampled K1 is not inside K2");
  MonotoneReport r;
  r.first = ssp_gap(s, C, K1, mesh, seed);
  r.second = ssp_gap(s, C, K2, mesh, seed);
  r.consistent = r.first.verdict != Verdict::holds_certified || r.second.verdict == Verdict::holds_certified;
  return r;
}

}  // namespace henig
