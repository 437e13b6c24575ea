#include "oracles.hpp"

#include "henig/separation.hpp"

#include <doctest.h>

using namespace henig;
using oracle::pt;

namespace {

const Space L2(2, Norm::l2);
const Space Linf(2, Norm::linf);
const double r3 = std::sqrt(3.0);
const Cone steep = Cone::polyhedral({pt(-1, r3), pt(1, r3)});
const Cone wedge = Cone::polyhedral({pt(1, 1), pt(-1, 1)});

OrderCone oc(const Cone& c) { return OrderCone{c}; }

}  // namespace

TEST_CASE("ssp examples") {
  SspReport r = ssp_gap(L2, oc(steep), oc(wedge), 1e-3, 42);
  CHECK(r.verdict == Verdict::holds_certified);
  CHECK(r.exact);
  CHECK(r.gap_sampled == doctest::Approx((r3 - std::sqrt(2.0)) / 2).epsilon(1e-9));
  CHECK(r.p[1] == doctest::Approx(r3 / 2));
  CHECK(r.q[1] == doctest::Approx(std::sqrt(2.0) / 2));
  REQUIRE(r.separating_functional);
  CHECK((*r.separating_functional)(r.p - r.q) == doctest::Approx(r.gap_sampled));

  SspReport li = ssp_gap(Linf, oc(steep), oc(wedge), 1e-3, 42);
  CHECK(li.verdict == Verdict::fails_certified);
  CHECK(li.gap_sampled <= kFailTol);

  Functional f{0, 1};
  SspReport bp = ssp_gap(L2, oc(Cone::bishop_phelps(L2, f, 0.6)), oc(Cone::bishop_phelps(L2, f, 0.3)), 1e-3, 42);
  CHECK(bp.verdict == Verdict::holds_certified);
}

TEST_CASE("ssp gap against an independent hull oracle") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> U(0, 1);
  for (int t = 0; t < 40; ++t) {
    double c = 2 * M_PI * U(rng);
    double hk = 0.3 + 1.0 * U(rng);
    double hc = hk * (0.1 + 0.8 * U(rng));
    double off = (hk - hc) * (2 * U(rng) - 1) * 0.9;
    Cone C = Cone::polyhedral({oracle::unit(c + off - hc), oracle::unit(c + off + hc)});
    Cone K = Cone::polyhedral({oracle::unit(c - hk), oracle::unit(c + hk)});
    SspReport r = ssp_gap(L2, oc(C), oc(K), 1e-3, 1);
    double ref = oracle::ssp_gap_arcs(c + off - hc, c + off + hc, c - hk, c + hk);
    CHECK(r.gap_sampled == doctest::Approx(ref).epsilon(1e-6));
    CHECK(r.gap_lower_bound <= r.gap_sampled);
  }
}

TEST_CASE("bp hull bounds example") {
  BpHullReport b = bp_hull_bounds_check(L2, Functional{0, 1}, 0.5, 0.05, 42);
  CHECK(b.violations == 0);
  CHECK(b.min_f_first >= 0.5 - 1e-12);
  CHECK(b.max_f_second <= 0.5 + 1e-12);
  CHECK(b.checked_first > 0);
  CHECK_THROWS_AS(bp_hull_bounds_check(L2, Functional{0, 2}, 0.5, 0.05, 42), InputError);
}

TEST_CASE("find_witness examples") {
  EpsNeighborhood K(L2, steep, 0.1);
  SspReport r = ssp_gap(L2, oc(steep), OrderCone{K}, 1e-3, 42);
  REQUIRE(r.verdict == Verdict::holds_certified);
  auto w = find_witness(L2, steep, OrderCone{K}, r);
  REQUIRE(w);
  CHECK(w->delta1 < w->alpha);
  CHECK(w->alpha < w->delta2);
  CHECK(w->f.coeffs[1] > 0.99);
  WitnessChecks c = verify_witness(L2, steep, OrderCone{K}, *w, 0.05, 42);
  CHECK(c.valid());
  CHECK(c.aug > 0);
  CHECK(c.neg_cone > 0);
  CHECK(c.outside > 0);

  // a pair whose SSP fails: the witness search refuses it
  SspReport bad = ssp_gap(Linf, oc(steep), oc(wedge), 1e-3, 42);
  CHECK_THROWS_AS(find_witness(Linf, steep, oc(wedge), bad), PreconditionError);
}

TEST_CASE("monotone check example") {
  Functional f{0, 1};
  MonotoneReport m = ssp_monotone_check(L2, oc(steep), oc(Cone::bishop_phelps(L2, f, 0.6)),
                                        oc(Cone::bishop_phelps(L2, f, 0.4)), 1e-3, 42);
  CHECK(m.first.verdict == Verdict::holds_certified);
  CHECK(m.second.verdict == Verdict::holds_certified);
  CHECK(m.consistent);
}

TEST_CASE("property: ssp negation symmetry") {
  std::mt19937_64 rng(42);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    Space s(2, n);
    for (int t = 0; t < 15; ++t) {
      auto k = oracle::random_planar_cone(rng, 0.4, 1.4);
      Cone K = Cone::polyhedral(k.generators);
      // C: a narrower cone inside K's sector
      Point mid = (k.u + k.v).normalized();
      Cone C = Cone::polyhedral({(mid + 0.3 * k.u).eval(), (mid + 0.3 * k.v).eval()});
      SspReport a = ssp_gap(s, oc(C), oc(K), 1e-3, 5);
      SspReport b = ssp_gap(s, oc(Cone::negated(C)), oc(Cone::negated(K)), 1e-3, 5);
      CHECK(a.gap_sampled == doctest::Approx(b.gap_sampled).epsilon(1e-9).scale(1));
      CHECK(a.verdict == b.verdict);
    }
  }
  Space s3(3, Norm::l2);
  for (int t = 0; t < 4; ++t) {
    auto k = oracle::random_simplicial_cone(rng, 3);
    Point mid = Point::Zero(3);
    for (const auto& g : k.generators) mid += g.normalized();
    mid.normalize();
    Points cg;
    for (const auto& g : k.generators) cg.push_back(mid + 0.3 * (g.normalized() - mid));
    Cone C = Cone::polyhedral(cg), K = Cone::polyhedral(k.generators);
    SspReport a = ssp_gap(s3, oc(C), oc(K), 0.1, 5);
    SspReport b = ssp_gap(s3, oc(Cone::negated(C)), oc(Cone::negated(K)), 0.1, 5);
    CHECK(a.gap_sampled == doctest::Approx(b.gap_sampled).epsilon(1e-9).scale(1));
    CHECK(a.verdict == b.verdict);
  }
}

TEST_CASE("property: gap is monotone under nested mesh refinement") {
  Space s3(3, Norm::l2);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 3; ++t) {
    auto k = oracle::random_simplicial_cone(rng, 3);
    Point mid = Point::Zero(3);
    for (const auto& g : k.generators) mid += g.normalized();
    mid.normalize();
    Points cg;
    for (const auto& g : k.generators) cg.push_back(mid + 0.4 * (g.normalized() - mid));
    Cone C = Cone::polyhedral(cg), K = Cone::polyhedral(k.generators);
    double prev = std::numeric_limits<double>::infinity();
    bool held = false;
    for (int m : {8, 16, 32}) {
      double mesh = std::sqrt(2.0) / m * (1 + 1e-9);
      SspReport r = ssp_gap(s3, oc(C), oc(K), mesh, 5);
      CHECK(r.gap_sampled <= prev + 1e-9);
      CHECK(r.gap_sampled >= r.gap_lower_bound);
      if (held) CHECK(r.verdict == Verdict::holds_certified);
      held = held || r.verdict == Verdict::holds_certified;
      prev = r.gap_sampled;
    }
  }
}

TEST_CASE("property: nested bishop-phelps pairs have the ssp") {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> G;
  std::uniform_real_distribution<double> U(0.05, 0.95);
  for (int t = 0; t < 8; ++t) {
    Point f = pt(G(rng), G(rng)).normalized();
    double a = U(rng), b = U(rng);
    if (std::abs(a - b) < 0.05) continue;
    if (a > b) std::swap(a, b);
    SspReport r = ssp_gap(L2, oc(Cone::bishop_phelps(L2, Functional(f), b)),
                          oc(Cone::bishop_phelps(L2, Functional(f), a)), 1e-3, 1);
    CHECK(r.verdict == Verdict::holds_certified);
  }
}

TEST_CASE("property: ssp implies bounded base") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 30; ++t) {
    auto c = oracle::random_planar_cone(rng, 0.05, 1.55);
    Cone C = Cone::polyhedral(c.generators);
    EpsNeighborhood K(L2, C, 0.1);
    SspReport r = ssp_gap(L2, oc(C), OrderCone{K}, 1e-3, 1);
    if (r.verdict == Verdict::holds_certified) CHECK(bounded_base(L2, C).has_value());
  }
  // a half-plane: no bounded base and no SSP against its neighbourhood
  Cone hp = Cone::polyhedral({pt(0, 1), pt(0, -1), pt(1, 0)});
  SspReport r = ssp_gap(L2, oc(hp), OrderCone{EpsNeighborhood(L2, hp, 0.1)}, 1e-3, 1);
  CHECK(r.verdict != Verdict::holds_certified);
  CHECK_FALSE(bounded_base(L2, hp).has_value());
}

TEST_CASE("property: valid witness implies ssp does not fail") {
  std::mt19937_64 rng(46);
  int found = 0;
  for (int t = 0; t < 20; ++t) {
    auto c = oracle::random_planar_cone(rng, 0.1, 1.2);
    Cone C = Cone::polyhedral(c.generators);
    EpsNeighborhood K(L2, C, 0.1);
    SspReport r = ssp_gap(L2, oc(C), OrderCone{K}, 1e-3, 1);
    if (r.verdict != Verdict::holds_certified) continue;
    auto w = find_witness(L2, C, OrderCone{K}, r);
    if (!w) continue;
    WitnessChecks chk = verify_witness(L2, C, OrderCone{K}, *w, 0.05, 1);
    if (!chk.valid()) continue;
    ++found;
    CHECK(r.verdict != Verdict::fails_certified);
    // the witness pair is augmented-dual: f - alpha||.|| > 0 on C \ {0}, raw check on the arc
    double th = std::atan2(c.u[1], c.u[0]);
    double wd = std::acos(std::clamp(c.u.dot(c.v), -1.0, 1.0));
    for (int k = 0; k <= 200; ++k) CHECK(w->f(oracle::unit(th + wd * k / 200)) - w->alpha > 0);
  }
  CHECK(found > 10);
}
