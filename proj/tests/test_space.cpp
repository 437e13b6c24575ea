#include "oracles.hpp"

#include "henig/lp.hpp"
#include "henig/sector.hpp"

#include <doctest.h>

using namespace henig;
using oracle::pt;

TEST_CASE("norm examples") {
  CHECK(norm(Space(2, Norm::l2), pt(3, 4)) == doctest::Approx(5));
  CHECK(norm(Space(2, Norm::linf), pt(1, -2)) == doctest::Approx(2));
  CHECK(norm(Space(3, Norm::l1), make_point({0.5, -0.25, 0.25})) == doctest::Approx(1.0));
  CHECK(norm(Space(2, Norm::l2), pt(0, 0)) == 0.0);
  CHECK_THROWS_AS(norm(Space(3, Norm::l2), pt(1, 1)), InputError);
  CHECK_THROWS_AS(Space(0, Norm::l2), InputError);
}

TEST_CASE("dual norm examples") {
  CHECK(dual_norm(Space(2, Norm::l2), Functional{0, 1}) == doctest::Approx(1));
  CHECK(dual_norm(Space(2, Norm::linf), Functional{1, 1}) == doctest::Approx(2));
  CHECK(dual_norm(Space(2, Norm::l1), Functional{2, -3}) == doctest::Approx(3));
  CHECK(dual(Norm::l1) == Norm::linf);
  CHECK(dual(Norm::linf) == Norm::l1);
  CHECK(dual(Norm::l2) == Norm::l2);
  CHECK_THROWS_AS(parse_norm("l4"), InputError);
}

TEST_CASE("norming point and functional") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> G;
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf})
    for (int t = 0; t < 30; ++t) {
      Space s(3, n);
      Functional f(make_point({G(rng), G(rng), G(rng)}));
      Point x = norming_point(s, f);
      CHECK(norm(s, x) == doctest::Approx(1.0));
      CHECK(f(x) == doctest::Approx(dual_norm(s, f)));
      Functional g = norming_functional(s, f.coeffs);
      CHECK(dual_norm(s, g) == doctest::Approx(1.0));
      CHECK(g(f.coeffs) == doctest::Approx(norm(s, f.coeffs)));
    }
}

TEST_CASE("dist_to_cloud examples") {
  Space l2(2, Norm::l2), li(2, Norm::linf);
  CHECK(dist_to_cloud(l2, pt(0, 0), {pt(1, 0), pt(0, 2)}) == doctest::Approx(1));
  CHECK(dist_to_cloud(l2, pt(1, 0), {pt(1, 0)}) == 0.0);
  CHECK(dist_to_cloud(li, pt(0, 0), {pt(2, 1), pt(1, 3)}) == doctest::Approx(2));
  CHECK_THROWS_AS(dist_to_cloud(l2, pt(0, 0), {}), InputError);
}

TEST_CASE("thickened set membership examples") {
  Space l2(2, Norm::l2), li(2, Norm::linf);
  CHECK(thickened_set_membership(l2, pt(1.5, 0), {pt(1, 0)}, 0.5));
  CHECK_FALSE(thickened_set_membership(l2, pt(2, 0), {pt(1, 0)}, 0.5));
  CHECK(thickened_set_membership(li, pt(1.4, 0.4), {pt(1, 0)}, 0.5));
  CHECK_THROWS_AS(thickened_set_membership(l2, pt(0, 0), {pt(1, 0)}, 0.0), InputError);
  CHECK_THROWS_AS(thickened_set_membership(l2, pt(0, 0), {}, 0.5), InputError);
}

TEST_CASE("property: thickening equals distance sublevel") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-2, 2), E(0.01, 1.5);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    Space s(2, n);
    for (int t = 0; t < 200; ++t) {
      Points A;
      for (int i = 0; i < 4; ++i) A.push_back(pt(U(rng), U(rng)));
      Point x = pt(U(rng), U(rng));
      double e = E(rng);
      double brute = std::numeric_limits<double>::infinity();
      for (const auto& a : A) brute = std::min(brute, oracle::nrm(n, x - a));
      CHECK(thickened_set_membership(s, x, A, e) == (brute <= e));
    }
  }
}

TEST_CASE("dist_to_polytope examples") {
  Space l2(2, Norm::l2);
  CHECK(dist_to_polytope(l2, pt(0, 2), {pt(-1, 0), pt(1, 0)}) == doctest::Approx(2).epsilon(1e-9));
  CHECK(dist_to_polytope(l2, pt(0, 0), {pt(0, 0), pt(1, 1)}) == doctest::Approx(0).epsilon(1e-9));
  CHECK(dist_to_polytope(l2, pt(2, 1), {pt(0, 0), pt(2, 0), pt(0, 2)}) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(dist_to_polytope(l2, pt(2, 1), {pt(0, 0), pt(2, 0), pt(0, 2)}) <=
        oracle::bary_distance(Norm::l2, pt(2, 1), {pt(0, 0), pt(2, 0), pt(0, 2)}, 200) + 1e-12);
}

TEST_CASE("property: dist_to_polytope vs barycentric grid") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1, 1);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf})
    for (int d = 2; d <= 3; ++d) {
      Space s(d, n);
      for (int t = 0; t < 15; ++t) {
        Points V;
        int k = 1 + t % 4;
        for (int i = 0; i < k; ++i) {
          Point v(d);
          for (int j = 0; j < d; ++j) v[j] = U(rng);
          V.push_back(v);
        }
        Point x(d);
        for (int j = 0; j < d; ++j) x[j] = 2 * U(rng);
        double got = dist_to_polytope(s, x, V);
        int steps = k <= 2 ? 4000 : (k == 3 ? 300 : 80);
        double grid = oracle::bary_distance(n, x, V, steps);
        // the grid only overestimates; its error is at most diam/steps-ish
        double diam = 0;
        for (const auto& a : V)
          for (const auto& b : V) diam = std::max(diam, oracle::nrm(n, a - b));
        CHECK(got <= grid + 1e-9);
        CHECK(got >= grid - diam * 2.0 / steps - 1e-9);
        CHECK(got <= dist_to_cloud(s, x, V) + 1e-12);
        if (k == 1) CHECK(got == doctest::Approx(dist_to_cloud(s, x, V)).epsilon(1e-12));
      }
    }
}

TEST_CASE("property: polytope distance reports a nearest pair and separator") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(-1, 1);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    Space s(2, n);
    for (int t = 0; t < 40; ++t) {
      Points P, Q;
      for (int i = 0; i < 4; ++i) P.push_back(pt(U(rng) + 2, U(rng)));
      for (int i = 0; i < 3; ++i) Q.push_back(pt(U(rng) - 1.5, U(rng)));
      HullDistance h = polytope_distance(s, P, Q);
      CHECK(oracle::nrm(n, h.p - h.q) == doctest::Approx(h.distance).epsilon(1e-9));
      REQUIRE(h.separator.size() == 2);
      Functional f(h.separator);
      CHECK(dual_norm(s, f) == doctest::Approx(1.0).epsilon(1e-7));
      double minP = 1e9, maxQ = -1e9;
      for (const auto& p : P) minP = std::min(minP, f(p));
      for (const auto& q : Q) maxQ = std::max(maxQ, f(q));
      CHECK(minP - maxQ == doctest::Approx(h.distance).epsilon(1e-7));
    }
  }
}

TEST_CASE("property: triangle inequality and homogeneity") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-3, 3);
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    Space s(4, n);
    for (int t = 0; t < 200; ++t) {
      Point x(4), y(4);
      for (int j = 0; j < 4; ++j) {
        x[j] = U(rng);
        y[j] = U(rng);
      }
      double l = U(rng);
      CHECK(norm(s, x + y) <= norm(s, x) + norm(s, y) + 1e-12);
      CHECK(norm(s, l * x) == doctest::Approx(std::abs(l) * norm(s, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("sample_unit_sphere examples") {
  auto a = sample_unit_sphere(Space(2, Norm::l2), 0.1, 42);
  CHECK(a.points.size() >= 63);
  for (const auto& p : a.points) CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-12));
  auto b = sample_unit_sphere(Space(2, Norm::linf), 0.5, 42);
  for (const auto& p : b.points) CHECK(p.cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
  auto c = sample_unit_sphere(Space(3, Norm::l2), 0.2, 42);
  for (const auto& p : c.points) CHECK(std::abs(p.norm() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(sample_unit_sphere(Space(2, Norm::l2), 0.0, 42), InputError);
  CHECK_THROWS_AS(sample_unit_sphere(Space(2, Norm::l2), 1.0, 42), InputError);
}

TEST_CASE("property: sphere covering radius holds on random probes") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> G;
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf})
    for (int d = 2; d <= 3; ++d) {
      Space s(d, n);
      for (double mesh : {0.2, 0.1}) {
        auto smp = sample_unit_sphere(s, mesh, 1);
        CHECK(smp.covering_radius <= mesh + 1e-12);
        for (int t = 0; t < 300; ++t) {
          Point x(d);
          for (int j = 0; j < d; ++j) x[j] = G(rng);
          x /= oracle::nrm(n, x);
          CHECK(dist_to_cloud(s, x, smp.points) <= smp.covering_radius + 1e-12);
        }
      }
    }
}

TEST_CASE("property: dual norm is the max over a fine sphere sample") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> G;
  for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
    Space s(2, n);
    auto smp = sample_unit_sphere(s, 0.01, 1);
    for (int t = 0; t < 50; ++t) {
      Functional f{G(rng), G(rng)};
      double m = -1e9;
      for (const auto& x : smp.points) m = std::max(m, f(x));
      double df = dual_norm(s, f);
      CHECK(m <= df + 1e-12);
      CHECK(m >= df - df * smp.covering_radius - 1e-12);
    }
  }
}

TEST_CASE("lp: small programs against enumeration") {
  // min x + 2y s.t. x + y = 1, x,y >= 0 -> 1
  Eigen::MatrixXd A(1, 2);
  A << 1, 1;
  Eigen::VectorXd b(1), c(2);
  b << 1;
  c << 1, 2;
  auto r = lp::solve(A, b, c);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.value == doctest::Approx(1));
  CHECK(r.x[0] == doctest::Approx(1));
  // infeasible: x = -1
  Eigen::MatrixXd A2(1, 1);
  A2 << 1;
  Eigen::VectorXd b2(1), c2(1);
  b2 << -1;
  c2 << 1;
  CHECK(lp::solve(A2, b2, c2).status == lp::Status::infeasible);
  // unbounded: min -x s.t. x - y = 0
  Eigen::MatrixXd A3(1, 2);
  A3 << 1, -1;
  Eigen::VectorXd b3(1), c3(2);
  b3 << 0;
  c3 << -1, 0;
  CHECK(lp::solve(A3, b3, c3).status == lp::Status::unbounded);
}

TEST_CASE("lp: nnls projects onto a cone") {
  Eigen::MatrixXd G(2, 2);
  G << 1, 0, 0, 1;
  Eigen::VectorXd x(2);
  x << 2, -1;
  Eigen::VectorXd w = lp::nnls(G, x);
  CHECK(w[0] == doctest::Approx(2));
  CHECK(w[1] == doctest::Approx(0));
}

TEST_CASE("sector helpers") {
  auto s = sector_of_directions({pt(1, 1), pt(-1, 1)});
  REQUIRE(s);
  CHECK(s->width == doctest::Approx(M_PI / 2));
  CHECK(s->contains(pt(0, 1), 0));
  CHECK_FALSE(s->contains(pt(0, -1), 1e-9));
  CHECK_FALSE(sector_of_directions({pt(1, 0), pt(-1, 0)}));  // a line
  auto hp = sector_of_directions({pt(1, 0), pt(-1, 0), pt(0, 1)});
  REQUIRE(hp);
  CHECK(hp->width == doctest::Approx(M_PI));
}
