#include <doctest.h>

#include <cmath>
#include <limits>

#include "kolab/geometry.hpp"
#include "kolab/rng.hpp"
#include "test_util.hpp"

using namespace kolab;
using testutil::point_dist_inf;
using testutil::rand_point;

TEST_SUITE("geometry") {

TEST_CASE("compose substitutes the group law") {
  PhasePoint r = compose(pp1(1, 0, 0), pp1(0, 0, 1));
  CHECK(r.X[0] == 1.0);
  CHECK(r.Y[0] == -1.0);
  CHECK(r.t == 1.0);

  CounterRng g(11, 0);
  for (int k = 0; k < 100; ++k) {
    PhasePoint p = rand_point(g, 1 + k % 2);
    CHECK(point_dist_inf(compose(p, origin(p.m())), p) == 0.0);
    CHECK(point_dist_inf(compose(origin(p.m()), p), p) == 0.0);
    CHECK(point_dist_inf(compose(p, inverse(p)), origin(p.m())) < 1e-12);
    CHECK(point_dist_inf(compose(inverse(p), p), origin(p.m())) < 1e-12);
  }
  CHECK_THROWS_AS(compose(pp1(0, 0, 0), pp2(0, 0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("compose is associative to 1e-12 over 1e4 triples") {
  for (int m = 1; m <= 2; ++m) {
    CounterRng g(12, uint64_t(m));
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      PhasePoint a = rand_point(g, m), b = rand_point(g, m), c = rand_point(g, m);
      worst = std::max(worst, point_dist_inf(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("inverse") {
  PhasePoint r = inverse(pp1(2, 3, 1));
  CHECK(r.X[0] == -2.0);
  CHECK(r.Y[0] == -5.0);
  CHECK(r.t == -1.0);
  CHECK(point_dist_inf(inverse(origin(2)), origin(2)) == 0.0);

  CounterRng g(13, 0);
  for (int k = 0; k < 1000; ++k) {
    PhasePoint p = rand_point(g, 1 + k % 2);
    CHECK(point_dist_inf(inverse(inverse(p)), p) < 1e-12);
  }
}

TEST_CASE("inverse-compose identity in closed form") {
  // q^-1 o p = (X - X~, Y - Y~ + (t - t~) X~, t - t~); exact on integer data
  PhasePoint p = pp1(3, -7, 2), q = pp1(5, 4, -1);
  PhasePoint r = compose(inverse(q), p);
  CHECK(r.X[0] == 3.0 - 5.0);
  CHECK(r.Y[0] == -7.0 - 4.0 + (2.0 - -1.0) * 5.0);
  CHECK(r.t == 2.0 - -1.0);

  CounterRng g(14, 0);
  for (int m = 1; m <= 2; ++m) {
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      PhasePoint a = rand_point(g, m), b = rand_point(g, m);
      worst = std::max(worst, point_dist_inf(compose(inverse(b), a), group_rel(a, b)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("dilations") {
  PhasePoint r = dilate(2, pp1(1, 1, 1));
  CHECK(r.X[0] == 2.0);
  CHECK(r.Y[0] == 8.0);
  CHECK(r.t == 4.0);
  PhasePoint p = pp2(0.3, -1, 2, 0.25, -4);
  CHECK(point_dist_inf(dilate(1.0, p), p) == 0.0);
  CHECK(point_dist_inf(dilate(2.0, dilate(3.0, p)), dilate(6.0, p)) < 1e-12);
  CHECK_THROWS_AS(dilate(0.0, p), std::invalid_argument);
  CHECK_THROWS_AS(dilate(-1.0, p), std::invalid_argument);
}

TEST_CASE("group norm") {
  CHECK(group_norm(pp1(1, 8, 4)) == 5.0);
  CHECK(group_norm(origin(2)) == 0.0);

  // 1-homogeneity under dilations, relative 1e-12
  CounterRng g(15, 0);
  for (int k = 0; k < 10000; ++k) {
    int m = 1 + k % 2;
    PhasePoint p = rand_point(g, m);
    double r = std::exp(g.uniform(-2, 2));
    double a = group_norm(dilate(r, p));
    double b = r * group_norm(p);
    CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)));
  }
}

TEST_CASE("norm of the inverse is comparable, constant reported") {
  for (int m = 1; m <= 2; ++m) {
    CounterRng g(16, uint64_t(m));
    double c = 0;
    for (int k = 0; k < 10000; ++k) {
      PhasePoint p = rand_point(g, m);
      double n = group_norm(p);
      if (n > 0) c = std::max(c, group_norm(inverse(p)) / n);
    }
    MESSAGE("m=", m, " sup |p^-1| / |p| over 1e4 samples: ", c);
    CHECK(c >= 1.0);
    CHECK(c < 100.0);
  }
}

TEST_CASE("quasi-distance") {
  CounterRng g(17, 0);
  for (int k = 0; k < 10000; ++k) {
    int m = 1 + k % 2;
    PhasePoint p = rand_point(g, m), q = rand_point(g, m);
    CHECK(quasi_distance(p, p) == 0.0);
    CHECK(quasi_distance(p, q) == quasi_distance(q, p));
  }
  CHECK(quasi_distance(origin(1), pp1(1, 0, 0)) == 1.0);

  // homogeneity, relative 1e-12
  CounterRng h(18, 0);
  for (int k = 0; k < 10000; ++k) {
    int m = 1 + k % 2;
    PhasePoint p = rand_point(h, m), q = rand_point(h, m);
    double r = std::exp(h.uniform(-2, 2));
    double a = quasi_distance(dilate(r, p), dilate(r, q));
    double b = r * quasi_distance(p, q);
    CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)));
  }
}

TEST_CASE("quasi-triangle constant is finite, reported") {
  for (int m = 1; m <= 2; ++m) {
    CounterRng g(19, uint64_t(m));
    double c = 0;
    for (int k = 0; k < 100000; ++k) {
      PhasePoint p = rand_point(g, m), q = rand_point(g, m), w = rand_point(g, m);
      double lhs = quasi_distance(p, q);
      double rhs = quasi_distance(p, w) + quasi_distance(w, q);
      if (rhs > 0) c = std::max(c, lhs / rhs);
    }
    MESSAGE("m=", m, " quasi-triangle constant over 1e5 triples: ", c);
    CHECK(c < 100.0);
  }
}

TEST_CASE("balls are open") {
  CHECK(ball_contains(pp1(1, 2, 3), 0.5, pp1(1, 2, 3)));
  // d(origin, (1,0,0)) evaluates to exactly 1
  CHECK(!ball_contains(origin(1), 1.0, pp1(1, 0, 0)));
  CHECK(ball_contains(origin(1), 1.0000001, pp1(1, 0, 0)));
  CHECK_THROWS_AS(ball_contains(origin(1), 0.0, pp1(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("mc ball volume tracks r^q (coarse; acceptance runs the tight version)") {
  auto b1 = mc_ball_volume(1, 1.0, 200000, 2024, 0);
  auto b2 = mc_ball_volume(1, 2.0, 200000, 2024, 1);
  double ratio = b2.volume / b1.volume;
  MESSAGE("m=1 vol(B2)/vol(B1) = ", ratio, " (target 64)");
  CHECK(ratio == doctest::Approx(64.0).epsilon(0.06));
  CHECK(b1.stderr_ < 0.05 * b1.volume);
}

TEST_CASE("reference points") {
  PhasePoint ap = reference_offset(1, {1.0, 2.0, RefSign::plus});
  CHECK(ap.X[0] == 2.0);
  CHECK(ap.Y[0] == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
  CHECK(ap.t == 1.0);
  PhasePoint am = reference_offset(1, {1.0, 2.0, RefSign::minus});
  CHECK(am.X[0] == 2.0);
  CHECK(am.Y[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(am.t == -1.0);

  // m=2 split coordinates: first m-1 slots stay zero
  PhasePoint a2 = reference_offset(2, {0.5, 3.0, RefSign::plus});
  CHECK(a2.X[0] == 0.0);
  CHECK(a2.X[1] == 1.5);
  CHECK(a2.Y[0] == 0.0);

  // dilation homogeneity of the defining tuple, exact for power-of-two rho
  PhasePoint lhs = dilate(2.0, reference_offset(1, {0.5, 2.0, RefSign::plus}));
  PhasePoint rhs = reference_offset(1, {1.0, 2.0, RefSign::plus});
  CHECK(point_dist_inf(lhs, rhs) == 0.0);

  // composition with a base point
  PhasePoint base = pp1(0, 3, -2);
  PhasePoint moved = reference_point(base, {1.0, 2.0, RefSign::plus});
  CHECK(point_dist_inf(moved, compose(base, ap)) == 0.0);

  CHECK_THROWS_AS(reference_offset(1, {0.0, 2.0, RefSign::plus}), std::invalid_argument);
  CHECK_THROWS_AS(reference_offset(1, {1.0, 0.5, RefSign::plus}), std::invalid_argument);
}

TEST_CASE("projections") {
  PhasePoint p = pp1(1, 2, 3);
  CHECK(project_X(p)[0] == 1.0);
  auto xt = project_Xt(p);
  CHECK(xt.X[0] == 1.0);
  CHECK(xt.t == 3.0);
  CounterRng g(20, 0);
  for (int k = 0; k < 100; ++k) {
    PhasePoint q = rand_point(g, 2);
    double r = std::exp(g.uniform(-1, 1));
    VecM a = project_X(dilate(r, q));
    VecM b = r * project_X(q);
    CHECK(std::fabs(a[0] - b[0]) < 1e-12 * std::max(1.0, std::fabs(b[0])));
    CHECK(std::fabs(a[1] - b[1]) < 1e-12 * std::max(1.0, std::fabs(b[1])));
  }
}

TEST_CASE("homogeneous dimension") {
  CHECK(homogeneous_dimension(1) == 6);
  CHECK(homogeneous_dimension(2) == 10);
}

TEST_CASE("constructors reject non-finite values") {
  double nan = std::numeric_limits<double>::quiet_NaN();
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(pp1(nan, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(pp1(0, inf, 0), std::invalid_argument);
  CHECK_THROWS_AS(pp1(0, 0, -inf), std::invalid_argument);
  CHECK_THROWS_AS(PhasePoint(VecM::zero(1), VecM::zero(2), 0.0), std::invalid_argument);
}

}  // TEST_SUITE
