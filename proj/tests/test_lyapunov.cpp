#include "bcb/lyapunov.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace bcb;

namespace {

Vec v1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

PwaMap<double> example_map(double delta_R, double mu) { return bcnf_map(BcnfParams{2.0, 1.4, -0.8, delta_R, mu}); }

// 1/d ln(2^(l+r-1) a), evaluated in logs
double bound_oracle(double al, double ar, double l, double r, int d) {
  const double la = std::min(l * std::log(al) + (1 - l) * std::log(ar), (1 - r) * std::log(al) + r * std::log(ar));
  return ((l + r - 1) * std::log(2.0) + la) / d;
}

}  // namespace

TEST_SUITE("lyapunov") {
  TEST_CASE("one-dimensional example is exact") {
    const auto m = PwaMap<double>::scalar(0.5, 2.0);
    for (long n : {1L, 2L, 7L, 1000L, 12345L, 100000L}) {
      CHECK(lyapunov_estimate(m, v1(0), v1(1), n, 0).lambda_hat == std::log(2.0));
      CHECK(lyapunov_estimate(m, v1(0), v1(-1), n, 0).lambda_hat == std::log(0.5));
      // the scale of v0 does not matter
      CHECK(lyapunov_estimate(m, v1(0), v1(3.7), n, 5).lambda_hat == std::log(2.0));
    }
  }

  TEST_CASE("uniform expansion") {
    Vec b(2);
    b << 1, 0;
    const Mat a = 2 * Mat::Identity(2, 2);
    const PwaMap<double> m(a, a, b, 0.0);
    oracle::Rng g(41);
    for (int i = 0; i < 20; ++i) {
      const auto r = lyapunov_estimate(m, v2(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)),
                                       v2(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)), 30, 0);
      CHECK(r.lambda_hat == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    }
  }

  TEST_CASE("renormalized sum matches the unnormalized cocycle") {
    oracle::Rng g(42);
    for (int i = 0; i < 300; ++i) {
      const auto m = oracle::pl_map(g, 0.1).with_mu(oracle::uniform(g, -1, 1));
      const Vec x = v2(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
      const Vec v = v2(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
      const long n = 1 + i % 30;
      const auto r = lyapunov_estimate(m, x, v, n, 0);
      if (r.stats.escaped) continue;
      const double direct = std::log((cocycle(m, x, v, n) * v).norm() / v.norm());
      CHECK(r.lambda_hat * n == doctest::Approx(direct).epsilon(1e-9).scale(1.0));
    }
  }

  TEST_CASE("positive exponent in the normal form example") {
    const auto m = example_map(-0.5, 1.0);
    auto r = lyapunov_estimate(m, v2(0, 0), v2(1, 0), 1000000, 100);
    attach_bounds(r, m);
    CHECK_FALSE(r.stats.escaped);
    CHECK(r.lambda_hat > 0);
    CHECK(r.lambda_hat >= r.lambda_bound);
    CHECK(r.stats.n == 1000000);
  }

  TEST_CASE("annihilated tangent gives minus infinity") {
    Vec b(2);
    b << 1, 0;
    Mat l(2, 2);
    l << 0, 1, 0, 0;
    const PwaMap<double> m(l, l, b, 0.0);
    const auto r = lyapunov_estimate(m, v2(1, 1), v2(1, 0), 10, 0);
    CHECK(std::isinf(r.lambda_hat));
    CHECK(r.lambda_hat < 0);
    CHECK(r.stats.n == 10);
  }

  TEST_CASE("escape is flagged") {
    const auto m = PwaMap<double>::scalar(3.0, 3.0, 0.0);
    const auto r = lyapunov_estimate(m, v1(1), v1(1), 1000, 0);
    CHECK(r.stats.escaped);
    CHECK(r.stats.n < 1000);
    CHECK(r.lambda_hat == doctest::Approx(std::log(3.0)));
    CHECK(r.stats.l_n + r.stats.r_n + r.stats.on_sigma == r.stats.n);
  }

  TEST_CASE("preconditions") {
    const auto m = PwaMap<double>::scalar(0.5, 2.0);
    CHECK_THROWS_AS(lyapunov_estimate(m, v1(0), v1(0), 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(lyapunov_estimate(m, v1(0), v1(1), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(lyapunov_estimate(m, v1(0), v1(1), 1, -1), std::invalid_argument);
  }

  TEST_CASE("side counts") {
    const auto fixed = orbit_side_counts(example_map(-1.4, 0.0), v2(0, 0), 500, 0);
    CHECK(fixed.on_sigma == 500);
    CHECK(fixed.l_n == 0);
    CHECK(fixed.r_n == 0);

    const auto line = orbit_side_counts(PwaMap<double>::scalar(0.5, 2.0), v1(1), 30, 0);
    CHECK(line.r_n == 30);
    CHECK(line.r_frac() == 1.0);

    oracle::Rng g(43);
    for (int seed = 0; seed < 10; ++seed) {
      const auto s = orbit_side_counts(example_map(-1.4, 1.0), v2(oracle::uniform(g, -1e-3, 1e-3), 0), 100000, 100);
      CHECK(s.n == 100000);
      CHECK(s.on_sigma == 0);
      CHECK(s.l_n + s.r_n == s.n);
    }
    const auto z = orbit_side_counts(example_map(-1.4, 1.0), v2(0, 0), 100000, 100);
    CHECK(z.l_n + z.r_n == z.n);
  }

  TEST_CASE("side counts agree with the estimator and a direct count") {
    const auto m = example_map(-0.9, -1.0);
    const auto s = orbit_side_counts(m, v2(0, 0), 5000, 50);
    const auto r = lyapunov_estimate(m, v2(0, 0), v2(1, 0), 5000, 50);
    CHECK(s.l_n == r.stats.l_n);
    CHECK(s.r_n == r.stats.r_n);
    // direct count with a tail minimum over the last 10% of prefixes
    Vec x = v2(0, 0);
    for (int i = 0; i < 50; ++i) x = eval_map(m, x);
    long l = 0, rr = 0;
    double lmin = INFINITY, rmin = INFINITY;
    for (long k = 1; k <= 5000; ++k) {
      l += x(0) < 0;
      rr += x(0) > 0;
      if (k >= 4500) {
        lmin = std::min(lmin, double(l) / k);
        rmin = std::min(rmin, double(rr) / k);
      }
      x = eval_map(m, x);
    }
    CHECK(s.l_n == l);
    CHECK(s.r_n == rr);
    CHECK(s.l_tail_min == lmin);
    CHECK(s.r_tail_min == rmin);
    CHECK(s.l_tail_min <= s.l_frac());
  }

  TEST_CASE("determinant minima") {
    auto a = det_mins(example_map(-1.4, 0));
    CHECK(a.a_L == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(a.a_R == doctest::Approx(1.4).epsilon(1e-15));
    a = det_mins(example_map(-0.5, 0));
    CHECK(a.a_L == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(a.a_R == doctest::Approx(0.5).epsilon(1e-15));
    Vec b(2);
    b << 1, 0;
    a = det_mins(PwaMap<double>(Mat::Identity(2, 2), Mat::Identity(2, 2), b, 0.0));
    CHECK(a.a_L == 1.0);
    CHECK(a.a_R == 1.0);
  }

  TEST_CASE("lambda_bound examples") {
    CHECK(lambda_bound({1.4, 0.5, 0, 0, 2}) == doctest::Approx(0.5 * std::log(0.25)).epsilon(1e-14));
    CHECK(lambda_bound({1.4, 0.5, 0, 0, 2}) == doctest::Approx(-0.693147).epsilon(1e-6));
    for (double a : {0.3, 1.0, 2.5})
      for (double l : {0.0, 0.25, 1.0}) CHECK(lambda_bound({a, a, l, 1 - l, 2}) == doctest::Approx(std::log(a) / 2));
    // ell = 0.6, r = 0.4 makes both candidates equal to a_L^0.6 a_R^0.4
    const double expect = bound_oracle(1.4, 0.5, 0.6, 0.4, 2);
    CHECK(lambda_bound({1.4, 0.5, 0.6, 0.4, 2}) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(expect == doctest::Approx(-0.03769).epsilon(1e-4));
    CHECK(lambda_bound({0.0, 0.5, 0.3, 0.3, 2}) == -INFINITY);
    CHECK_THROWS_AS(lambda_bound({1, 1, 0.7, 0.7, 2}), std::invalid_argument);
    CHECK_THROWS_AS(lambda_bound({-1, 1, 0.5, 0.5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(lambda_bound({1, 1, 0.5, 0.5, 0}), std::invalid_argument);
  }

  TEST_CASE("lambda_bound agrees with the log-space oracle") {
    oracle::Rng g(44);
    for (int i = 0; i < 1000; ++i) {
      const double al = oracle::uniform(g, 0.05, 5), ar = oracle::uniform(g, 0.05, 5);
      const double l = oracle::uniform(g, 0, 1), r = oracle::uniform(g, 0, 1 - l);
      const int d = 1 + i % 3;
      CHECK(lambda_bound({al, ar, l, r, d}) == doctest::Approx(bound_oracle(al, ar, l, r, d)).epsilon(1e-12));
      // with no visits to the switching line the bound reduces to a_L^l a_R^r
      const double reduced = std::log(std::pow(al, l) * std::pow(ar, 1 - l)) / d;
      CHECK(lambda_bound({al, ar, l, 1 - l, d}) == doctest::Approx(reduced).epsilon(1e-12));
      CHECK(lambda_bound({al, ar, l, 1 - l, d}) >= simple_bound(al, ar, d) - 1e-12);
    }
  }

  TEST_CASE("simple bound") {
    CHECK(simple_bound(1.4, 0.5, 2) == doctest::Approx(0.5 * std::log(0.5)));
    CHECK(simple_bound(1.4, 0.5, 2) == doctest::Approx(-0.3466).epsilon(1e-4));
    CHECK(simple_bound(2, 2, 1) == std::log(2.0));
    CHECK(simple_bound(0, 2, 1) == -INFINITY);
    for (double dr : {-1.5, -1.0, -0.45}) CHECK(simple_bound(1.4, std::abs(dr), 2) == doctest::Approx(0.5 * std::log(std::min(1.4, std::abs(dr)))));
  }

  TEST_CASE("sphere measure examples") {
    const auto zero = sphere_measure_mc(2 * Mat::Identity(2, 2), 1.0, 20000, 1);
    CHECK(zero.estimate == 0.0);
    CHECK(zero.bound == 0.25);
    const auto one = sphere_measure_mc(Mat::Identity(2, 2), 1.0, 20000, 1);
    CHECK(one.estimate == 1.0);
    CHECK(one.bound == 1.0);
    Mat d(2, 2);
    d << 2, 0, 0, 0.5;
    const auto e = sphere_measure_mc(d, 1.0, 200000, 9);
    // closed form: 4cos^2 + sin^2/4 <= 1 iff |cos| <= 1/sqrt(5)
    const double exact = 1.0 - 2.0 / std::numbers::pi * std::acos(1.0 / std::sqrt(5.0));
    CHECK(exact == doctest::Approx(0.2952).epsilon(1e-3));
    CHECK(std::abs(e.estimate - exact) <= 3 * e.std_error);
    CHECK(e.estimate <= e.bound);
    CHECK_THROWS_AS(sphere_measure_mc(Mat::Zero(2, 2), 1.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sphere_measure_mc(Mat::Identity(2, 2), 1.0, 0, 1), std::invalid_argument);
  }

  TEST_CASE("sphere measure is deterministic per seed") {
    Mat a(2, 2);
    a << 1.3, -0.4, 0.2, 0.9;
    const auto x = sphere_measure_mc(a, 1.0, 50000, 77, 1);
    const auto y = sphere_measure_mc(a, 1.0, 50000, 77, 8);
    const auto z = sphere_measure_mc(a, 1.0, 50000, 78, 4);
    CHECK(x.estimate == y.estimate);
    CHECK(x.std_error == y.std_error);
    CHECK(x.estimate != z.estimate);
  }

  TEST_CASE("spherical measure bound on random matrices") {
    oracle::Rng g(45);
    int cases = 0;
    while (cases < 100) {
      Mat a(2, 2);
      a << oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3);
      const double det = std::abs(a.determinant());
      if (det < 0.1 || det > 10) continue;
      for (double c : {0.5, 1.0, 2.0}) {
        const auto e = sphere_measure_mc(a, c, 100000, 1000 + cases);
        CHECK(e.estimate <= c * c / det + 3 * e.std_error);
      }
      ++cases;
    }
  }

  TEST_CASE("lyapunov sweep") {
    const BcnfParams base{2.0, 1.4, -0.8, 0.0, 0.0};
    const auto one = sweep_lyapunov(base, -0.7, -0.5, 1, 1.0, 1000, 10);
    REQUIRE(one.size() == 1);
    CHECK(one[0].delta_R == -0.7);
    CHECK(one[0].mu == 1.0);
    const auto rows = sweep_lyapunov(base, -1.4, -0.5, 4, 1.0, 20000, 100, 3);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
      auto direct = lyapunov_estimate(example_map(r.delta_R, 1.0), v2(0, 0), v2(1, 0), 20000, 100);
      attach_bounds(direct, example_map(r.delta_R, 1.0));
      CHECK(r.lambda_hat == direct.lambda_hat);
      CHECK(r.lambda_bound == direct.lambda_bound);
      CHECK(r.simple_bound == direct.simple_bound);
      CHECK(r.l_frac + r.r_frac == doctest::Approx(1.0));
      CHECK(r.on_sigma == 0);
      CHECK(r.lambda_hat >= r.lambda_bound - 3 / std::sqrt(20000.0));
    }
    CHECK_THROWS_AS(sweep_lyapunov(base, -0.5, -0.7, 3, 1.0, 10, 0), std::invalid_argument);
  }
}
