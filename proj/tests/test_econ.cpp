#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "core/rng.hpp"
#include "econ/adf.hpp"
#include "econ/engle_granger.hpp"
#include "econ/generators.hpp"
#include "econ/latency.hpp"
#include "econ/regression.hpp"

using namespace econ;

namespace {

bool close_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Random walk started at its first innovation (cumulative sum of gaussians).
std::vector<double> cumsum_walk(uint64_t seed, std::size_t n) {
  core::Rng rng(seed);
  std::vector<double> s(n);
  double level = 0;
  for (auto& v : s) {
    level += rng.next_gaussian();
    v = level;
  }
  return s;
}

}  // namespace

TEST_SUITE("ols") {
  TEST_CASE("exact linear data is fitted exactly") {
    std::vector<double> x = {1, 2, 3, 4, 5};
    std::vector<double> y;
    for (const double v : x) y.push_back(2.0 * v);
    const auto r = ols(y, x);
    CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(close_abs(r.intercept, 0.0, 1e-13));
    for (const double e : r.residuals) CHECK(close_abs(e, 0.0, 1e-13));
  }

  TEST_CASE("constant response gives zero slope and the constant intercept") {
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {7, 7, 7, 7};
    const auto r = ols(y, x);
    CHECK(r.slope == 0.0);
    CHECK(r.intercept == doctest::Approx(7.0));
  }

  TEST_CASE("seeded noisy fit recovers the generating coefficients") {
    core::Rng rng(55);
    std::vector<double> x(400), y(400);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng.next_gaussian() * 5.0;
      y[i] = 3.0 * x[i] + 1.0 + rng.next_gaussian() * 0.5;
    }
    const auto r = ols(y, x);
    // s.e.(slope) ~ 0.5/(5*sqrt(400)) = 0.005; allow 5 sigma.
    CHECK(close_abs(r.slope, 3.0, 0.025));
    CHECK(close_abs(r.intercept, 1.0, 0.125));
  }

  TEST_CASE("residuals are orthogonal to the regressor and the constant") {
    for (const uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
      core::Rng rng(seed);
      std::vector<double> x(200), y(200);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.next_gaussian() * 10.0 + 3.0;
        y[i] = -2.0 * x[i] + 5.0 + rng.next_gaussian() * 2.0;
      }
      const auto r = ols(y, x);
      double sum_e = 0, sum_ex = 0, scale_e = 0, scale_ex = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sum_e += r.residuals[i];
        sum_ex += r.residuals[i] * x[i];
        scale_e += std::fabs(y[i]);
        scale_ex += std::fabs(y[i] * x[i]);
      }
      CHECK(std::fabs(sum_e) <= 1e-6 * scale_e);
      CHECK(std::fabs(sum_ex) <= 1e-6 * scale_ex);
    }
  }

  TEST_CASE("contract errors") {
    const std::vector<double> x = {1, 2, 3};
    CHECK_THROWS_AS(ols(std::vector<double>{1, 2}, x), LengthMismatch);
    CHECK_THROWS_AS(ols(std::vector<double>{1, 2}, std::vector<double>{1, 2}), SeriesTooShort);
    CHECK_THROWS_AS(ols(x, std::vector<double>{4, 4, 4}), DegenerateRegressor);
    CHECK_THROWS_AS(ols(x, std::vector<double>{0, 0, 0}), DegenerateRegressor);
  }
}

TEST_SUITE("adf") {
  TEST_CASE("fixed 20-point series matches the frozen reference") {
    const std::vector<double> s = {1.0, 2.0, 1.5, 3.0, 2.5, 4.0, 3.5, 5.0,  4.5, 6.0,
                                   5.5, 7.0, 6.5, 8.0, 7.5, 9.0, 8.5, 10.0, 9.5, 11.0};
    const auto r = adf_test(s, 2);
    CHECK(close_abs(r.t_stat, 1.5702717677706455, 1e-6));
    CHECK(r.lags_used == 1);
  }

  TEST_CASE("random walk is not rejected (frozen reference)") {
    const auto walk = cumsum_walk(7, 500);
    const auto r = adf_test(walk);
    CHECK(close_abs(r.t_stat, -0.7363620241247084, 1e-6));
    CHECK(r.lags_used == 17);
    CHECK_FALSE(r.decision_at.at(5));
    CHECK_FALSE(r.decision_at.at(1));
    CHECK_FALSE(r.decision_at.at(10));
  }

  TEST_CASE("strongly stationary series is rejected (frozen reference)") {
    Ar1Config cfg;
    cfg.coefficient = 0.2;
    cfg.innovation_sigma = 1.0;
    cfg.length = 500;
    cfg.seed = 9;
    const auto series = gen_ar1(cfg);
    const auto r = adf_test(series);
    CHECK(close_abs(r.t_stat, -17.196996291760907, 1e-6));
    CHECK(r.lags_used == 0);
    CHECK(r.decision_at.at(1));
    CHECK(r.decision_at.at(5));
    CHECK(r.decision_at.at(10));
  }

  TEST_CASE("decisions are pure threshold comparisons on the t-statistic") {
    const auto walk = cumsum_walk(13, 200);
    const auto r = adf_test(walk);
    const auto cv = adf_critical_values(Deterministics::Constant);
    CHECK(r.decision_at.at(1) == (r.t_stat < cv.pct1));
    CHECK(r.decision_at.at(5) == (r.t_stat < cv.pct5));
    CHECK(r.decision_at.at(10) == (r.t_stat < cv.pct10));
    CHECK(cv.pct1 < cv.pct5);
    CHECK(cv.pct5 < cv.pct10);
  }

  TEST_CASE("too-short series and determinism") {
    CHECK_THROWS_AS(adf_test(std::vector<double>{1, 2, 3, 4, 5}), SeriesTooShort);
    CHECK_THROWS_AS(adf_test(std::vector<double>(19, 1.0)), SeriesTooShort);
    const auto walk = cumsum_walk(99, 120);
    const auto a = adf_test(walk);
    const auto b = adf_test(walk);
    CHECK(a.t_stat == b.t_stat);
    CHECK(a.lags_used == b.lags_used);
  }

  TEST_CASE("size and power over a 100-seed ensemble") {
    int walk_rejects = 0;
    int ar_rejects = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
      const auto walk = cumsum_walk(seed, 500);
      if (adf_test(walk).decision_at.at(5)) ++walk_rejects;
      Ar1Config cfg;
      cfg.coefficient = 0.2;
      cfg.length = 500;
      cfg.seed = seed + 10000;
      if (adf_test(gen_ar1(cfg)).decision_at.at(5)) ++ar_rejects;
    }
    CHECK(walk_rejects <= 10);  // size: at most 10% false rejections
    CHECK(ar_rejects >= 90);    // power: at least 90% true rejections
  }
}

TEST_SUITE("engle_granger") {
  TEST_CASE("constructed cointegrated pair matches the frozen reference") {
    const auto [y, x] = gen_cointegrated_pair(1.5, 0.5, 1250, 11);
    const auto r = engle_granger(y, x);
    CHECK(close_abs(r.gamma, 1.5037107822444713, 1e-9));
    CHECK(close_abs(r.t_stat, -21.435355622151313, 1e-6));
    CHECK(r.lags_used == 0);
    CHECK(r.reject_at_5pct);
    CHECK(r.decision_at.at(1));
    CHECK(r.decision_at.at(10));
  }

  TEST_CASE("independent random walks are not called cointegrated (typical seed)") {
    Ar1Config a;
    a.coefficient = 1.0;
    a.length = 500;
    a.seed = 101;
    Ar1Config b = a;
    b.seed = 202;
    const auto r = engle_granger(gen_ar1(a), gen_ar1(b));
    CHECK_FALSE(r.reject_at_5pct);
  }

  TEST_CASE("reject decision is consistent with the embedded thresholds") {
    const auto [y, x] = gen_cointegrated_pair(2.0, 0.3, 400, 21);
    const auto r = engle_granger(y, x);
    const auto cv = engle_granger_critical_values();
    CHECK(r.reject_at_5pct == (r.t_stat < cv.pct5));
    CHECK(r.decision_at.at(5) == r.reject_at_5pct);
  }

  TEST_CASE("contract errors propagate") {
    const std::vector<double> share(40, 1.0);
    CHECK_THROWS_AS(engle_granger(share, std::vector<double>(39, 1.0)), LengthMismatch);
    CHECK_THROWS_AS(engle_granger(std::vector<double>(29, 1.0), std::vector<double>(29, 1.0)),
                    SeriesTooShort);
    const auto walk = cumsum_walk(5, 40);
    CHECK_THROWS_AS(engle_granger(walk, share), DegenerateRegressor);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("ar(1) basics: start at zero, deterministic per seed") {
    Ar1Config cfg;
    cfg.coefficient = 0.7;
    cfg.length = 64;
    cfg.seed = 42;
    const auto a = gen_ar1(cfg);
    const auto b = gen_ar1(cfg);
    REQUIRE(a.size() == 64);
    CHECK(a[0] == 0.0);
    CHECK(a == b);  // bit-reproducible
    cfg.length = 0;
    CHECK(gen_ar1(cfg).empty());
  }

  TEST_CASE("zero coefficient yields pure scaled innovations") {
    Ar1Config cfg;
    cfg.coefficient = 0.0;
    cfg.innovation_sigma = 2.5;
    cfg.length = 32;
    cfg.seed = 8;
    const auto s = gen_ar1(cfg);
    core::Rng rng(8);
    for (std::size_t t = 1; t < s.size(); ++t)
      CHECK(s[t] == 2.5 * rng.next_gaussian());
  }

  TEST_CASE("unit coefficient yields a random walk whose differences are the innovations") {
    Ar1Config cfg;
    cfg.coefficient = 1.0;
    cfg.length = 32;
    cfg.seed = 3;
    const auto s = gen_ar1(cfg);
    core::Rng rng(3);
    for (std::size_t t = 1; t < s.size(); ++t)
      CHECK(s[t] - s[t - 1] == doctest::Approx(rng.next_gaussian()).epsilon(1e-15));
  }

  TEST_CASE("config invariants are enforced") {
    Ar1Config cfg;
    cfg.coefficient = 1.5;
    cfg.length = 10;
    CHECK_THROWS_AS(gen_ar1(cfg), InvalidConfig);
    cfg.coefficient = 0.5;
    cfg.innovation_sigma = 0.0;
    CHECK_THROWS_AS(gen_ar1(cfg), InvalidConfig);
    CHECK_THROWS_AS(gen_cointegrated_pair(1.0, 1.0, 100, 1), InvalidConfig);
  }

  TEST_CASE("cointegrated pair construction") {
    const auto [y, x] = gen_cointegrated_pair(2.0, 0.5, 600, 77);
    REQUIRE(y.size() == 600);
    REQUIRE(x.size() == 600);
    const auto fit = ols(y, x);
    CHECK(close_abs(fit.slope, 2.0, 0.05));
    // The spread y - gamma*x reproduces the seeded stationary component.
    core::Rng spread_rng(78);
    double spread = 0;
    for (std::size_t t = 1; t < 32; ++t) {
      spread = 0.5 * spread + spread_rng.next_gaussian();
      CHECK(y[t] - 2.0 * x[t] == doctest::Approx(spread).epsilon(1e-12));
    }
    const auto [ey, ex] = gen_cointegrated_pair(1.0, 0.5, 0, 1);
    CHECK(ey.empty());
    CHECK(ex.empty());
  }
}

TEST_SUITE("latency") {
  QuotePair valid_quote() {
    QuotePair q;
    q.bid_m1 = 10.05;
    q.ask_m1 = 10.06;
    q.bid_m2 = 9.99;
    q.ask_m2 = 10.00;
    q.nbb = 10.05;
    q.nbo = 10.00;
    q.t_start_ns = 0;
    q.t_end_ns = 1'000'000;
    return q;
  }

  TEST_CASE("crossed at-best persistent quotes are an opportunity") {
    const auto opp = lao_detect(valid_quote());
    REQUIRE(opp.has_value());
    CHECK(opp->profit_per_share == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(opp->duration_ns == 1'000'000);
  }

  TEST_CASE("touching quotes are not crossed") {
    auto q = valid_quote();
    q.bid_m1 = 10.00;
    q.nbb = 10.00;
    CHECK_FALSE(lao_detect(q).has_value());
  }

  TEST_CASE("zero-duration crossings do not count") {
    auto q = valid_quote();
    q.t_end_ns = q.t_start_ns;
    CHECK_FALSE(lao_detect(q).has_value());
  }

  TEST_CASE("detection is exactly the conjunction of its three conditions") {
    // Grid over: crossed?, bid at/above NBB?, ask at/below NBO?, persisted?
    for (const bool crossed : {false, true})
      for (const bool bid_at_best : {false, true})
        for (const bool ask_at_best : {false, true})
          for (const bool persisted : {false, true}) {
            QuotePair q;
            q.ask_m2 = 10.00;
            q.bid_m1 = crossed ? 10.04 : 9.98;
            q.ask_m1 = 10.10;
            q.bid_m2 = 9.90;
            q.nbb = bid_at_best ? q.bid_m1 : q.bid_m1 + 0.01;
            q.nbo = ask_at_best ? q.ask_m2 : q.ask_m2 - 0.01;
            q.t_start_ns = 100;
            q.t_end_ns = persisted ? 200 : 100;
            const bool expect = crossed && bid_at_best && ask_at_best && persisted;
            CAPTURE(crossed);
            CAPTURE(bid_at_best);
            CAPTURE(ask_at_best);
            CAPTURE(persisted);
            CHECK(lao_detect(q).has_value() == expect);
          }
  }

  TEST_CASE("quote validation") {
    CHECK_NOTHROW(valid_quote().validate());
    auto q = valid_quote();
    q.bid_m2 = 0.0;
    CHECK_THROWS_AS(q.validate(), InvalidQuote);
    q = valid_quote();
    q.nbo = -1.0;
    CHECK_THROWS_AS(q.validate(), InvalidQuote);
    q = valid_quote();
    q.t_end_ns = q.t_start_ns - 1;
    CHECK_THROWS_AS(q.validate(), InvalidQuote);
  }

  TEST_CASE("exposure elasticity is the exact 0.9 linear map") {
    CHECK(close_abs(exposure_elasticity(21.41), 19.27, 0.01));
    CHECK(close_abs(exposure_elasticity(31.28), 28.15, 0.01));
    CHECK(close_abs(exposure_elasticity(48.58), 43.72, 0.01));
    CHECK(close_abs(exposure_elasticity(87.32), 78.59, 0.01));
    CHECK(exposure_elasticity(0.0) == 0.0);
    CHECK(exposure_elasticity(-10.0) == doctest::Approx(-9.0));
    core::Rng rng(4);
    for (int i = 0; i < 20; ++i) {
      const double a = (rng.next_unit() - 0.5) * 200.0;
      const double b = (rng.next_unit() - 0.5) * 200.0;
      CHECK(exposure_elasticity(a + b) ==
            doctest::Approx(exposure_elasticity(a) + exposure_elasticity(b)));
      CHECK(exposure_elasticity(a) == doctest::Approx(0.9 * a));
    }
  }
}
