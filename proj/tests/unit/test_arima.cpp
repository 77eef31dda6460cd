#include <doctest.h>

#include <cmath>
#include <random>

#include "sentipulse/arima.hpp"
#include "sim.hpp"

using namespace sentipulse;

TEST_CASE("difference and integrate") {
    SUBCASE("first differences") {
        const std::vector<double> y{1, 2, 4, 7};
        CHECK(difference(y, 1) == std::vector<double>{1, 2, 3});
    }
    SUBCASE("d = 0 is the identity") {
        const std::vector<double> y{3, 1, 4};
        CHECK(difference(y, 0) == y);
    }
    SUBCASE("d >= length is an error") {
        const std::vector<double> y{1, 2};
        CHECK_THROWS_AS(difference(y, 2), std::invalid_argument);
        CHECK_THROWS_AS(difference(y, 5), std::invalid_argument);
    }
    SUBCASE("integrate inverts difference") {
        std::mt19937 rng(21);
        std::normal_distribution<double> g;
        for (int round = 0; round < 50; ++round) {
            std::vector<double> y(40);
            for (auto& v : y) {
                v = g(rng);
            }
            for (int d = 0; d <= 2; ++d) {
                const auto diffed = difference(y, d);
                const std::vector<double> head(y.begin(), y.begin() + d);
                const auto restored = integrate(diffed, head, d);
                REQUIRE(restored.size() == y.size());
                for (std::size_t i = 0; i < y.size(); ++i) {
                    CHECK(restored[i] == doctest::Approx(y[i]).epsilon(1e-12));
                }
            }
        }
    }
    SUBCASE("integrate validates the initial values") {
        const std::vector<double> w{1, 2};
        const std::vector<double> init{1};
        CHECK_THROWS_AS(integrate(w, init, 2), std::invalid_argument);
    }
}

TEST_CASE("fit_arima recovers simulated processes") {
    SUBCASE("white noise under (0,0,0)") {
        const auto y = simtest::white_noise(2000, 1001);
        const ArimaFit fit = fit_arima(y, {0, 0, 0});
        CHECK(std::abs(fit.intercept) < 0.1);
        CHECK(fit.sigma2 == doctest::Approx(1.0).epsilon(0.1));
        CHECK(fit.n_obs == 2000);
    }
    SUBCASE("AR(1) coefficient") {
        const auto y = simtest::ar1(2000, 0.8, 1002);
        const ArimaFit fit = fit_arima(y, {1, 0, 0});
        REQUIRE(fit.ar.size() == 1);
        CHECK(std::abs(fit.ar[0] - 0.8) < 0.05);
    }
    SUBCASE("MA(1) coefficient") {
        const auto y = simtest::ma1(2000, 0.5, 1003);
        const ArimaFit fit = fit_arima(y, {0, 0, 1});
        REQUIRE(fit.ma.size() == 1);
        CHECK(std::abs(fit.ma[0] - 0.5) < 0.08);
    }
    SUBCASE("series too short") {
        const std::vector<double> y{1, 2, 3, 4, 5};
        CHECK_THROWS_AS(fit_arima(y, {1, 0, 0}), ArimaError);
    }
    SUBCASE("non-convergence carries the best iterate") {
        const auto y = simtest::ar1(400, 0.6, 1004);
        ArimaSettings strict;
        strict.max_iterations = 2;
        try {
            fit_arima(y, {2, 0, 2}, nullptr, strict);
            FAIL("expected ArimaConvergenceError");
        } catch (const ArimaConvergenceError& e) {
            CHECK(e.best_fit.order.p == 2);
            CHECK(std::isfinite(e.best_fit.loglik));
        }
    }
}

TEST_CASE("regression with ARIMA errors") {
    simtest::Gauss g(1010);
    const int n = 2000;
    Eigen::MatrixXd x(n, 1);
    std::vector<double> y(n);
    double eta = 0.0;
    for (int i = 0; i < n; ++i) {
        x(i, 0) = g();
        eta = 0.5 * eta + g();
        y[static_cast<std::size_t>(i)] = 2.0 * x(i, 0) + eta;
    }

    SUBCASE("beta recovery against the least-squares oracle") {
        const ArimaFit fit = fit_arima(y, {1, 0, 0}, &x);
        REQUIRE(fit.beta.size() == 1);
        CHECK(std::abs(fit.beta[0] - 2.0) < 0.1);

        // (0,0,0) with a covariate is plain least squares
        const ArimaFit ols_fit = fit_arima(y, {0, 0, 0}, &x);
        Eigen::MatrixXd design(n, 2);
        design.col(0) = x.col(0);
        design.col(1).setOnes();
        const Eigen::VectorXd yv =
            Eigen::Map<const Eigen::VectorXd>(y.data(), n);
        const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(yv);
        CHECK(ols_fit.beta[0] == doctest::Approx(coef(0)).epsilon(1e-3));
        CHECK(std::abs(ols_fit.intercept - coef(1)) < 1e-2);
    }
    SUBCASE("zero covariate columns equal no covariates") {
        const Eigen::MatrixXd empty(n, 0);
        const ArimaFit with_empty = fit_arima(y, {1, 0, 0}, &empty);
        const ArimaFit without = fit_arima(y, {1, 0, 0}, nullptr);
        CHECK(with_empty.ar[0] == doctest::Approx(without.ar[0]).epsilon(1e-12));
        CHECK(with_empty.loglik == doctest::Approx(without.loglik).epsilon(1e-12));
    }
    SUBCASE("singular covariates rejected") {
        Eigen::MatrixXd xx(n, 2);
        xx.col(0) = x.col(0);
        xx.col(1) = 2.0 * x.col(0);
        CHECK_THROWS_AS(fit_arima(y, {0, 0, 0}, &xx), ArimaError);
    }
    SUBCASE("missing future covariates rejected at forecast time") {
        const ArimaFit fit = fit_arima(y, {1, 0, 0}, &x);
        CHECK_THROWS_AS(forecast_arima(fit, 5), ArimaError);
        const Eigen::MatrixXd wrong = Eigen::MatrixXd::Zero(3, 1);
        CHECK_THROWS_AS(forecast_arima(fit, 5, &wrong), ArimaError);
    }
}

TEST_CASE("arima model invariants") {
    const auto y = simtest::ar1(1200, 0.7, 1020, 5.0);

    SUBCASE("AIC identity holds exactly") {
        for (const ArimaOrder order :
             {ArimaOrder{0, 0, 0}, ArimaOrder{1, 0, 0}, ArimaOrder{0, 1, 1},
              ArimaOrder{2, 0, 1}}) {
            const ArimaFit fit = fit_arima(y, order);
            CHECK(fit.aic ==
                  doctest::Approx(-2.0 * fit.loglik + 2.0 * fit.n_params())
                      .epsilon(1e-12));
        }
    }
    SUBCASE("nested models never lose likelihood") {
        const double ll0 = fit_arima(y, {0, 0, 0}).loglik;
        const double ll1 = fit_arima(y, {1, 0, 0}).loglik;
        const double ll2 = fit_arima(y, {2, 0, 0}).loglik;
        const double ll11 = fit_arima(y, {1, 0, 1}).loglik;
        CHECK(ll1 >= ll0 - 1e-6);
        CHECK(ll2 >= ll1 - 1e-6);
        CHECK(ll11 >= ll1 - 1e-6);
    }
    SUBCASE("fitted AR polynomial is stationary") {
        const ArimaFit fit = fit_arima(y, {2, 0, 1});
        // companion spectral radius below one <=> roots outside unit circle
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(2, 2);
        comp(0, 0) = fit.ar[0];
        comp(0, 1) = fit.ar[1];
        comp(1, 0) = 1.0;
        CHECK(comp.eigenvalues().cwiseAbs().maxCoeff() < 1.0);
    }
    SUBCASE("constant shift moves only the intercept") {
        const ArimaFit base = fit_arima(y, {1, 0, 0});
        std::vector<double> shifted = y;
        for (auto& v : shifted) {
            v += 100.0;
        }
        const ArimaFit moved = fit_arima(shifted, {1, 0, 0});
        CHECK(std::abs(moved.ar[0] - base.ar[0]) < 1e-4);
        CHECK(moved.intercept - base.intercept ==
              doctest::Approx(100.0).epsilon(1e-3));
    }
}

TEST_CASE("forecast_arima closed forms") {
    SUBCASE("(0,0,0) forecasts the intercept") {
        const auto y = simtest::white_noise(300, 1031);
        ArimaFit fit = fit_arima(y, {0, 0, 0});
        const ForecastResult fc = forecast_arima(fit, 8);
        REQUIRE(fc.point.size() == 8);
        for (double v : fc.point) {
            CHECK(v == doctest::Approx(fit.intercept).epsilon(1e-12));
        }
    }
    SUBCASE("(0,1,0) forecasts the last value exactly") {
        const auto y = simtest::random_walk(300, 1032);
        const ArimaFit fit = fit_arima(y, {0, 1, 0});
        const ForecastResult fc = forecast_arima(fit, 5);
        for (double v : fc.point) {
            CHECK(v == y.back());
        }
    }
    SUBCASE("AR(1) matches mu + phi^h (y_T - mu)") {
        const auto y = simtest::ar1(600, 0.75, 1033, 3.0);
        const ArimaFit fit = fit_arima(y, {1, 0, 0});
        const int horizon = 12;
        const ForecastResult fc = forecast_arima(fit, horizon);
        const double phi = fit.ar[0];
        const double mu = fit.intercept;
        double expected = y.back();
        for (int h = 0; h < horizon; ++h) {
            expected = mu + phi * (expected - mu);
            CHECK(fc.point[static_cast<std::size_t>(h)] ==
                  doctest::Approx(expected).epsilon(1e-10));
        }
        // deviations from the mean decay monotonically
        for (int h = 1; h < horizon; ++h) {
            CHECK(std::abs(fc.point[static_cast<std::size_t>(h)] - mu) <=
                  std::abs(fc.point[static_cast<std::size_t>(h - 1)] - mu) +
                      1e-12);
        }
    }
    SUBCASE("horizon must be positive") {
        const auto y = simtest::white_noise(100, 1034);
        const ArimaFit fit = fit_arima(y, {0, 0, 0});
        CHECK_THROWS_AS(forecast_arima(fit, 0), std::invalid_argument);
    }
}

TEST_CASE("auto_select") {
    const ArimaGrid small{2, 1, 2};
    SUBCASE("white noise prefers (0,0,0)") {
        int hits = 0;
        for (unsigned seed = 0; seed < 5; ++seed) {
            const auto y = simtest::white_noise(2000, 2000 + seed);
            const ArimaFit fit = auto_select(y, nullptr, small);
            if (fit.order.p == 0 && fit.order.d == 0 && fit.order.q == 0) {
                ++hits;
            }
        }
        CHECK(hits >= 3);
    }
    SUBCASE("random walk selects d >= 1") {
        const auto y = simtest::random_walk(500, 2100);
        const ArimaFit fit = auto_select(y, nullptr, small);
        CHECK(fit.order.d >= 1);
    }
    SUBCASE("AR(1) selects (1,0,0)") {
        const auto y = simtest::ar1(1000, 0.8, 2200);
        const ArimaFit fit = auto_select(y, nullptr, small);
        CHECK(fit.order.p == 1);
        CHECK(fit.order.d == 0);
        CHECK(fit.order.q == 0);
    }
}

TEST_CASE("arima fit json round trip") {
    const auto y = simtest::ar1(300, 0.6, 3001, 2.0);
    const ArimaFit fit = fit_arima(y, {1, 0, 0});
    const std::string labels_storage[] = {std::string("companyS")};
    const ArimaFit back = arima_fit_from_json(
        arima_fit_to_json(fit, std::span<const std::string>(labels_storage)));
    CHECK(back.order.p == fit.order.p);
    CHECK(back.ar[0] == doctest::Approx(fit.ar[0]).epsilon(1e-12));
    CHECK(back.loglik == doctest::Approx(fit.loglik).epsilon(1e-12));
    CHECK(back.aic == doctest::Approx(fit.aic).epsilon(1e-12));
    // the round-tripped fit still forecasts
    const ForecastResult a = forecast_arima(fit, 4);
    const ForecastResult b = forecast_arima(back, 4);
    for (int h = 0; h < 4; ++h) {
        CHECK(a.point[static_cast<std::size_t>(h)] ==
              doctest::Approx(b.point[static_cast<std::size_t>(h)])
                  .epsilon(1e-12));
    }
}
