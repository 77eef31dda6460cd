#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sentipulse/time.hpp"

namespace sentipulse {

struct ArimaOrder {
    int p = 0;  // autoregressive lags
    int d = 0;  // differencing order
    int q = 0;  // moving-average lags
};

struct ArimaSettings {
    int max_iterations = 500;
    double param_tol = 1e-8;      // simplex diameter
    double objective_tol = 1e-10; // objective spread across the simplex
    bool exhaustive = false;      // auto_select: scan the full grid instead of
                                  // the stepwise neighborhood walk
};

struct ArimaGrid {
    int p_max = 5;
    int d_max = 2;
    int q_max = 5;
};

/// A fitted ARIMA(p,d,q), optionally a regression with ARIMA errors when
/// covariates were supplied: y_t = x_t' beta + eta_t with eta ~ ARIMA.
/// The intercept is the mean of the ARMA part and is fitted only for d = 0.
struct ArimaFit {
    ArimaOrder order;
    std::vector<double> ar;
    std::vector<double> ma;
    std::vector<double> beta;
    double intercept = 0.0;
    double sigma2 = 0.0;
    double loglik = 0.0;  // exact Gaussian log-likelihood of the differenced data
    double aic = 0.0;
    int n_obs = 0;  // observations entering the likelihood (n - d)

    /// Forecasting context: filtered state at the end of the sample and the
    /// last value of each partial difference of the error process.
    Eigen::VectorXd state;
    std::vector<double> integration_tail;  // delta^j eta at T, j = 0..d-1

    /// Free parameters: p + q + covariates + intercept (d = 0 only) + sigma2.
    int n_params() const;
};

struct ForecastResult {
    int horizon = 0;
    std::vector<double> point;
    Instant origin{};  // last training instant; set by pipeline callers
};

struct ArimaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The optimizer ran out of iterations before reaching tolerance. Carries
/// the best iterate found.
struct ArimaConvergenceError : ArimaError {
    ArimaConvergenceError(const std::string& what, ArimaFit best)
        : ArimaError(what), best_fit(std::move(best)) {}
    ArimaFit best_fit;
};

/// d-fold first differences; output shrinks by d. d >= length is an error.
std::vector<double> difference(std::span<const double> y, int d);

/// Inverse of difference given the first d original values:
/// integrate(difference(y, d), y[0..d), d) == y.
std::vector<double> integrate(std::span<const double> diffed,
                              std::span<const double> initial, int d);

/// Estimates the model at a fixed order. A conditional-sum-of-squares pass
/// provides starting values; the simplex then maximizes the exact Gaussian
/// likelihood evaluated by the Kalman recursion. Non-stationary and
/// non-invertible iterates are rejected by a barrier. Covariate rows align
/// with y and are differenced together with it.
ArimaFit fit_arima(std::span<const double> y, ArimaOrder order,
                   const Eigen::MatrixXd* covariates = nullptr,
                   const ArimaSettings& settings = {});

/// Order search over the grid. Candidates are ranked by AIC with
/// likelihoods made comparable across d by conditioning every model on the
/// first d_max observations. Fits whose characteristic roots sit within 1%
/// of the unit circle are discarded, and AIC gaps inside a two-unit window
/// resolve to the smaller p+q, then smaller d, then smaller p. The default
/// search walks the stepwise neighborhood of the incumbent (the usual
/// selection-tool traversal); settings.exhaustive scans every grid point.
/// Non-converged points are skipped; the winner is refit at full precision.
ArimaFit auto_select(std::span<const double> y,
                     const Eigen::MatrixXd* covariates = nullptr,
                     const ArimaGrid& grid = {},
                     const ArimaSettings& settings = {});

/// Recursive forecast from the filtered state, integrated back d times,
/// plus the covariate contribution. future_covariates must have horizon
/// rows when the fit used covariates.
ForecastResult forecast_arima(const ArimaFit& fit, int horizon,
                              const Eigen::MatrixXd* future_covariates = nullptr);

std::string arima_fit_to_json(const ArimaFit& fit,
                              std::span<const std::string> covariate_labels = {});
ArimaFit arima_fit_from_json(const std::string& text);

}  // namespace sentipulse
