#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace sentipulse {

struct VarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fitted VAR(p): Y(t) = c + A_1 Y(t-1) + ... + A_p Y(t-p) + e(t),
/// estimated by equation-wise least squares. sigma is the maximum-
/// likelihood residual covariance E'E / T; the AIC parameter count is the
/// k + p*k^2 mean parameters (covariance excluded).
struct VarFit {
    int k = 0;
    int p = 0;
    Eigen::VectorXd c;
    std::vector<Eigen::MatrixXd> A;  // A[i] multiplies Y(t-1-i)
    Eigen::MatrixXd sigma;
    double loglik = 0.0;
    double aic = 0.0;
    int n_obs = 0;  // regression rows T = n - p
    std::vector<std::string> labels;
    Eigen::MatrixXd history;  // last p observations, oldest row first

    int n_params() const { return k + p * k * k; }
};

/// data is n x k, one row per instant. Requires n >= k*p + 10 and nonzero
/// column variances.
VarFit fit_var(const Eigen::MatrixXd& data, int p,
               std::vector<std::string> labels = {});

/// Minimum-AIC lag over 1..p_max, every candidate estimated on the common
/// sample that reserves the first p_max rows; ties go to the smaller p.
/// p_max defaults to min(10, n / (3k)).
std::pair<int, VarFit> select_var_lag(const Eigen::MatrixXd& data, int p_max = 0,
                                      std::vector<std::string> labels = {});

/// horizon x k matrix of recursive forecasts with future errors at zero.
Eigen::MatrixXd forecast_var(const VarFit& fit, int horizon);

struct GrangerResult {
    std::string cause;
    std::string effect;
    double f_stat = 0.0;
    double p_value = 1.0;
    double restricted_rss = 0.0;
    double unrestricted_rss = 0.0;
    int df_num = 0;  // p restrictions
    int df_den = 0;
};

/// F-test of whether the cause's p lags improve the effect equation beyond
/// the lags of every variable (including the effect itself).
GrangerResult granger_causality(const Eigen::MatrixXd& data,
                                const std::vector<std::string>& labels,
                                const std::string& cause,
                                const std::string& effect, int p);

/// Non-orthogonalized impulse responses: responses[h](i, j) is the effect
/// on variable i of a unit shock to variable j, h steps after impact.
struct IrfResult {
    int horizon = 0;
    std::vector<Eigen::MatrixXd> responses;  // horizon + 1 matrices
};

IrfResult impulse_response(const VarFit& fit, int horizon);

std::string var_fit_to_json(const VarFit& fit);
VarFit var_fit_from_json(const std::string& text);

}  // namespace sentipulse
