#include "sentipulse/var.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/fisher_f.hpp>
#include <json.hpp>

namespace sentipulse {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Lagged design matrix over rows [first_row, n): [1, Y(t-1), ..., Y(t-p)].
MatrixXd lagged_design(const MatrixXd& data, int p, int first_row) {
    const int n = static_cast<int>(data.rows());
    const int k = static_cast<int>(data.cols());
    const int T = n - first_row;
    MatrixXd Z(T, 1 + p * k);
    for (int t = first_row; t < n; ++t) {
        Z(t - first_row, 0) = 1.0;
        for (int lag = 1; lag <= p; ++lag) {
            Z.block(t - first_row, 1 + (lag - 1) * k, 1, k) = data.row(t - lag);
        }
    }
    return Z;
}

void check_columns(const MatrixXd& data) {
    for (int c = 0; c < data.cols(); ++c) {
        const double mean = data.col(c).mean();
        const double var = (data.col(c).array() - mean).square().sum();
        if (!(var > 0.0)) {
            throw VarError("column " + std::to_string(c) + " has zero variance");
        }
    }
}

double gaussian_loglik(const MatrixXd& sigma, int T) {
    const int k = static_cast<int>(sigma.rows());
    const Eigen::LLT<MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success) {
        throw VarError("residual covariance is not positive definite");
    }
    double logdet = 0.0;
    const MatrixXd L = llt.matrixL();
    for (int i = 0; i < k; ++i) {
        logdet += 2.0 * std::log(L(i, i));
    }
    return -0.5 * T *
           (k * std::log(2.0 * std::numbers::pi) + logdet + k);
}

VarFit fit_var_on(const MatrixXd& data, int p, int first_row,
                  std::vector<std::string> labels) {
    const int n = static_cast<int>(data.rows());
    const int k = static_cast<int>(data.cols());
    if (p < 1) {
        throw std::invalid_argument("VAR lag order must be >= 1");
    }
    if (first_row < p) {
        throw std::invalid_argument("estimation sample starts before lag depth");
    }
    if (n < k * p + 10) {
        throw VarError("too few observations: need at least k*p + 10 = " +
                       std::to_string(k * p + 10) + ", got " + std::to_string(n));
    }
    check_columns(data);
    if (!labels.empty() && static_cast<int>(labels.size()) != k) {
        throw std::invalid_argument("label count must match columns");
    }

    const MatrixXd Z = lagged_design(data, p, first_row);
    const MatrixXd Y = data.bottomRows(n - first_row);
    const Eigen::ColPivHouseholderQR<MatrixXd> qr(Z);
    if (qr.rank() < Z.cols()) {
        throw VarError("rank-deficient regressor matrix");
    }
    const MatrixXd B = qr.solve(Y);  // (1 + p*k) x k
    const MatrixXd resid = Y - Z * B;
    const int T = static_cast<int>(Y.rows());

    VarFit fit;
    fit.k = k;
    fit.p = p;
    fit.labels = std::move(labels);
    fit.c = B.row(0).transpose();
    fit.A.reserve(static_cast<std::size_t>(p));
    for (int lag = 0; lag < p; ++lag) {
        // equation i regresses on Z columns; coefficient block transposes
        // into the A_i of the system form
        fit.A.push_back(B.middleRows(1 + lag * k, k).transpose());
    }
    fit.sigma = resid.transpose() * resid / T;
    fit.loglik = gaussian_loglik(fit.sigma, T);
    fit.aic = -2.0 * fit.loglik + 2.0 * fit.n_params();
    fit.n_obs = T;
    fit.history = data.bottomRows(p);
    return fit;
}

}  // namespace

VarFit fit_var(const MatrixXd& data, int p, std::vector<std::string> labels) {
    return fit_var_on(data, p, p, std::move(labels));
}

std::pair<int, VarFit> select_var_lag(const MatrixXd& data, int p_max,
                                      std::vector<std::string> labels) {
    const int n = static_cast<int>(data.rows());
    const int k = static_cast<int>(data.cols());
    if (p_max <= 0) {
        p_max = std::min(10, n / (3 * k));
    }
    if (p_max < 1) {
        throw VarError("series too short for lag selection");
    }
    std::optional<std::pair<int, VarFit>> best;
    std::string last_error = "no candidate lag could be estimated";
    for (int p = 1; p <= p_max; ++p) {
        VarFit fit;
        try {
            fit = fit_var_on(data, p, p_max, labels);
        } catch (const VarError& e) {
            last_error = e.what();
            continue;
        }
        if (!best || fit.aic < best->second.aic - 1e-9) {
            best = {p, std::move(fit)};
        }
    }
    if (!best) {
        throw VarError(last_error);
    }
    return std::move(*best);
}

MatrixXd forecast_var(const VarFit& fit, int horizon) {
    if (horizon < 1) {
        throw std::invalid_argument("forecast horizon must be >= 1");
    }
    if (fit.history.rows() != fit.p || fit.history.cols() != fit.k) {
        throw VarError("fit carries no forecasting history");
    }
    // rolling window of the last p values, newest last
    MatrixXd window = fit.history;
    MatrixXd out(horizon, fit.k);
    for (int h = 0; h < horizon; ++h) {
        VectorXd next = fit.c;
        for (int lag = 1; lag <= fit.p; ++lag) {
            next += fit.A[static_cast<std::size_t>(lag - 1)] *
                    window.row(fit.p - lag).transpose();
        }
        out.row(h) = next.transpose();
        if (fit.p > 1) {
            window.topRows(fit.p - 1) = window.bottomRows(fit.p - 1).eval();
        }
        window.row(fit.p - 1) = next.transpose();
    }
    return out;
}

GrangerResult granger_causality(const MatrixXd& data,
                                const std::vector<std::string>& labels,
                                const std::string& cause,
                                const std::string& effect, int p) {
    if (p < 1) {
        throw std::invalid_argument("granger: lag order must be >= 1");
    }
    const int k = static_cast<int>(data.cols());
    if (static_cast<int>(labels.size()) != k) {
        throw std::invalid_argument("granger: label count must match columns");
    }
    const auto index_of = [&](const std::string& name) {
        const auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            throw std::invalid_argument("granger: unknown variable '" + name +
                                        "'");
        }
        return static_cast<int>(it - labels.begin());
    };
    const int cause_col = index_of(cause);
    const int effect_col = index_of(effect);
    if (cause_col == effect_col) {
        throw std::invalid_argument("granger: cause and effect must differ");
    }

    const int n = static_cast<int>(data.rows());
    const int m_unrestricted = 1 + k * p;
    const int T = n - p;
    const int df_den = T - m_unrestricted;
    if (df_den <= 0) {
        throw VarError("granger: non-positive denominator degrees of freedom");
    }

    const MatrixXd Z = lagged_design(data, p, p);
    const VectorXd y = data.col(effect_col).tail(T);

    // columns of Z belonging to the cause's lags
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(m_unrestricted - p));
    for (int c = 0; c < m_unrestricted; ++c) {
        const bool is_cause_lag =
            c > 0 && ((c - 1) % k) == cause_col;
        if (!is_cause_lag) {
            keep.push_back(c);
        }
    }
    MatrixXd Zr(T, static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Zr.col(static_cast<int>(i)) = Z.col(keep[i]);
    }

    const auto rss = [&](const MatrixXd& X) {
        const VectorXd coef = X.colPivHouseholderQr().solve(y);
        return (y - X * coef).squaredNorm();
    };
    const double rss_u = rss(Z);
    const double rss_r = rss(Zr);

    GrangerResult result;
    result.cause = cause;
    result.effect = effect;
    result.restricted_rss = rss_r;
    result.unrestricted_rss = rss_u;
    result.df_num = p;
    result.df_den = df_den;
    if (rss_u <= 0.0) {
        result.f_stat = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
    }
    result.f_stat =
        std::max(0.0, ((rss_r - rss_u) / p) / (rss_u / df_den));
    const boost::math::fisher_f f_dist(p, df_den);
    result.p_value = boost::math::cdf(boost::math::complement(
        f_dist, result.f_stat));
    return result;
}

IrfResult impulse_response(const VarFit& fit, int horizon) {
    if (horizon < 0) {
        throw std::invalid_argument("irf: horizon must be >= 0");
    }
    IrfResult result;
    result.horizon = horizon;
    result.responses.reserve(static_cast<std::size_t>(horizon + 1));
    result.responses.push_back(MatrixXd::Identity(fit.k, fit.k));
    for (int h = 1; h <= horizon; ++h) {
        MatrixXd psi = MatrixXd::Zero(fit.k, fit.k);
        for (int i = 1; i <= std::min(h, fit.p); ++i) {
            psi += fit.A[static_cast<std::size_t>(i - 1)] *
                   result.responses[static_cast<std::size_t>(h - i)];
        }
        result.responses.push_back(std::move(psi));
    }
    return result;
}

namespace {

std::vector<std::vector<double>> to_rows(const MatrixXd& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].assign(m.cols(), 0.0);
        for (int j = 0; j < m.cols(); ++j) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m(i, j);
        }
    }
    return rows;
}

MatrixXd from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return MatrixXd(0, 0);
    }
    MatrixXd m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(j)];
        }
    }
    return m;
}

}  // namespace

std::string var_fit_to_json(const VarFit& fit) {
    nlohmann::json j;
    j["k"] = fit.k;
    j["p"] = fit.p;
    j["labels"] = fit.labels;
    j["c"] = std::vector<double>(fit.c.data(), fit.c.data() + fit.c.size());
    auto a_rows = nlohmann::json::array();
    for (const auto& a : fit.A) {
        a_rows.push_back(to_rows(a));  // row-major
    }
    j["A"] = a_rows;
    j["sigma"] = to_rows(fit.sigma);
    j["loglik"] = fit.loglik;
    j["aic"] = fit.aic;
    j["n_obs"] = fit.n_obs;
    j["history"] = to_rows(fit.history);
    return j.dump(2) + "\n";
}

VarFit var_fit_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    VarFit fit;
    fit.k = j.at("k").get<int>();
    fit.p = j.at("p").get<int>();
    fit.labels = j.at("labels").get<std::vector<std::string>>();
    const auto c = j.at("c").get<std::vector<double>>();
    fit.c = Eigen::Map<const VectorXd>(c.data(),
                                       static_cast<Eigen::Index>(c.size()));
    for (const auto& rows : j.at("A")) {
        fit.A.push_back(from_rows(rows.get<std::vector<std::vector<double>>>()));
    }
    fit.sigma = from_rows(j.at("sigma").get<std::vector<std::vector<double>>>());
    fit.loglik = j.at("loglik").get<double>();
    fit.aic = j.at("aic").get<double>();
    fit.n_obs = j.at("n_obs").get<int>();
    fit.history = from_rows(j.at("history").get<std::vector<std::vector<double>>>());
    return fit;
}

}  // namespace sentipulse
