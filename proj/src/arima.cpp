#include "sentipulse/arima.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <optional>

#include <json.hpp>

#include "nelder_mead.hpp"

namespace sentipulse {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Spectral radius of the companion matrix of 1 - c1 z - ... - ck z^k.
// The lag polynomial has all roots outside the unit circle iff this is < 1.
double companion_spectral_radius(std::span<const double> coeffs) {
    const int k = static_cast<int>(coeffs.size());
    if (k == 0) {
        return 0.0;
    }
    MatrixXd companion = MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        companion(0, i) = coeffs[static_cast<std::size_t>(i)];
    }
    for (int i = 1; i < k; ++i) {
        companion(i, i - 1) = 1.0;
    }
    return companion.eigenvalues().cwiseAbs().maxCoeff();
}

double ar_spectral_radius(std::span<const double> phi) {
    return companion_spectral_radius(phi);
}

double ma_spectral_radius(std::span<const double> theta) {
    std::vector<double> negated(theta.begin(), theta.end());
    for (double& t : negated) {
        t = -t;
    }
    return companion_spectral_radius(negated);
}

constexpr double kStationarityEdge = 1.0 - 1e-4;

// Harvey state-space form of ARMA(p,q): state dimension m = max(p, q+1),
// transition has phi in the first column and ones on the superdiagonal,
// innovation loading R = (1, theta_1, ..)'. Observation picks state(0).
struct ArmaStateSpace {
    MatrixXd T;
    VectorXd R;
    int m = 0;
};

ArmaStateSpace make_state_space(std::span<const double> phi,
                                std::span<const double> theta) {
    const int p = static_cast<int>(phi.size());
    const int q = static_cast<int>(theta.size());
    const int m = std::max(p, q + 1);
    ArmaStateSpace ss;
    ss.m = m;
    ss.T = MatrixXd::Zero(m, m);
    for (int i = 0; i < p; ++i) {
        ss.T(i, 0) = phi[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i + 1 < m; ++i) {
        ss.T(i, i + 1) = 1.0;
    }
    ss.R = VectorXd::Zero(m);
    ss.R(0) = 1.0;
    for (int j = 0; j < q; ++j) {
        ss.R(j + 1) = theta[static_cast<std::size_t>(j)];
    }
    return ss;
}

// Stationary solution of P = T P T' + R R' via the vectorized linear system.
MatrixXd stationary_covariance(const ArmaStateSpace& ss) {
    const int m = ss.m;
    const int mm = m * m;
    MatrixXd lhs = MatrixXd::Identity(mm, mm);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                for (int l = 0; l < m; ++l) {
                    lhs(i + j * m, k + l * m) -= ss.T(i, k) * ss.T(j, l);
                }
            }
        }
    }
    const MatrixXd rr = ss.R * ss.R.transpose();
    VectorXd rhs(mm);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            rhs(i + j * m) = rr(i, j);
        }
    }
    const VectorXd vec_p = lhs.fullPivLu().solve(rhs);
    MatrixXd P(m, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            P(i, j) = vec_p(i + j * m);
        }
    }
    // enforce symmetry lost to roundoff
    return 0.5 * (P + P.transpose());
}

struct KalmanSummary {
    double ssq = 0.0;     // sum v^2 / F with unit innovation variance
    double sumlog = 0.0;  // sum log F
    int nu = 0;           // prediction errors accumulated
    VectorXd state;       // filtered state after the last observation
    bool ok = false;
};

// Prediction-error decomposition with the innovation variance concentrated
// out. Terms of the first skip_first observations update the state but are
// left out of the accumulation, which conditions the likelihood on them.
KalmanSummary kalman_filter(std::span<const double> w_centered,
                            std::span<const double> phi,
                            std::span<const double> theta, int skip_first) {
    const ArmaStateSpace ss = make_state_space(phi, theta);
    const int m = ss.m;
    VectorXd a = VectorXd::Zero(m);
    MatrixXd P = stationary_covariance(ss);
    const MatrixXd RR = ss.R * ss.R.transpose();

    KalmanSummary out;
    for (std::size_t t = 0; t < w_centered.size(); ++t) {
        const double v = w_centered[t] - a(0);
        const double F = P(0, 0);
        if (!(F > 0.0) || !std::isfinite(F) || !std::isfinite(v)) {
            return out;  // ok stays false
        }
        if (static_cast<int>(t) >= skip_first) {
            out.ssq += v * v / F;
            out.sumlog += std::log(F);
            ++out.nu;
        }
        const VectorXd gain = P.col(0) / F;
        const VectorXd filtered = a + gain * v;
        const MatrixXd Pf = P - gain * P.row(0);
        a = ss.T * filtered;
        P = ss.T * Pf * ss.T.transpose() + RR;
        if (t + 1 == w_centered.size()) {
            out.state = filtered;
        }
    }
    out.ok = out.nu > 0;
    return out;
}

double loglik_from(const KalmanSummary& k) {
    const double n = static_cast<double>(k.nu);
    const double s2 = k.ssq / n;
    return -0.5 * n *
           (std::log(s2) + k.sumlog / n + std::log(2.0 * std::numbers::pi) + 1.0);
}

// Parameter vector layout: [phi(p), theta(q), beta(ncov), mu (d==0 only)].
struct ParamLayout {
    int p = 0;
    int q = 0;
    int ncov = 0;
    bool has_mean = false;
    int size() const { return p + q + ncov + (has_mean ? 1 : 0); }
};

struct Unpacked {
    std::vector<double> phi;
    std::vector<double> theta;
    VectorXd beta;
    double mu = 0.0;
};

Unpacked unpack(const VectorXd& x, const ParamLayout& lay) {
    Unpacked u;
    int at = 0;
    u.phi.assign(x.data() + at, x.data() + at + lay.p);
    at += lay.p;
    u.theta.assign(x.data() + at, x.data() + at + lay.q);
    at += lay.q;
    u.beta = x.segment(at, lay.ncov);
    at += lay.ncov;
    u.mu = lay.has_mean ? x(at) : 0.0;
    return u;
}

// w minus regression and mean parts.
VectorXd center(const VectorXd& w, const MatrixXd& xd, const Unpacked& u) {
    VectorXd c = w;
    if (u.beta.size() > 0) {
        c -= xd * u.beta;
    }
    if (u.mu != 0.0) {
        c.array() -= u.mu;
    }
    return c;
}

// Large, sloped penalty outside the stationary/invertible region keeps the
// simplex away from the boundary while still pointing it back inside.
std::optional<double> barrier(const Unpacked& u) {
    const double rho_ar = ar_spectral_radius(u.phi);
    const double rho_ma = ma_spectral_radius(u.theta);
    const double worst = std::max(rho_ar, rho_ma);
    if (worst >= kStationarityEdge) {
        return 1e8 * (1.0 + worst - kStationarityEdge);
    }
    return std::nullopt;
}

// Conditional sum of squares: errors are recursed with pre-sample values
// fixed at zero, conditioning on the first p observations.
double css_objective(const VectorXd& x, const ParamLayout& lay,
                     const VectorXd& w, const MatrixXd& xd) {
    const Unpacked u = unpack(x, lay);
    if (const auto pen = barrier(u)) {
        return *pen;
    }
    const VectorXd c = center(w, xd, u);
    const int n = static_cast<int>(c.size());
    const int p = lay.p;
    const int q = lay.q;
    if (n <= p) {
        return 1e10;
    }
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    double ssq = 0.0;
    int nu = 0;
    for (int t = p; t < n; ++t) {
        double et = c(t);
        for (int i = 0; i < p; ++i) {
            et -= u.phi[static_cast<std::size_t>(i)] * c(t - i - 1);
        }
        for (int j = 0; j < q && t - j - 1 >= p; ++j) {
            et -= u.theta[static_cast<std::size_t>(j)] *
                  e[static_cast<std::size_t>(t - j - 1)];
        }
        e[static_cast<std::size_t>(t)] = et;
        ssq += et * et;
        ++nu;
    }
    if (!(ssq > 0.0) || !std::isfinite(ssq)) {
        return std::isfinite(ssq) ? -1e10 : 1e10;
    }
    return 0.5 * nu * std::log(ssq / nu);
}

double exact_objective(const VectorXd& x, const ParamLayout& lay,
                       const VectorXd& w, const MatrixXd& xd) {
    const Unpacked u = unpack(x, lay);
    if (const auto pen = barrier(u)) {
        return *pen;
    }
    const VectorXd c = center(w, xd, u);
    const KalmanSummary k = kalman_filter(
        std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
        u.phi, u.theta, 0);
    if (!k.ok || !(k.ssq > 0.0) || !std::isfinite(k.ssq)) {
        return 1e10;
    }
    return -loglik_from(k);
}

MatrixXd difference_columns(const MatrixXd& x, int d) {
    MatrixXd out(x.rows() - d, x.cols());
    for (int c = 0; c < x.cols(); ++c) {
        std::vector<double> col(x.col(c).data(), x.col(c).data() + x.rows());
        const std::vector<double> diffed = difference(col, d);
        for (int r = 0; r < out.rows(); ++r) {
            out(r, c) = diffed[static_cast<std::size_t>(r)];
        }
    }
    return out;
}

VectorXd initial_parameters(const ParamLayout& lay, const VectorXd& w,
                            const MatrixXd& xd) {
    VectorXd x0 = VectorXd::Zero(lay.size());

    // mean/regression start from least squares on the differenced data
    VectorXd resid = w;
    const int extra = lay.ncov + (lay.has_mean ? 1 : 0);
    if (extra > 0) {
        MatrixXd design(w.size(), extra);
        int col = 0;
        if (lay.ncov > 0) {
            design.leftCols(lay.ncov) = xd;
            col = lay.ncov;
        }
        if (lay.has_mean) {
            design.col(col).setOnes();
        }
        const VectorXd coef = design.colPivHouseholderQr().solve(w);
        resid -= design * coef;
        for (int i = 0; i < lay.ncov; ++i) {
            x0(lay.p + lay.q + i) = coef(i);
        }
        if (lay.has_mean) {
            x0(lay.p + lay.q + lay.ncov) = coef(col);
        }
    }

    // AR start from least squares on lagged residuals, shrunk into the
    // stationary region if needed
    const int n = static_cast<int>(resid.size());
    if (lay.p > 0 && n > 2 * lay.p + 1) {
        MatrixXd lags(n - lay.p, lay.p);
        for (int t = lay.p; t < n; ++t) {
            for (int i = 0; i < lay.p; ++i) {
                lags(t - lay.p, i) = resid(t - i - 1);
            }
        }
        VectorXd phi =
            lags.colPivHouseholderQr().solve(resid.tail(n - lay.p));
        const double rho = ar_spectral_radius(
            std::span<const double>(phi.data(), static_cast<std::size_t>(lay.p)));
        if (rho >= 0.95) {
            phi *= 0.95 / rho;
        }
        x0.head(lay.p) = phi;
    }
    return x0;
}

struct CoreFit {
    ArimaFit fit;
    VectorXd params;
    ParamLayout layout;
    bool converged = false;
};

// Shared by fit_arima and the grid scan. polish=false stops after the CSS
// pass (exact likelihood still evaluated at the CSS estimates).
CoreFit fit_core(std::span<const double> y, ArimaOrder order,
                 const Eigen::MatrixXd* covariates, const ArimaSettings& settings,
                 bool polish) {
    if (order.p < 0 || order.d < 0 || order.q < 0) {
        throw std::invalid_argument("arima order components must be >= 0");
    }
    const int n = static_cast<int>(y.size());
    const int ncov =
        covariates && covariates->cols() > 0 ? static_cast<int>(covariates->cols())
                                             : 0;
    if (covariates && ncov > 0 && covariates->rows() != n) {
        throw std::invalid_argument("covariate rows must align with the series");
    }
    if (n < order.d + order.p + order.q + 10) {
        throw ArimaError("series too short for order (" +
                         std::to_string(order.p) + "," + std::to_string(order.d) +
                         "," + std::to_string(order.q) + ")");
    }

    const std::vector<double> w_vec = difference(y, order.d);
    const VectorXd w = Eigen::Map<const VectorXd>(
        w_vec.data(), static_cast<Eigen::Index>(w_vec.size()));
    MatrixXd xd(w.size(), 0);
    if (ncov > 0) {
        xd = difference_columns(*covariates, order.d);
        if (xd.colPivHouseholderQr().rank() < xd.cols()) {
            throw ArimaError("singular covariate matrix");
        }
    }

    ParamLayout lay{order.p, order.q, ncov, order.d == 0};
    VectorXd params = initial_parameters(lay, w, xd);
    bool converged = true;
    if (lay.size() > 0) {
        const auto css = detail::nelder_mead(
            [&](const VectorXd& x) { return css_objective(x, lay, w, xd); },
            params, 0.1, settings.max_iterations, settings.param_tol,
            settings.objective_tol);
        params = css.x;
        converged = css.converged;
        if (polish) {
            const auto ml = detail::nelder_mead(
                [&](const VectorXd& x) { return exact_objective(x, lay, w, xd); },
                params, 0.05, settings.max_iterations, settings.param_tol,
                settings.objective_tol);
            params = ml.x;
            converged = ml.converged;
        }
    }

    const Unpacked u = unpack(params, lay);
    const VectorXd c = center(w, xd, u);
    const KalmanSummary k = kalman_filter(
        std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
        u.phi, u.theta, 0);
    if (!k.ok) {
        throw ArimaError("likelihood evaluation failed at the fitted parameters");
    }

    CoreFit out;
    out.layout = lay;
    out.params = params;
    out.converged = converged;
    ArimaFit& fit = out.fit;
    fit.order = order;
    fit.ar = u.phi;
    fit.ma = u.theta;
    fit.beta.assign(u.beta.data(), u.beta.data() + u.beta.size());
    fit.intercept = u.mu;
    fit.sigma2 = k.ssq / k.nu;
    fit.loglik = loglik_from(k);
    fit.aic = -2.0 * fit.loglik + 2.0 * fit.n_params();
    fit.n_obs = k.nu;
    fit.state = k.state;

    // last value of each partial difference of the error process
    // eta = y - X beta
    std::vector<double> eta(y.begin(), y.end());
    if (ncov > 0) {
        for (int t = 0; t < n; ++t) {
            eta[static_cast<std::size_t>(t)] -= covariates->row(t) * u.beta;
        }
    }
    fit.integration_tail.resize(static_cast<std::size_t>(order.d));
    std::vector<double> level = eta;
    for (int j = 0; j < order.d; ++j) {
        fit.integration_tail[static_cast<std::size_t>(j)] = level.back();
        level = difference(level, 1);
    }
    return out;
}

}  // namespace

int ArimaFit::n_params() const {
    return order.p + order.q + static_cast<int>(beta.size()) +
           (order.d == 0 ? 1 : 0) + 1;
}

std::vector<double> difference(std::span<const double> y, int d) {
    if (d < 0) {
        throw std::invalid_argument("difference: d must be >= 0");
    }
    if (static_cast<std::size_t>(d) >= y.size()) {
        throw std::invalid_argument("difference: d must be smaller than length");
    }
    std::vector<double> out(y.begin(), y.end());
    for (int pass = 0; pass < d; ++pass) {
        for (std::size_t t = out.size() - 1; t > 0; --t) {
            out[t] -= out[t - 1];
        }
        out.erase(out.begin());
    }
    return out;
}

std::vector<double> integrate(std::span<const double> diffed,
                              std::span<const double> initial, int d) {
    if (d < 0 || initial.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument(
            "integrate: need exactly d initial values");
    }
    std::vector<double> cur(diffed.begin(), diffed.end());
    const std::vector<double> init(initial.begin(), initial.end());
    for (int level = d - 1; level >= 0; --level) {
        const std::vector<double> head = difference(init, level);
        std::vector<double> up(cur.size() + 1);
        up[0] = head.front();
        for (std::size_t t = 0; t < cur.size(); ++t) {
            up[t + 1] = up[t] + cur[t];
        }
        cur = std::move(up);
    }
    return cur;
}

ArimaFit fit_arima(std::span<const double> y, ArimaOrder order,
                   const Eigen::MatrixXd* covariates,
                   const ArimaSettings& settings) {
    CoreFit core = fit_core(y, order, covariates, settings, /*polish=*/true);
    if (!core.converged) {
        throw ArimaConvergenceError(
            "optimizer did not converge within " +
                std::to_string(settings.max_iterations) + " iterations",
            std::move(core.fit));
    }
    return std::move(core.fit);
}

namespace {

// Characteristic roots this close to the unit circle mark a numerically
// unstable fit (a near-unit AR root shadows differencing, a near-unit MA
// root shadows over-differencing). Reference selection tools discard them.
constexpr double kRootRejection = 0.99;

// AIC differences below this are not meaningful support for the larger
// model; the tie-break then prefers smaller p+q, then d, then p.
constexpr double kAicTieWindow = 2.0;

struct Candidate {
    double aic = 0.0;
    ArimaOrder order;
};

// Fits one grid point and scores it on the common conditional sample
// (every model conditioned on the first d_max observations so AICs are
// comparable across d). Root-rejected or non-converged points come back
// empty.
std::optional<Candidate> evaluate_candidate(std::span<const double> y,
                                            const Eigen::MatrixXd* covariates,
                                            ArimaOrder order, int d_max,
                                            const ArimaSettings& settings) {
    CoreFit core;
    try {
        core = fit_core(y, order, covariates, settings, /*polish=*/false);
    } catch (const ArimaError&) {
        return std::nullopt;
    }
    if (!core.converged) {
        return std::nullopt;
    }
    if (ar_spectral_radius(core.fit.ar) > kRootRejection ||
        ma_spectral_radius(core.fit.ma) > kRootRejection) {
        return std::nullopt;
    }
    const Unpacked u = unpack(core.params, core.layout);
    const std::vector<double> w_vec = difference(y, order.d);
    const VectorXd w = Eigen::Map<const VectorXd>(
        w_vec.data(), static_cast<Eigen::Index>(w_vec.size()));
    MatrixXd xd(w.size(), 0);
    if (core.layout.ncov > 0) {
        xd = difference_columns(*covariates, order.d);
    }
    const VectorXd c = center(w, xd, u);
    const KalmanSummary k = kalman_filter(
        std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
        u.phi, u.theta, d_max - order.d);
    if (!k.ok) {
        return std::nullopt;
    }
    return Candidate{-2.0 * loglik_from(k) + 2.0 * core.fit.n_params(), order};
}

// Parsimony choice over a candidate set: the smallest model whose AIC sits
// within the tie window of the minimum.
const Candidate* pick_candidate(const std::vector<Candidate>& candidates) {
    if (candidates.empty()) {
        return nullptr;
    }
    double min_aic = candidates.front().aic;
    for (const auto& cand : candidates) {
        min_aic = std::min(min_aic, cand.aic);
    }
    const auto key = [](const ArimaOrder& o) {
        return std::tuple(o.p + o.q, o.d, o.p);
    };
    const Candidate* best = nullptr;
    for (const auto& cand : candidates) {
        if (cand.aic > min_aic + kAicTieWindow) {
            continue;
        }
        if (!best || key(cand.order) < key(best->order)) {
            best = &cand;
        }
    }
    return best;
}

}  // namespace

ArimaFit auto_select(std::span<const double> y, const Eigen::MatrixXd* covariates,
                     const ArimaGrid& grid, const ArimaSettings& settings) {
    if (grid.p_max < 0 || grid.d_max < 0 || grid.q_max < 0) {
        throw std::invalid_argument("auto_select: empty grid");
    }

    std::vector<Candidate> evaluated;
    std::set<std::tuple<int, int, int>> seen;
    const auto eval = [&](int p, int d, int q) {
        if (p < 0 || p > grid.p_max || d < 0 || d > grid.d_max || q < 0 ||
            q > grid.q_max) {
            return;
        }
        if (!seen.insert({p, d, q}).second) {
            return;
        }
        if (auto cand = evaluate_candidate(y, covariates, ArimaOrder{p, d, q},
                                           grid.d_max, settings)) {
            evaluated.push_back(*cand);
        }
    };

    if (settings.exhaustive) {
        for (int d = 0; d <= grid.d_max; ++d) {
            for (int p = 0; p <= grid.p_max; ++p) {
                for (int q = 0; q <= grid.q_max; ++q) {
                    eval(p, d, q);
                }
            }
        }
    } else {
        // stepwise neighborhood walk: start from the usual seed models at
        // every d, then explore around the incumbent until it stops moving
        for (int d = 0; d <= grid.d_max; ++d) {
            eval(0, d, 0);
            eval(1, d, 0);
            eval(0, d, 1);
            eval(std::min(2, grid.p_max), d, std::min(2, grid.q_max));
        }
        const Candidate* incumbent = pick_candidate(evaluated);
        while (incumbent) {
            const ArimaOrder at = incumbent->order;
            for (int dp = -1; dp <= 1; ++dp) {
                for (int dq = -1; dq <= 1; ++dq) {
                    eval(at.p + dp, at.d, at.q + dq);
                }
            }
            eval(at.p, at.d - 1, at.q);
            eval(at.p, at.d + 1, at.q);
            const Candidate* next = pick_candidate(evaluated);
            if (next == nullptr ||
                (next->order.p == at.p && next->order.d == at.d &&
                 next->order.q == at.q)) {
                break;
            }
            incumbent = next;
        }
    }

    const Candidate* best = pick_candidate(evaluated);
    if (!best) {
        throw ArimaError("auto_select: no grid point converged");
    }
    try {
        return fit_arima(y, best->order, covariates, settings);
    } catch (ArimaConvergenceError& e) {
        // the scanned fit converged under the CSS objective; fall back to it
        return std::move(e.best_fit);
    }
}

ForecastResult forecast_arima(const ArimaFit& fit, int horizon,
                              const Eigen::MatrixXd* future_covariates) {
    if (horizon < 1) {
        throw std::invalid_argument("forecast horizon must be >= 1");
    }
    const int ncov = static_cast<int>(fit.beta.size());
    if (ncov > 0) {
        if (!future_covariates || future_covariates->rows() != horizon ||
            future_covariates->cols() != ncov) {
            throw ArimaError(
                "forecast requires future covariates with horizon rows");
        }
    }

    const ArmaStateSpace ss = make_state_space(fit.ar, fit.ma);
    VectorXd a = fit.state;
    if (a.size() != ss.m) {
        throw ArimaError("fit carries no forecasting state");
    }

    ForecastResult result;
    result.horizon = horizon;
    result.point.resize(static_cast<std::size_t>(horizon));
    std::vector<double> tail = fit.integration_tail;
    for (int h = 0; h < horizon; ++h) {
        a = ss.T * a;
        double dw = a(0) + fit.intercept;  // forecast of delta^d eta
        // integrate back through the retained partial differences
        for (int j = fit.order.d - 1; j >= 0; --j) {
            tail[static_cast<std::size_t>(j)] += dw;
            dw = tail[static_cast<std::size_t>(j)];
        }
        double value = dw;
        if (ncov > 0) {
            const Eigen::Map<const VectorXd> beta(fit.beta.data(), ncov);
            value += future_covariates->row(h) * beta;
        }
        result.point[static_cast<std::size_t>(h)] = value;
    }
    return result;
}

std::string arima_fit_to_json(const ArimaFit& fit,
                              std::span<const std::string> covariate_labels) {
    nlohmann::json j;
    j["order"] = {{"p", fit.order.p}, {"d", fit.order.d}, {"q", fit.order.q}};
    j["ar"] = fit.ar;
    j["ma"] = fit.ma;
    j["beta"] = fit.beta;
    j["intercept"] = fit.intercept;
    j["sigma2"] = fit.sigma2;
    j["loglik"] = fit.loglik;
    j["aic"] = fit.aic;
    j["n_obs"] = fit.n_obs;
    j["state"] = std::vector<double>(fit.state.data(),
                                     fit.state.data() + fit.state.size());
    j["integration_tail"] = fit.integration_tail;
    if (!covariate_labels.empty()) {
        j["covariates"] =
            std::vector<std::string>(covariate_labels.begin(),
                                     covariate_labels.end());
    }
    return j.dump(2) + "\n";
}

ArimaFit arima_fit_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ArimaFit fit;
    fit.order.p = j.at("order").at("p").get<int>();
    fit.order.d = j.at("order").at("d").get<int>();
    fit.order.q = j.at("order").at("q").get<int>();
    fit.ar = j.at("ar").get<std::vector<double>>();
    fit.ma = j.at("ma").get<std::vector<double>>();
    fit.beta = j.at("beta").get<std::vector<double>>();
    fit.intercept = j.at("intercept").get<double>();
    fit.sigma2 = j.at("sigma2").get<double>();
    fit.loglik = j.at("loglik").get<double>();
    fit.aic = j.at("aic").get<double>();
    fit.n_obs = j.at("n_obs").get<int>();
    const auto state = j.at("state").get<std::vector<double>>();
    fit.state = Eigen::Map<const VectorXd>(
        state.data(), static_cast<Eigen::Index>(state.size()));
    fit.integration_tail = j.at("integration_tail").get<std::vector<double>>();
    return fit;
}

}  // namespace sentipulse
