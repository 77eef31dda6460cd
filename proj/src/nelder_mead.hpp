#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace sentipulse::detail {

struct NelderMeadResult {
    Eigen::VectorXd x;
    double fx = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Derivative-free simplex minimizer (standard reflect/expand/contract/
/// shrink coefficients). Converged when both the simplex diameter and the
/// objective spread fall under their tolerances.
inline NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, double step, int max_iterations,
    double param_tol, double objective_tol) {
    const int n = static_cast<int>(x0.size());
    NelderMeadResult result;
    if (n == 0) {
        result.x = x0;
        result.fx = f(x0);
        result.converged = true;
        return result;
    }

    std::vector<Eigen::VectorXd> verts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (int i = 0; i < n; ++i) {
        verts[i + 1](i) += step * std::max(1.0, std::abs(x0(i)));
    }
    for (int i = 0; i <= n; ++i) {
        fv[i] = f(verts[i]);
    }

    std::vector<int> idx(n + 1);
    for (int it = 0; it < max_iterations; ++it) {
        result.iterations = it;
        for (int i = 0; i <= n; ++i) {
            idx[i] = i;
        }
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return fv[a] < fv[b]; });
        const int best = idx[0];
        const int worst = idx[n];
        const int second_worst = idx[n - 1];

        double diameter = 0.0;
        for (int i = 0; i <= n; ++i) {
            diameter = std::max(
                diameter, (verts[i] - verts[best]).cwiseAbs().maxCoeff());
        }
        if (diameter < param_tol &&
            std::abs(fv[worst] - fv[best]) < objective_tol) {
            result.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i) {
            if (i != worst) {
                centroid += verts[i];
            }
        }
        centroid /= n;

        const Eigen::VectorXd reflected = centroid + (centroid - verts[worst]);
        const double fr = f(reflected);
        if (fr < fv[best]) {
            const Eigen::VectorXd expanded =
                centroid + 2.0 * (centroid - verts[worst]);
            const double fe = f(expanded);
            if (fe < fr) {
                verts[worst] = expanded;
                fv[worst] = fe;
            } else {
                verts[worst] = reflected;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second_worst]) {
            verts[worst] = reflected;
            fv[worst] = fr;
            continue;
        }
        const Eigen::VectorXd contracted =
            centroid + 0.5 * (verts[worst] - centroid);
        const double fc = f(contracted);
        if (fc < fv[worst]) {
            verts[worst] = contracted;
            fv[worst] = fc;
            continue;
        }
        for (int i = 0; i <= n; ++i) {  // shrink toward the best vertex
            if (i == best) {
                continue;
            }
            verts[i] = verts[best] + 0.5 * (verts[i] - verts[best]);
            fv[i] = f(verts[i]);
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i) {
        if (fv[i] < fv[best]) {
            best = i;
        }
    }
    result.x = verts[best];
    result.fx = fv[best];
    return result;
}

}  // namespace sentipulse::detail
