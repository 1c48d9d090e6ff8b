#include "polyquant/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace polyquant {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    NelderMeadResult result;
    if (n == 0) {
        result.x = std::move(x0);
        result.value = f(result.x);
        result.converged = true;
        return result;
    }

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        s2.reserve(n + 1);
        v2.reserve(n + 1);
        for (std::size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(values[i]);
        }
        simplex.swap(s2);
        values.swap(v2);
    };

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        order();
        double spread = std::abs(values[n] - values[0]);
        double edge = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            edge = std::max(edge, std::abs(simplex[n][i] - simplex[0][i]));
        if (spread <= opts.ftol && edge <= opts.xtol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i] / n;

        auto interpolate = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = centroid[i] + coeff * (simplex[n][i] - centroid[i]);
            return p;
        };

        std::vector<double> reflected = interpolate(-1.0);
        double fr = f(reflected);
        if (fr < values[0]) {
            std::vector<double> expanded = interpolate(-2.0);
            double fe = f(expanded);
            if (fe < fr) {
                simplex[n] = std::move(expanded);
                values[n] = fe;
            } else {
                simplex[n] = std::move(reflected);
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            simplex[n] = std::move(reflected);
            values[n] = fr;
        } else {
            bool outside = fr < values[n];
            std::vector<double> contracted = interpolate(outside ? -0.5 : 0.5);
            double fc = f(contracted);
            if (fc < (outside ? fr : values[n])) {
                simplex[n] = std::move(contracted);
                values[n] = fc;
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t i = 0; i < n; ++i)
                        simplex[v][i] = simplex[0][i] + 0.5 * (simplex[v][i] - simplex[0][i]);
                    values[v] = f(simplex[v]);
                }
            }
        }
    }

    order();
    result.x = simplex[0];
    result.value = values[0];
    result.iterations = iter;
    return result;
}

void coordinate_polish(const Objective& f, std::vector<double>& x, int sweeps, double fd_step) {
    if (x.empty()) return;
    double fx = f(x);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::vector<double> probe = x;
            probe[i] = x[i] + fd_step;
            double fp = f(probe);
            probe[i] = x[i] - fd_step;
            double fm = f(probe);
            double grad = (fp - fm) / (2.0 * fd_step);
            double hess = (fp - 2.0 * fx + fm) / (fd_step * fd_step);
            if (!(hess > 0.0)) continue;
            double step = -grad / hess;
            step = std::clamp(step, -10.0 * fd_step, 10.0 * fd_step);
            probe[i] = x[i] + step;
            double ft = f(probe);
            if (ft < fx) {
                x = probe;
                fx = ft;
            }
        }
    }
}

std::vector<double> finite_difference_gradient(const Objective& f, const std::vector<double>& x,
                                               double h) {
    std::vector<double> grad(x.size());
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        double fp = f(probe);
        probe[i] = x[i] - h;
        double fm = f(probe);
        probe[i] = x[i];
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

double stationarity_residual(const Objective& f, const std::vector<double>& x, double h) {
    double r = 0.0;
    for (double g : finite_difference_gradient(f, x, h)) r = std::max(r, std::abs(g));
    return r;
}

}  // namespace polyquant
