#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "hyperzeno/model.hpp"

namespace hz::test {

using cplx = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n) : x(n), w(n) {
        for (int i = 0; i < n; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double step = p1 / dp;
                t -= step;
                if (std::abs(step) < 1e-16) break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }

    template <class F>
    auto integrate(F&& f, double a, double b) const -> decltype(f(a)) {
        decltype(f(a)) s{};
        const double h = 0.5 * (b - a), m = 0.5 * (a + b);
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(m + h * x[i]);
        return s * h;
    }
};

inline double rel_err(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline double rel_err(cplx a, cplx b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Small, fully generic parameter point: every coupling and amplitude nonzero,
// all mismatches distinct.
inline SystemParams generic_params(double scale = 1.0) {
    SystemParams p;
    p.g = 0.7 * scale;
    p.chi = 0.9 * scale;
    p.gamma_probe = {0.8 * scale, 0.6 * scale};
    p.lambda_probe = {0.5 * scale, 0.4 * scale};
    p.omega_probe = {0.3 * scale, 0.45 * scale};
    p.k = {0.31, -0.17, 0.43, 0.12, 0.91, 0.26, 1.37};
    const double mags[] = {1.3, 0.8, 1.7, 1.1, 0.9, 0.6, 1.2};
    const double phases[] = {0.2, -1.1, 0.7, 2.3, -0.4, 1.6, -2.8};
    for (Mode m : kAllModes) p.a(m) = {mags[idx(m)], phases[idx(m)]};
    return p;
}

}  // namespace hz::test
