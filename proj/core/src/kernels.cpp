#include "hyperzeno/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hz::kernel {

namespace {

constexpr cplx I{0.0, 1.0};

// e^w - 1 without cancellation for small |w|.
cplx expm1_c(cplx w) {
    const double s = std::sin(0.5 * w.imag());
    return {std::expm1(w.real()) * std::cos(w.imag()) - 2.0 * s * s, std::exp(w.real()) * std::sin(w.imag())};
}

// e^x phi1(y - x)
cplx exp_dd2(cplx x, cplx y) { return std::exp(x) * phi1(y - x); }

// d/dt sinc(sqrt(t)), t >= 0
double sinc_sqrt_deriv(double t) {
    if (t < 1e-2) {
        return -1.0 / 6.0 + t * (1.0 / 60.0 + t * (-1.0 / 1680.0 + t * (1.0 / 90720.0 - t / 7983360.0)));
    }
    const double s = std::sqrt(t);
    return (std::cos(s) - std::sin(s) / s) / (2.0 * t);
}

// Divided difference of sinc(sqrt(t)) over {t1, t2}.
double sinc_sqrt_dd(double t1, double t2) {
    const double h = t2 - t1;
    if (std::abs(h) > 1e-2) return (sinc(std::sqrt(t2)) - sinc(std::sqrt(t1))) / h;
    // Mean of the derivative over the segment, 5-point Gauss-Legendre.
    static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831,
                                             -0.9061798459386640, 0.9061798459386640};
    static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665,
                                             0.4786286704993665, 0.2369268850561891,
                                             0.2369268850561891};
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += w[i] * sinc_sqrt_deriv(t1 + 0.5 * (1.0 + x[i]) * h);
    return 0.5 * acc;
}

}  // namespace

cplx phi1(cplx w) {
    if (std::abs(w) < kSeriesThreshold) return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0));
    return expm1_c(w) / w;
}

cplx exp_dd_series(cplx a, cplx b) {
    // sum_n h_n(a, b) / (n+2)!, h_n complete homogeneous of degree n:
    // h_n = a h_{n-1} + b^n.
    cplx h = 1.0, bn = 1.0, sum = 0.5;
    double fact = 2.0;
    for (int n = 1; n < 40; ++n) {
        bn *= b;
        h = a * h + bn;
        fact *= n + 2;
        const cplx term = h / fact;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

cplx exp_dd(cplx a, cplx b) {
    const double sab = std::abs(b - a), sb = std::abs(b), sa = std::abs(a);
    const double widest = std::max({sab, sb, sa});
    if (widest < kDividedSeriesRadius) return exp_dd_series(a, b);
    if (widest == sab) return (phi1(b) - phi1(a)) / (b - a);
    if (widest == sb) return (exp_dd2(a, b) - phi1(a)) / b;
    return (exp_dd2(b, a) - phi1(b)) / a;
}

cplx e1(double d, double z) { return I * z * phi1(-I * (d * z)); }

cplx k2(double d1, double d2, double z) {
    return -(z * z) * exp_dd(-I * (d1 * z), -I * ((d1 + d2) * z));
}

cplx e2(double d, double z) { return k2(d, -d, z); }

double sinc(double x) {
    if (std::abs(x) < kSeriesThreshold) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

double one_minus_cos(double d, double z) {
    const double s = sinc(0.5 * d * z);
    return 0.5 * z * z * s * s;
}

double half_sine(double d, double z) { return 0.5 * z * sinc(0.5 * d * z); }

double cos_sine_wronskian(double a, double b, double z) {
    const double u = 0.5 * (a + b) * z;
    const double w = 0.5 * (a - b) * z;
    return 0.5 * z * z * u * sinc_sqrt_dd(w * w, u * u);
}

}  // namespace hz::kernel
