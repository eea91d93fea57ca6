#pragma once

#include <complex>

// Phase kernels shared by the coefficient tables, the Zeno closed forms and the
// photon-statistics expressions. Every kernel is entire in its mismatch
// arguments; removable singularities switch to truncated Taylor series once
// the dimensionless separation drops below kSeriesThreshold.
namespace hz::kernel {

using cplx = std::complex<double>;

inline constexpr double kSeriesThreshold = 1e-4;
// exp_dd sums its Taylor series whenever all three nodes lie this close.
inline constexpr double kDividedSeriesRadius = 0.5;

// (e^w - 1)/w
cplx phi1(cplx w);

// Second divided difference of exp over the nodes {0, a, b}.
cplx exp_dd(cplx a, cplx b);

// Taylor series of exp_dd, summed to convergence (meant for |a|, |b| <~ 1).
cplx exp_dd_series(cplx a, cplx b);

// (1 - e^{-i z d}) / d, limit i z.
cplx e1(double d, double z);

// (d1 e^{-iz(d1+d2)} - (d1+d2) e^{-iz d1} + d2) / (d1 (d1+d2) d2), limit -z^2/2.
// Equivalently [e1(d1) - e1(d1+d2)] / d2.
cplx k2(double d1, double d2, double z);

// (e^{-iz d} + i z d - 1) / d^2 = k2(d, -d), limit -z^2/2.
cplx e2(double d, double z);

double sinc(double x);

// (1 - cos(d z)) / d^2, limit z^2/2.
double one_minus_cos(double d, double z);

// sin(d z / 2) / d, limit z/2.
double half_sine(double d, double z);

// [cos(a z/2) sin(b z/2)/b - cos(b z/2) sin(a z/2)/a] / (a - b), entire in (a, b).
double cos_sine_wronskian(double a, double b, double z);

}  // namespace hz::kernel
