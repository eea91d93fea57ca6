#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hyperzeno/kernels.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::kernel;
using hz::test::GaussLegendre;
using hz::test::rel_err;

namespace {

const GaussLegendre gl(48);

// Independent definitions as integrals; no closed forms involved.
cplx e1_quad(double d, double z) {
    return gl.integrate([&](double s) { return cplx(0, 1) * std::exp(cplx(0, -d * s)); }, 0.0, z);
}

cplx k2_quad(double d1, double d2, double z) {
    return -gl.integrate(
        [&](double s) {
            return gl.integrate([&](double t) { return std::exp(cplx(0, -d1 * s - d2 * t)); }, 0.0, s);
        },
        0.0, z);
}

double omc_quad(double d, double z) {
    return gl.integrate([&](double s) { return d == 0.0 ? s : std::sin(d * s) / d; }, 0.0, z);
}

double half_sine_quad(double d, double z) {
    return gl.integrate([&](double s) { return std::cos(d * s); }, 0.0, 0.5 * z);
}

const double mismatches[] = {0.0, 1e-9, -3e-6, 2e-4, -0.7, 1.3, 4.1, -6.0};
const double lengths[] = {0.0, 0.05, 0.5, 1.0, 1.7};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("e1 matches its defining integral") {
    for (double d : mismatches)
        for (double z : lengths) {
            CAPTURE(d);
            CAPTURE(z);
            CHECK(std::abs(e1(d, z) - e1_quad(d, z)) <= 1e-13 * (1.0 + std::abs(z)));
        }
}

TEST_CASE("k2 matches its defining double integral") {
    for (double d1 : mismatches)
        for (double d2 : mismatches)
            for (double z : {0.3, 1.0, 1.6}) {
                CAPTURE(d1);
                CAPTURE(d2);
                CAPTURE(z);
                CHECK(std::abs(k2(d1, d2, z) - k2_quad(d1, d2, z)) <= 1e-12 * z * z);
            }
}

TEST_CASE("k2 is the divided difference of e1") {
    const double z = 1.3;
    for (double d1 : {0.4, -1.2, 2.5})
        for (double d2 : {0.9, -0.35, 3.1}) {
            const cplx dd = (e1(d1, z) - e1(d1 + d2, z)) / d2;
            CHECK(rel_err(k2(d1, d2, z), dd) < 1e-12);
        }
}

TEST_CASE("doubly degenerate k2 branches") {
    // d1 -> 0 and d1 + d2 -> 0 at the same time.
    const double z = 0.8;
    for (double eps : {1e-7, 1e-10, 0.0}) {
        CHECK(std::abs(k2(eps, -eps, z) - k2_quad(eps, -eps, z)) < 1e-13);
        CHECK(std::abs(k2(eps, 0.0, z) - cplx(-0.5 * z * z, 0.0)) < 1e-6);
    }
}

TEST_CASE("e2 equals k2 with opposite mismatches") {
    for (double d : mismatches) CHECK(std::abs(e2(d, 1.1) - k2(d, -d, 1.1)) < 1e-14);
}

TEST_CASE("small-mismatch limits") {
    const double z = 0.9;
    CHECK(std::abs(e1(0.0, z) - cplx(0.0, z)) < 1e-15);
    CHECK(std::abs(e1(1e-12, z) - cplx(0.0, z)) < 1e-12);
    CHECK(std::abs(k2(0.0, 0.0, z) - cplx(-0.5 * z * z, 0.0)) < 1e-15);
    CHECK(one_minus_cos(0.0, z) == doctest::Approx(0.5 * z * z).epsilon(1e-15));
    CHECK(half_sine(0.0, z) == doctest::Approx(0.5 * z).epsilon(1e-15));
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(phi1(cplx(0.0, 0.0)) - 1.0) == 0.0);
}

TEST_CASE("real kernels match quadrature") {
    for (double d : mismatches)
        for (double z : lengths) {
            CHECK(std::abs(one_minus_cos(d, z) - omc_quad(d, z)) < 1e-13);
            CHECK(std::abs(half_sine(d, z) - half_sine_quad(d, z)) < 1e-13);
        }
}

TEST_CASE("cos-sine Wronskian against its printed quotient") {
    const double z = 1.4;
    auto direct = [&](double a, double b) {
        return (std::cos(a * z / 2) * std::sin(b * z / 2) / b - std::cos(b * z / 2) * std::sin(a * z / 2) / a) /
               (a - b);
    };
    for (double a : {0.5, -1.3, 2.2})
        for (double b : {0.8, -0.6, 3.0}) CHECK(rel_err(cos_sine_wronskian(a, b, z), direct(a, b)) < 1e-10);
    // Continuous through the coincident and vanishing arguments.
    CHECK(cos_sine_wronskian(0.7, 0.7 + 1e-9, z) == doctest::Approx(cos_sine_wronskian(0.7, 0.7, z)).epsilon(1e-7));
    CHECK(cos_sine_wronskian(1e-9, 0.9, z) == doctest::Approx(cos_sine_wronskian(0.0, 0.9, z)).epsilon(1e-7));
    CHECK(cos_sine_wronskian(1e-9, -1e-9, z) == doctest::Approx(cos_sine_wronskian(0.0, 0.0, z)).epsilon(1e-7));
}

TEST_CASE("series and direct branches agree across the threshold") {
    const double z = 1.0;
    for (double side : {0.5, 0.999, 1.001, 2.0}) {
        const double d = side * kSeriesThreshold;
        CAPTURE(d);
        CHECK(std::abs(e1(d, z) - e1_quad(d, z)) < 1e-14);
        CHECK(std::abs(k2(d, 0.3, z) - k2_quad(d, 0.3, z)) < 1e-13);
        CHECK(std::abs(k2(0.3, d - 0.3, z) - k2_quad(0.3, d - 0.3, z)) < 1e-13);
        CHECK(std::abs(one_minus_cos(d, z) - omc_quad(d, z)) < 1e-15);
        CHECK(std::abs(half_sine(d, z) - half_sine_quad(d, z)) < 1e-15);
    }
    for (double r : {0.3, 0.99, 1.01, 3.0}) {
        const cplx w(0.0, r * kSeriesThreshold);
        const cplx direct = (std::exp(w) - 1.0) / w;
        CHECK(std::abs(phi1(w) - direct) < 1e-11);
    }
    const cplx a(0.0, 2e-5), b(0.0, -7e-5);
    CHECK(std::abs(exp_dd(a, b) - exp_dd_series(a, b)) < 1e-15);
}

TEST_CASE("second divided difference across the series radius") {
    const double z = 1.0;
    for (double side : {0.9, 0.999, 1.001, 1.1})
        for (double mix : {-0.6, 0.0, 0.3}) {
            const double d2 = side * kDividedSeriesRadius;
            CAPTURE(side);
            CAPTURE(mix);
            CHECK(std::abs(k2(mix * d2, d2 - mix * d2, z) - k2_quad(mix * d2, d2 - mix * d2, z)) < 2e-15);
            CHECK(std::abs(k2(d2, -mix * d2, z) - k2_quad(d2, -mix * d2, z)) < 2e-15);
        }
}

TEST_CASE("kernels stay bounded on a compact length interval") {
    for (double d = -50.0; d <= 50.0; d += 0.37)
        for (double z = 0.0; z <= 2.0; z += 0.25) {
            CHECK(std::abs(e1(d, z)) <= z + 1e-12);
            CHECK(std::abs(k2(d, 0.5 * d, z)) <= 0.5 * z * z + 1e-12);
        }
}

}  // TEST_SUITE
