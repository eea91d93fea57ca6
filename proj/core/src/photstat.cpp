#include "hyperzeno/photstat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperzeno/coefficients.hpp"
#include "hyperzeno/expansion.hpp"
#include "hyperzeno/kernels.hpp"

namespace hz {

using kernel::cos_sine_wronskian;
using kernel::e1;
using kernel::half_sine;
using kernel::k2;
using kernel::one_minus_cos;

std::string_view stat_name(StatKey k) {
    constexpr std::array<std::string_view, 6> names{"S", "V", "A", "SV", "SA", "VA"};
    return names[static_cast<int>(k)];
}

std::string_view bunching_name(Bunching b) {
    switch (b) {
    case Bunching::Antibunched: return "antibunched";
    case Bunching::Unbunched: return "unbunched";
    case Bunching::Bunched: return "bunched";
    }
    return "?";
}

std::string_view source_name(StatSource s) {
    switch (s) {
    case StatSource::ClosedForm: return "closed-form";
    case StatSource::Expansion: return "expansion";
    case StatSource::Oracle: return "oracle";
    }
    return "?";
}

Bunching classify_bunching(double D, double tol) {
    if (D < -tol) return Bunching::Antibunched;
    if (D > tol) return Bunching::Bunched;
    return Bunching::Unbunched;
}

namespace {

struct Mags {
    double p1, p2, L1, L2, b, c, d;
    double SL;  // |aL1|^2 + |aL2|^2 + 1
};

Mags mags(const SystemParams& p) {
    Mags m{p.a(Mode::p1).mag, p.a(Mode::p2).mag, p.a(Mode::L1).mag, p.a(Mode::L2).mag,
           p.a(Mode::S).mag,  p.a(Mode::V).mag,  p.a(Mode::A).mag,  0.0};
    m.SL = m.L1 * m.L1 + m.L2 * m.L2 + 1.0;
    return m;
}

double d_stokes(const SystemParams& p, const DerivedPhases& d, const Mags& m, double z) {
    return 4.0 * p.g * p.g * one_minus_cos(d.dk_S, z) * m.L1 * m.L1 * m.L2 * m.L2 * m.b * m.b;
}

double d_phonon(const SystemParams& p, const DerivedPhases& d, const Mags& m, double z) {
    const double g = p.g, chi = p.chi, a = d.dk_S, ap = d.dk_A;
    const double th = d.dtheta_S + d.dtheta_A;
    const double mixed = g * chi * m.SL * m.b * m.c * m.c * m.d;
    double r = 8.0 * g * g * m.L1 * m.L1 * m.L2 * m.L2 * m.c * m.c * one_minus_cos(a, z);
    r += 8.0 * chi * chi * m.c * m.c * m.d * m.d * m.SL * one_minus_cos(ap, z);
    r -= 8.0 * mixed * std::cos(th + 0.5 * (a + ap) * z) * half_sine(a, z) * half_sine(ap, z);
    r += 8.0 * mixed * std::sin(th - 0.5 * (a + ap) * z) * cos_sine_wronskian(a, -ap, z);
    return r;
}

double d_stokes_phonon(const SystemParams& p, const DerivedPhases& d, const Mags& m, double z) {
    const double g = p.g, chi = p.chi, a = d.dk_S, ap = d.dk_A;
    const double L1s = m.L1 * m.L1, L2s = m.L2 * m.L2, bs = m.b * m.b, cs = m.c * m.c;
    const double bracket = L1s * L2s * (2.0 * cs + 1.0) - (L1s + 1.0) * bs * cs + (L1s - cs) * L2s * bs;
    double r = 2.0 * g * g * bracket * one_minus_cos(a, z);
    r += 4.0 * g * m.L1 * m.L2 * m.b * m.c * std::sin(d.dtheta_S + 0.5 * a * z) * half_sine(a, z);
    r += 4.0 * g * chi * m.b * cs * m.d * m.SL *
         (std::polar(1.0, d.dtheta_S + d.dtheta_A) * k2(a, ap, z)).real();
    const std::array<double, 2> pm{m.p1, m.p2};
    const std::array<double, 2> partner_pump{m.L2, m.L1};
    for (int j = 0; j < 2; ++j) {
        const double s = d.dk_Sj[j];
        r += 8.0 * g * p.lambda_probe[j] * pm[j] * m.L1 * m.L2 * m.c *
             std::cos(d.dtheta_S - d.dphi_S[j] - 0.5 * (s - a) * z) * half_sine(s, z) * half_sine(a, z);
        r += g * p.gamma_probe[j] * pm[j] * partner_pump[j] * m.b * m.c *
             (std::polar(1.0, d.dtheta_S + d.dphi_L[j]) * k2(a, d.dk_L[j], z)).real();
    }
    r += 8.0 * g * chi * L1s * L2s * m.b * m.d * std::cos(d.dtheta_S - d.dtheta_A + 0.5 * (a - ap) * z) *
         half_sine(a, z) * half_sine(ap, z);
    return r;
}

double d_stokes_anti(const SystemParams& p, const DerivedPhases& d, const Mags& m, double z) {
    const cplx x = e1(d.dk_S, z) * e1(-d.dk_A, z) - k2(d.dk_S, -d.dk_A, z);
    const double amp = 2.0 * p.g * p.chi * m.L1 * m.L1 * m.L2 * m.L2 * m.b * m.d;
    return amp * (std::polar(1.0, d.dtheta_S - d.dtheta_A) * std::conj(x)).real();
}

double d_phonon_anti(const SystemParams& p, const DerivedPhases& d, const Mags& m, double z) {
    return -2.0 * p.chi * p.chi * m.SL * m.c * m.c * m.d * m.d * one_minus_cos(d.dk_A, z);
}

}  // namespace

std::array<double, 3> d_single(const SystemParams& p, double z) {
    const DerivedPhases d = derive_phases(p);
    const Mags m = mags(p);
    return {d_stokes(p, d, m, z), d_phonon(p, d, m, z), 0.0};
}

std::array<double, 3> d_pair(const SystemParams& p, double z) {
    const DerivedPhases d = derive_phases(p);
    const Mags m = mags(p);
    return {d_stokes_phonon(p, d, m, z), d_stokes_anti(p, d, m, z), d_phonon_anti(p, d, m, z)};
}

StatSet d_closed_form(const SystemParams& p, double z) {
    const auto s = d_single(p, z);
    const auto q = d_pair(p, z);
    return StatSet{{s[0], s[1], s[2], q[0], q[1], q[2]}};
}

StatSet d_expansion(const SystemParams& p, double z) {
    const OperatorExpansion x = expand(coefficients(p, z));
    const ModeArray<cplx> alpha = amplitudes(p);
    StatSet r;
    r[StatKey::S] = connected_four_point(x.S, x.S, alpha);
    r[StatKey::V] = connected_four_point(x.V, x.V, alpha);
    r[StatKey::A] = connected_four_point(x.A, x.A, alpha);
    r[StatKey::SV] = connected_four_point(x.S, x.V, alpha);
    r[StatKey::SA] = connected_four_point(x.S, x.A, alpha);
    r[StatKey::VA] = connected_four_point(x.V, x.A, alpha);
    return r;
}

double mean_number(const SystemParams& p, double z, Mode mode) {
    const OperatorExpansion x = expand(coefficients(p, z));
    const ModeExpansion& e = x.of(mode);
    return two_point(e, e, amplitudes(p));
}

double g2_normalize(double D, double n_i, double n_j, double tol) {
    if (n_i <= tol || n_j <= tol)
        throw std::domain_error("g2_normalize: mean number " + std::to_string(n_i <= tol ? n_i : n_j) +
                                " is not positive; the second-order expansion is outside its range");
    return 1.0 + D / (n_i * n_j);
}

StatReport stat_report(const SystemParams& p, double z, StatSource source, bool with_g2) {
    StatReport r;
    r.z = z;
    r.source = source;
    r.D = source == StatSource::ClosedForm ? d_closed_form(p, z) : d_expansion(p, z);
    if (with_g2) {
        const OperatorExpansion x = expand(coefficients(p, z));
        const ModeArray<cplx> alpha = amplitudes(p);
        r.mean = {two_point(x.S, x.S, alpha), two_point(x.V, x.V, alpha), two_point(x.A, x.A, alpha)};
        const double nS = r.mean[0], nV = r.mean[1], nA = r.mean[2];
        StatSet g;
        g[StatKey::S] = g2_normalize(r.D[StatKey::S], nS, nS);
        g[StatKey::V] = g2_normalize(r.D[StatKey::V], nV, nV);
        g[StatKey::A] = g2_normalize(r.D[StatKey::A], nA, nA);
        g[StatKey::SV] = g2_normalize(r.D[StatKey::SV], nS, nV);
        g[StatKey::SA] = g2_normalize(r.D[StatKey::SA], nS, nA);
        g[StatKey::VA] = g2_normalize(r.D[StatKey::VA], nV, nA);
        r.g2 = g;
    }
    return r;
}

}  // namespace hz
