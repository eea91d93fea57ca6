#include "hyperzeno/coefficients.hpp"

#include "hyperzeno/kernels.hpp"

namespace hz {

using kernel::e1;
using kernel::e2;
using kernel::k2;

namespace {
cplx carrier(double k, double z) { return std::polar(1.0, k * z); }
}  // namespace

StokesTable stokes_coefficients(const SystemParams& p, double z) {
    const DerivedPhases d = derive_phases(p);
    const double g = p.g, chi = p.chi;
    const double a = d.dk_S, ap = d.dk_A;
    const auto& G = p.gamma_probe;
    const auto& L = p.lambda_probe;
    const auto& O = p.omega_probe;

    StokesTable l{};
    l[1] = 1.0;
    l[2] = g * e1(a, z);
    l[3] = L[0] * e1(d.dk_Sj[0], z);
    l[4] = L[1] * e1(d.dk_Sj[1], z);
    l[5] = -g * chi * k2(a, -ap, z);
    l[6] = g * chi * k2(a, ap, z);
    l[7] = l[6];
    l[8] = g * G[0] * k2(a, d.dk_L[0], z);
    l[9] = g * G[1] * k2(a, d.dk_L[1], z);
    l[10] = G[0] * L[0] * k2(d.dk_Sj[0], -d.dk_L[0], z);
    l[11] = G[1] * L[1] * k2(d.dk_Sj[1], -d.dk_L[1], z);
    l[12] = L[0] * O[0] * k2(d.dk_Sj[0], -d.dk_Aj[0], z);
    // Probe-2 mirror of l12.
    l[13] = L[1] * O[1] * k2(d.dk_Sj[1], -d.dk_Aj[1], z);
    l[14] = -g * g * e2(a, z);
    l[15] = -l[14];
    l[16] = -l[14];
    l[17] = L[0] * L[0] * e2(d.dk_Sj[0], z);
    l[18] = L[1] * L[1] * e2(d.dk_Sj[1], z);

    const cplx ph = carrier(p.kk(Mode::S), z);
    for (std::size_t i = 1; i < l.size(); ++i) l[i] *= ph;
    return l;
}

PhononTable phonon_coefficients(const SystemParams& p, double z) {
    const DerivedPhases d = derive_phases(p);
    const double g = p.g, chi = p.chi;
    const double a = d.dk_S, ap = d.dk_A;
    const auto& G = p.gamma_probe;
    const auto& L = p.lambda_probe;
    const auto& O = p.omega_probe;

    PhononTable m{};
    m[1] = 1.0;
    m[2] = g * e1(a, z);
    m[3] = chi * e1(ap, z);
    m[4] = g * chi * (k2(a, ap, z) - k2(ap, a, z));
    m[5] = m[4];
    m[6] = m[4];
    m[7] = g * G[0] * k2(a, d.dk_L[0], z);
    m[8] = g * G[1] * k2(a, d.dk_L[1], z);
    m[9] = -g * L[0] * k2(a, -d.dk_Sj[0], z);
    m[10] = -g * L[1] * k2(a, -d.dk_Sj[1], z);
    m[11] = -chi * G[0] * k2(ap, -d.dk_L[0], z);
    m[12] = -chi * G[1] * k2(ap, -d.dk_L[1], z);
    m[13] = chi * O[0] * k2(ap, d.dk_Aj[0], z);
    m[14] = chi * O[1] * k2(ap, d.dk_Aj[1], z);
    m[15] = -g * g * e2(a, z);
    m[16] = -m[15];
    m[17] = -m[15];
    m[18] = chi * chi * e2(ap, z);
    m[19] = -m[18];
    m[20] = -m[18];

    const cplx ph = carrier(p.kk(Mode::V), z);
    for (std::size_t i = 1; i < m.size(); ++i) m[i] *= ph;
    return m;
}

AntiStokesTable antistokes_coefficients(const SystemParams& p, double z) {
    const DerivedPhases d = derive_phases(p);
    const double g = p.g, chi = p.chi;
    const double a = d.dk_S, ap = d.dk_A;
    const auto& G = p.gamma_probe;
    const auto& L = p.lambda_probe;
    const auto& O = p.omega_probe;

    AntiStokesTable n{};
    n[1] = 1.0;
    n[2] = chi * e1(-ap, z);
    n[3] = O[0] * e1(d.dk_Aj[0], z);
    n[4] = O[1] * e1(d.dk_Aj[1], z);
    n[5] = g * chi * k2(-ap, a, z);
    n[6] = g * chi * k2(-ap, -a, z);
    n[7] = n[6];
    n[8] = chi * G[0] * k2(-ap, d.dk_L[0], z);
    n[9] = chi * G[1] * k2(-ap, d.dk_L[1], z);
    n[10] = O[0] * G[0] * k2(d.dk_Aj[0], -d.dk_L[0], z);
    n[11] = O[1] * G[1] * k2(d.dk_Aj[1], -d.dk_L[1], z);
    n[12] = O[0] * L[0] * k2(d.dk_Aj[0], -d.dk_Sj[0], z);
    n[13] = O[1] * L[1] * k2(d.dk_Aj[1], -d.dk_Sj[1], z);
    n[14] = chi * chi * e2(-ap, z);
    n[15] = n[14];
    n[16] = n[14];
    n[17] = O[0] * O[0] * e2(d.dk_Aj[0], z);
    n[18] = O[1] * O[1] * e2(d.dk_Aj[1], z);

    const cplx ph = carrier(p.kk(Mode::A), z);
    for (std::size_t i = 1; i < n.size(); ++i) n[i] *= ph;
    return n;
}

CoefficientSet coefficients(const SystemParams& p, double z) {
    return {z, stokes_coefficients(p, z), phonon_coefficients(p, z), antistokes_coefficients(p, z)};
}

}  // namespace hz
