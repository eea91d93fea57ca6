#include "hyperzeno/zeno.hpp"

#include <cmath>

#include "hyperzeno/coefficients.hpp"
#include "hyperzeno/expansion.hpp"
#include "hyperzeno/kernels.hpp"

namespace hz {

using kernel::k2;

namespace {
constexpr int iS = 0, iV = 1, iA = 2;

double mag(const SystemParams& p, Mode m) { return p.a(m).mag; }

// Re[K e^{-i psi}] / 2, the building block of every case formula.
double half_re(cplx k, double psi) { return 0.5 * (k * std::polar(1.0, -psi)).real(); }

ZenoReport make(ProbeScenario s, double z) {
    ZenoReport r;
    r.scenario = s;
    r.z = z;
    return r;
}
}  // namespace

std::string_view channel_name(Channel c) {
    constexpr std::array<std::string_view, 3> names{"S", "V", "A"};
    return names[static_cast<int>(c)];
}

Mode channel_mode(Channel c) {
    constexpr std::array<Mode, 3> modes{Mode::S, Mode::V, Mode::A};
    return modes[static_cast<int>(c)];
}

std::string_view effect_name(ZenoEffect e) {
    switch (e) {
    case ZenoEffect::QZE: return "QZE";
    case ZenoEffect::QAZE: return "QAZE";
    case ZenoEffect::Neutral: return "neutral";
    case ZenoEffect::NotApplicable: return "n/a";
    }
    return "?";
}

ZenoEffect classify_zeno(double Z, double tol) {
    if (Z < -tol) return ZenoEffect::QZE;
    if (Z > tol) return ZenoEffect::QAZE;
    return ZenoEffect::Neutral;
}

ZenoEffect ZenoReport::effect(Channel c) const {
    const int i = static_cast<int>(c);
    if (!applicable[i]) return ZenoEffect::NotApplicable;
    return classify_zeno(Z[i], tol);
}

std::array<bool, 3> applicable_channels(const SystemParams& p) {
    const bool stokes_probed = p.lambda_probe[0] != 0.0 || p.lambda_probe[1] != 0.0;
    const bool anti_probed = p.omega_probe[0] != 0.0 || p.omega_probe[1] != 0.0;
    return {!stokes_probed, true, !anti_probed};
}

CaseIStrengths case1_strengths(const SystemParams& p) {
    CaseIStrengths s;
    const double b = mag(p, Mode::S), c = mag(p, Mode::V), d = mag(p, Mode::A);
    for (int j = 0; j < 2; ++j) {
        const double common = 4.0 * p.gamma_probe[j] * mag(p, probe(j)) * mag(p, pump(partner(j))) * c;
        s.C[j] = p.g * common * b;
        s.D[j] = p.chi * common * d;
    }
    return s;
}

std::array<double, 2> stokes_probe_strengths(const SystemParams& p) {
    const double base = 4.0 * p.g * mag(p, Mode::L1) * mag(p, Mode::L2) * mag(p, Mode::V);
    return {base * p.lambda_probe[0] * mag(p, Mode::p1), base * p.lambda_probe[1] * mag(p, Mode::p2)};
}

std::array<double, 2> antistokes_probe_strengths(const SystemParams& p) {
    const double base = 4.0 * p.chi * mag(p, Mode::L1) * mag(p, Mode::L2) * mag(p, Mode::V);
    return {base * p.omega_probe[0] * mag(p, Mode::p1), base * p.omega_probe[1] * mag(p, Mode::p2)};
}

ZenoReport zeno_general(const SystemParams& params, double z, ProbeScenario s) {
    const SystemParams p = apply_scenario(params, s);
    return zeno_from_coefficients(p, coefficients(p, z), s);
}

ZenoReport zeno_from_coefficients(const SystemParams& p, const CoefficientSet& c, ProbeScenario s) {
    ZenoReport r = make(s, c.z);
    r.applicable = applicable_channels(p);
    const OperatorExpansion x = expand(c);
    const ModeArray<cplx> alpha = amplitudes(p);
    for (Channel c : kChannels) {
        const int i = static_cast<int>(c);
        if (!r.applicable[i]) continue;
        const ModeExpansion& e = x.of(channel_mode(c));
        r.Z[i] = two_point(e, e, alpha, PairFilter::ProbeOnly);
    }
    return r;
}

namespace {

// Stokes-channel term of probe j, i.e. C_j Z_Sj.
double stokes_pump_term(const DerivedPhases& d, double z, int j) {
    return half_re(k2(d.dk_S, d.dk_L[j], z), d.dtheta_S + d.dphi_L[j]);
}

double anti_pump_term(const DerivedPhases& d, double z, int j) {
    return half_re(k2(-d.dk_A, d.dk_L[j], z), d.dphi_L[j] - d.dtheta_A);
}

// Z_Sj with dk_L -> -dk_Sj and dphi_L -> -dphi_Sj.
double stokes_probe_term(const DerivedPhases& d, double z, int j) {
    return half_re(k2(d.dk_S, -d.dk_Sj[j], z), d.dtheta_S - d.dphi_S[j]);
}

double anti_probe_term(const DerivedPhases& d, double z, int j) {
    return half_re(k2(d.dk_A, d.dk_Aj[j], z), d.dtheta_A + d.dphi_A[j]);
}

}  // namespace

ZenoReport zeno_case1(const SystemParams& params, double z) {
    const SystemParams p = apply_scenario(params, ProbeScenario::PumpProbe);
    const DerivedPhases d = derive_phases(p);
    const CaseIStrengths st = case1_strengths(p);
    ZenoReport r = make(ProbeScenario::PumpProbe, z);
    for (int j = 0; j < 2; ++j) {
        r.Z[iS] += st.C[j] * stokes_pump_term(d, z, j);
        r.Z[iA] += st.D[j] * anti_pump_term(d, z, j);
    }
    r.Z[iV] = r.Z[iS] - r.Z[iA];
    return r;
}

ZenoReport zeno_case2(const SystemParams& params, double z) {
    const SystemParams p = apply_scenario(params, ProbeScenario::StokesProbe);
    const DerivedPhases d = derive_phases(p);
    const auto C = stokes_probe_strengths(p);
    ZenoReport r = make(ProbeScenario::StokesProbe, z);
    r.applicable = {false, true, true};
    for (int j = 0; j < 2; ++j) r.Z[iV] -= C[j] * stokes_probe_term(d, z, j);
    return r;
}

ZenoReport zeno_case3(const SystemParams& params, double z) {
    const SystemParams p = apply_scenario(params, ProbeScenario::AntiStokesProbe);
    const DerivedPhases d = derive_phases(p);
    const auto D = antistokes_probe_strengths(p);
    ZenoReport r = make(ProbeScenario::AntiStokesProbe, z);
    r.applicable = {true, true, false};
    for (int j = 0; j < 2; ++j) r.Z[iV] += D[j] * anti_probe_term(d, z, j);
    return r;
}

ZenoReport zeno_case4(const SystemParams& params, double z) {
    const SystemParams p = apply_scenario(params, ProbeScenario::SplitProbe);
    const DerivedPhases d = derive_phases(p);
    const auto C = stokes_probe_strengths(p);
    const auto D = antistokes_probe_strengths(p);
    ZenoReport r = make(ProbeScenario::SplitProbe, z);
    r.applicable = {false, true, false};
    r.Z[iV] = -C[0] * stokes_probe_term(d, z, 0) + D[1] * anti_probe_term(d, z, 1);
    return r;
}

ZenoReport zeno_phase_matched(const SystemParams& params, double z, ProbeScenario s) {
    const SystemParams p = apply_scenario(params, s);
    const DerivedPhases d = derive_phases(p);
    const double q = 0.25 * z * z;
    ZenoReport r = make(s, z);
    switch (s) {
    case ProbeScenario::PumpProbe: {
        const CaseIStrengths st = case1_strengths(p);
        for (int j = 0; j < 2; ++j) {
            r.Z[iS] -= q * st.C[j] * std::cos(d.dtheta_S + d.dphi_L[j]);
            r.Z[iA] -= q * st.D[j] * std::cos(d.dtheta_A - d.dphi_L[j]);
        }
        r.Z[iV] = r.Z[iS] - r.Z[iA];
        break;
    }
    case ProbeScenario::StokesProbe: {
        const auto C = stokes_probe_strengths(p);
        r.applicable = {false, true, true};
        for (int j = 0; j < 2; ++j) r.Z[iV] += q * C[j] * std::cos(d.dtheta_S - d.dphi_S[j]);
        break;
    }
    case ProbeScenario::AntiStokesProbe: {
        const auto D = antistokes_probe_strengths(p);
        r.applicable = {true, true, false};
        for (int j = 0; j < 2; ++j) r.Z[iV] -= q * D[j] * std::cos(d.dtheta_A + d.dphi_A[j]);
        break;
    }
    case ProbeScenario::SplitProbe: {
        const auto C = stokes_probe_strengths(p);
        const auto D = antistokes_probe_strengths(p);
        r.applicable = {false, true, false};
        r.Z[iV] = q * C[0] * std::cos(d.dtheta_S - d.dphi_S[0]) -
                  q * D[1] * std::cos(d.dtheta_A + d.dphi_A[1]);
        break;
    }
    case ProbeScenario::General:
        return zeno_general(p, z, s);
    }
    return r;
}

SystemParams impose_special_mismatch(const SystemParams& params, double dk_S) {
    SystemParams p = params;
    auto& k = p.k;
    const double kL = k[idx(Mode::L1)] + k[idx(Mode::L2)];
    k[idx(Mode::S)] = kL - k[idx(Mode::V)] + dk_S;
    k[idx(Mode::A)] = kL + k[idx(Mode::V)] + dk_S;
    for (int j = 0; j < 2; ++j) k[idx(probe(j))] = k[idx(pump(j))] - dk_S;
    return p;
}

ZenoReport zeno_case1_special_mismatch(const SystemParams& params, double z, double dk_S) {
    const SystemParams p = apply_scenario(impose_special_mismatch(params, dk_S), ProbeScenario::PumpProbe);
    const DerivedPhases d = derive_phases(p);
    const CaseIStrengths st = case1_strengths(p);
    const double x = dk_S * z;
    const double s = kernel::sinc(0.5 * x);
    const double envelope = 0.25 * z * z * s * s;
    ZenoReport r = make(ProbeScenario::PumpProbe, z);
    for (int j = 0; j < 2; ++j) {
        r.Z[iS] -= envelope * st.C[j] * std::cos(x + d.dtheta_S + d.dphi_L[j]);
        r.Z[iA] -= envelope * st.D[j] * std::cos(x - d.dtheta_A + d.dphi_L[j]);
    }
    r.Z[iV] = r.Z[iS] - r.Z[iA];
    return r;
}

ZenoReport zeno(const SystemParams& p, double z, ProbeScenario s) {
    switch (s) {
    case ProbeScenario::PumpProbe: return zeno_case1(p, z);
    case ProbeScenario::StokesProbe: return zeno_case2(p, z);
    case ProbeScenario::AntiStokesProbe: return zeno_case3(p, z);
    case ProbeScenario::SplitProbe: return zeno_case4(p, z);
    case ProbeScenario::General: break;
    }
    return zeno_general(p, z, s);
}

}  // namespace hz
