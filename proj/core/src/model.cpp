#include "hyperzeno/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hz {

namespace {
constexpr std::array<std::string_view, kModeCount> kModeNames{"p1", "p2", "L1", "L2", "S", "V", "A"};
constexpr std::array<std::string_view, 5> kScenarioNames{"pump", "stokes", "antistokes", "split",
                                                         "general"};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite parameter: ") + what);
}
}  // namespace

std::string_view mode_name(Mode m) { return kModeNames[idx(m)]; }

std::optional<Mode> mode_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kModeCount; ++i)
        if (kModeNames[i] == name) return static_cast<Mode>(i);
    return std::nullopt;
}

double canonical_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phi, two_pi);  // [-pi, pi]
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

double SystemParams::max_coupling() const {
    double m = std::max(std::abs(g), std::abs(chi));
    for (int j = 0; j < 2; ++j) {
        m = std::max(m, std::abs(gamma_probe[j]));
        m = std::max(m, std::abs(lambda_probe[j]));
        m = std::max(m, std::abs(omega_probe[j]));
    }
    return m;
}

SystemParams normalized(const SystemParams& p) {
    SystemParams q = p;
    require_finite(q.g, "g");
    require_finite(q.chi, "chi");
    for (int j = 0; j < 2; ++j) {
        require_finite(q.gamma_probe[j], "Gamma");
        require_finite(q.lambda_probe[j], "Lambda");
        require_finite(q.omega_probe[j], "Omega");
    }
    for (std::size_t i = 0; i < kModeCount; ++i) {
        require_finite(q.k[i], "k");
        auto& a = q.amp[i];
        require_finite(a.mag, "amp.mag");
        require_finite(a.phase, "amp.phase");
        if (a.mag < 0) {
            a.mag = -a.mag;
            a.phase += std::numbers::pi;
        }
        a.phase = canonical_phase(a.phase);
    }
    return q;
}

DerivedPhases derive_phases(const SystemParams& p) {
    DerivedPhases d;
    const auto k = [&](Mode m) { return p.kk(m); };
    const auto ph = [&](Mode m) { return p.a(m).phase; };
    d.dk_S = k(Mode::S) + k(Mode::V) - k(Mode::L1) - k(Mode::L2);
    d.dk_A = k(Mode::L1) + k(Mode::L2) + k(Mode::V) - k(Mode::A);
    d.dtheta_S = ph(Mode::S) + ph(Mode::V) - ph(Mode::L1) - ph(Mode::L2);
    d.dtheta_A = ph(Mode::L1) + ph(Mode::L2) + ph(Mode::V) - ph(Mode::A);
    for (int j = 0; j < 2; ++j) {
        d.dk_L[j] = k(pump(j)) - k(probe(j));
        d.dk_Sj[j] = k(Mode::S) - k(probe(j));
        d.dk_Aj[j] = k(Mode::A) - k(probe(j));
        d.dphi_L[j] = ph(pump(j)) - ph(probe(j));
        d.dphi_S[j] = ph(Mode::S) - ph(probe(j));
        d.dphi_A[j] = ph(Mode::A) - ph(probe(j));
    }
    return d;
}

std::string_view scenario_name(ProbeScenario s) { return kScenarioNames[static_cast<int>(s)]; }

std::optional<ProbeScenario> scenario_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kScenarioNames.size(); ++i)
        if (kScenarioNames[i] == name) return static_cast<ProbeScenario>(i);
    if (name == "I") return ProbeScenario::PumpProbe;
    if (name == "II") return ProbeScenario::StokesProbe;
    if (name == "III") return ProbeScenario::AntiStokesProbe;
    if (name == "IV") return ProbeScenario::SplitProbe;
    return std::nullopt;
}

SystemParams apply_scenario(const SystemParams& p, ProbeScenario s) {
    SystemParams q = p;
    switch (s) {
    case ProbeScenario::PumpProbe:
        q.lambda_probe = {0.0, 0.0};
        q.omega_probe = {0.0, 0.0};
        break;
    case ProbeScenario::StokesProbe:
        q.gamma_probe = {0.0, 0.0};
        q.omega_probe = {0.0, 0.0};
        break;
    case ProbeScenario::AntiStokesProbe:
        q.gamma_probe = {0.0, 0.0};
        q.lambda_probe = {0.0, 0.0};
        break;
    case ProbeScenario::SplitProbe:
        q.gamma_probe = {0.0, 0.0};
        q.lambda_probe[1] = 0.0;
        q.omega_probe[0] = 0.0;
        break;
    case ProbeScenario::General:
        break;
    }
    return q;
}

ValidityCheck check_validity(const SystemParams& p, double z) {
    ValidityCheck c;
    c.strength = p.max_coupling() * std::abs(z);
    if (c.strength > kValidityHard)
        c.level = Validity::Violation;
    else if (c.strength > kValidityWarn)
        c.level = Validity::Warning;
    return c;
}

SystemParams figure2_params() {
    SystemParams p;
    p.g = 1.0;
    p.chi = 1.1;
    p.gamma_probe = {1.15, 1.15};
    p.a(Mode::p1).mag = 5.0;
    p.a(Mode::p2).mag = 4.0;
    p.a(Mode::L1).mag = 8.0;
    p.a(Mode::L2).mag = 8.5;
    p.a(Mode::S).mag = 7.0;
    p.a(Mode::V).mag = 0.01;
    p.a(Mode::A).mag = 1.0;
    return p;
}

}  // namespace hz
