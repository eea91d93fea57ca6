#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace hz {

using cplx = std::complex<double>;

// Field modes in the fixed order used everywhere, including the Fock basis.
enum class Mode : int { p1 = 0, p2, L1, L2, S, V, A };
inline constexpr std::size_t kModeCount = 7;
inline constexpr std::array<Mode, kModeCount> kAllModes{
    Mode::p1, Mode::p2, Mode::L1, Mode::L2, Mode::S, Mode::V, Mode::A};

template <class T>
using ModeArray = std::array<T, kModeCount>;

constexpr std::size_t idx(Mode m) { return static_cast<std::size_t>(m); }
std::string_view mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);

// Probe j (0-based) couples to pump L_j; partner(j) is the other pump.
constexpr int partner(int j) { return 1 - j; }
constexpr Mode pump(int j) { return j == 0 ? Mode::L1 : Mode::L2; }
constexpr Mode probe(int j) { return j == 0 ? Mode::p1 : Mode::p2; }

// Wraps into (-pi, pi].
double canonical_phase(double phi);

struct Amplitude {
    double mag = 0.0;
    double phase = 0.0;
    cplx value() const { return std::polar(mag, phase); }
};

struct SystemParams {
    double g = 0.0;
    double chi = 0.0;
    std::array<double, 2> gamma_probe{};   // pump-probe
    std::array<double, 2> lambda_probe{};  // Stokes-probe
    std::array<double, 2> omega_probe{};   // anti-Stokes-probe
    ModeArray<double> k{};
    ModeArray<Amplitude> amp{};

    double kk(Mode m) const { return k[idx(m)]; }
    const Amplitude& a(Mode m) const { return amp[idx(m)]; }
    Amplitude& a(Mode m) { return amp[idx(m)]; }

    // Largest |coupling|; the dimensionless strength at length z is this times |z|.
    double max_coupling() const;
};

// Returns a copy with negative magnitudes folded into the phase and every
// phase wrapped into (-pi, pi]. Throws std::invalid_argument on NaN/inf.
SystemParams normalized(const SystemParams& p);

struct DerivedPhases {
    double dk_S = 0, dk_A = 0;
    std::array<double, 2> dk_L{}, dk_Sj{}, dk_Aj{};
    double dtheta_S = 0, dtheta_A = 0;
    std::array<double, 2> dphi_L{}, dphi_S{}, dphi_A{};
};

DerivedPhases derive_phases(const SystemParams& p);

enum class ProbeScenario { PumpProbe, StokesProbe, AntiStokesProbe, SplitProbe, General };

std::string_view scenario_name(ProbeScenario s);
std::optional<ProbeScenario> scenario_from_name(std::string_view name);

SystemParams apply_scenario(const SystemParams& p, ProbeScenario s);

enum class Validity { Ok, Warning, Violation };

struct ValidityCheck {
    Validity level = Validity::Ok;
    double strength = 0.0;  // max |coupling * z|
};

inline constexpr double kValidityWarn = 0.3;
inline constexpr double kValidityHard = 1.0;

ValidityCheck check_validity(const SystemParams& p, double z);

// The reference parameter set shared by the Zeno figure presets, in units g = 1,
// all wavevectors and phases zero.
SystemParams figure2_params();

}  // namespace hz
