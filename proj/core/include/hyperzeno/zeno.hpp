#pragma once

#include <array>
#include <functional>
#include <string_view>

#include "hyperzeno/coefficients.hpp"
#include "hyperzeno/model.hpp"

namespace hz {

// Unprobed output channels whose Zeno parameter can be reported.
enum class Channel : int { S = 0, V = 1, A = 2 };
inline constexpr std::array<Channel, 3> kChannels{Channel::S, Channel::V, Channel::A};
std::string_view channel_name(Channel c);
Mode channel_mode(Channel c);

enum class ZenoEffect { QZE, QAZE, Neutral, NotApplicable };
std::string_view effect_name(ZenoEffect e);

inline constexpr double kDefaultZenoTol = 1e-12;

struct ZenoReport {
    ProbeScenario scenario = ProbeScenario::General;
    double z = 0.0;
    std::array<double, 3> Z{};
    std::array<bool, 3> applicable{true, true, true};
    double tol = kDefaultZenoTol;

    double operator[](Channel c) const { return Z[static_cast<int>(c)]; }
    ZenoEffect effect(Channel c) const;
};

ZenoEffect classify_zeno(double Z, double tol = kDefaultZenoTol);

// A channel is reported only when no probe couples to it directly.
std::array<bool, 3> applicable_channels(const SystemParams& p);

struct CaseIStrengths {
    std::array<double, 2> C{};  // 4 g Gamma_j |a_pj| |a_L(partner)| |beta| |gamma|
    std::array<double, 2> D{};  // 4 chi Gamma_j |a_pj| |a_L(partner)| |gamma| |delta|
};
CaseIStrengths case1_strengths(const SystemParams& p);

// 4 g Lambda_j |a_pj| |a_L1| |a_L2| |gamma|
std::array<double, 2> stokes_probe_strengths(const SystemParams& p);
// 4 chi Omega_j |a_pj| |a_L1| |a_L2| |gamma|
std::array<double, 2> antistokes_probe_strengths(const SystemParams& p);

// Difference of second-order mean numbers with and without probe couplings,
// assembled from the full coefficient tables after applying the scenario.
ZenoReport zeno_general(const SystemParams& p, double z,
                        ProbeScenario s = ProbeScenario::General);
// Same, from an explicit coefficient set (c.z is used as the length); p must
// already have the scenario applied.
ZenoReport zeno_from_coefficients(const SystemParams& p, const CoefficientSet& c,
                                  ProbeScenario s = ProbeScenario::General);

ZenoReport zeno_case1(const SystemParams& p, double z);
ZenoReport zeno_case2(const SystemParams& p, double z);
ZenoReport zeno_case3(const SystemParams& p, double z);
ZenoReport zeno_case4(const SystemParams& p, double z);

// Phase-matched limits of the four case formulas (all mismatches -> 0).
ZenoReport zeno_phase_matched(const SystemParams& p, double z, ProbeScenario s);

// Wavevectors rearranged so that dk_L1 = dk_L2 = dk_S and dk_A = -dk_S.
SystemParams impose_special_mismatch(const SystemParams& p, double dk_S);
ZenoReport zeno_case1_special_mismatch(const SystemParams& p, double z, double dk_S);

// Case closed form for I-IV, general evaluator otherwise.
ZenoReport zeno(const SystemParams& p, double z, ProbeScenario s);

using ZenoFn = std::function<ZenoReport(const SystemParams&, double)>;

}  // namespace hz
