#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "hyperzeno/zeno.hpp"
#include "support.hpp"

using namespace hz;
using hz::test::rel_err;
using std::numbers::pi;

namespace {

constexpr ProbeScenario kCases[] = {ProbeScenario::PumpProbe, ProbeScenario::StokesProbe,
                                    ProbeScenario::AntiStokesProbe, ProbeScenario::SplitProbe};

// Every wavevector equal to its phase-matched value plus `eps` offsets that
// keep all mismatches distinct and of size ~eps.
SystemParams nearly_matched(SystemParams p, double eps) {
    p.k = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    p.k[idx(Mode::p1)] = -0.7 * eps;
    p.k[idx(Mode::p2)] = 0.4 * eps;
    p.k[idx(Mode::S)] = 1.3 * eps;
    p.k[idx(Mode::A)] = -0.9 * eps;
    return p;
}

SystemParams zero_phases(SystemParams p) {
    for (Mode m : kAllModes) p.a(m).phase = 0.0;
    return p;
}

SystemParams swap_probes(SystemParams p) {
    std::swap(p.gamma_probe[0], p.gamma_probe[1]);
    std::swap(p.lambda_probe[0], p.lambda_probe[1]);
    std::swap(p.omega_probe[0], p.omega_probe[1]);
    std::swap(p.amp[idx(Mode::p1)], p.amp[idx(Mode::p2)]);
    std::swap(p.amp[idx(Mode::L1)], p.amp[idx(Mode::L2)]);
    std::swap(p.k[idx(Mode::p1)], p.k[idx(Mode::p2)]);
    std::swap(p.k[idx(Mode::L1)], p.k[idx(Mode::L2)]);
    return p;
}

void check_same(const ZenoReport& a, const ZenoReport& b, double rel, double abs_floor = 1e-300) {
    for (Channel c : kChannels) {
        const int i = static_cast<int>(c);
        if (!a.applicable[i] || !b.applicable[i]) continue;
        CAPTURE(channel_name(c));
        CHECK(std::abs(a[c] - b[c]) <= std::max(rel * std::max(std::abs(a[c]), std::abs(b[c])), abs_floor));
    }
}

}  // namespace

TEST_SUITE("zeno") {

TEST_CASE("zero length gives zero") {
    const SystemParams p = test::generic_params();
    for (ProbeScenario s : kCases) {
        for (double Z : zeno(p, 0.0, s).Z) CHECK(Z == 0.0);
        for (double Z : zeno_general(p, 0.0, s).Z) CHECK(Z == 0.0);
    }
}

TEST_CASE("reference parameter set, phase matched") {
    const SystemParams p = figure2_params();
    const CaseIStrengths st = case1_strengths(p);
    CHECK(st.C[0] == doctest::Approx(13.685).epsilon(1e-4));
    CHECK(st.C[1] == doctest::Approx(10.304).epsilon(1e-4));
    const double z = 0.1;
    const double expected = -0.25 * (st.C[0] + st.C[1]) * z * z;
    CHECK(zeno_phase_matched(p, z, ProbeScenario::PumpProbe)[Channel::S] == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(-0.0600).epsilon(1e-3));
    const ZenoReport gen = zeno_general(nearly_matched(p, 1e-8), z, ProbeScenario::PumpProbe);
    CHECK(gen[Channel::S] == doctest::Approx(expected).epsilon(1e-6));
    CHECK(gen.effect(Channel::S) == ZenoEffect::QZE);
}

TEST_CASE("opposite pump-probe phase turns the Stokes channel anti-Zeno") {
    SystemParams p = figure2_params();
    p.a(Mode::p1).phase = pi;  // dphi_L = phi_L - phi_p = -pi
    p.a(Mode::p2).phase = pi;
    const CaseIStrengths st = case1_strengths(p);
    const double z = 0.1;
    const ZenoReport r = zeno_case1(p, z);
    CHECK(r[Channel::S] == doctest::Approx(0.25 * (st.C[0] + st.C[1]) * z * z).epsilon(1e-12));
    CHECK(r.effect(Channel::S) == ZenoEffect::QAZE);
}

TEST_CASE("no phonon seed, no Zeno parameter") {
    SystemParams p = test::generic_params();
    p.a(Mode::V).mag = 0.0;
    for (ProbeScenario s : kCases)
        for (double z : {0.3, 1.2}) {
            for (double Z : zeno(p, z, s).Z) CHECK(Z == 0.0);
            for (double Z : zeno_general(p, z, s).Z) CHECK(std::abs(Z) < 1e-15);
        }
}

TEST_CASE("spontaneous case is null") {
    SystemParams p = test::generic_params();
    p.a(Mode::S).mag = p.a(Mode::V).mag = p.a(Mode::A).mag = 0.0;
    for (ProbeScenario s : kCases)
        for (double Z : zeno_general(p, 0.9, s).Z) CHECK(std::abs(Z) < 1e-15);
}

TEST_CASE("case formulas agree with the general evaluator") {
    SystemParams p = test::generic_params();
    for (ProbeScenario s : kCases)
        for (double z : {0.2, 0.9, 2.5}) {
            CAPTURE(scenario_name(s));
            CAPTURE(z);
            check_same(zeno(p, z, s), zeno_general(p, z, s), 1e-11, 1e-15);
        }
}

TEST_CASE("phase-matched limits agree with the general evaluator") {
    const SystemParams p = test::generic_params();
    for (ProbeScenario s : kCases) {
        CAPTURE(scenario_name(s));
        const double z = 0.7;
        const ZenoReport limit = zeno_phase_matched(p, z, s);
        check_same(limit, zeno(nearly_matched(p, 1e-9), z, s), 1e-6);
        check_same(limit, zeno_general(nearly_matched(p, 1e-9), z, s), 1e-6);
        check_same(limit, zeno(nearly_matched(p, 0.0), z, s), 1e-12);
    }
}

TEST_CASE("Stokes-probed channels") {
    SystemParams p = test::generic_params();
    const ZenoReport r = zeno_general(p, 0.8, ProbeScenario::StokesProbe);
    CHECK_FALSE(r.applicable[0]);
    CHECK(r[Channel::A] == 0.0);
    CHECK(zeno_case2(p, 0.8)[Channel::A] == 0.0);

    // Only the phonon is seeded: still a Zeno response.
    p.a(Mode::S).mag = p.a(Mode::A).mag = 0.0;
    CHECK(std::abs(zeno_case2(p, 0.8)[Channel::V]) > 1e-3);

    // Phase matched, zero phase differences: anti-Zeno in the phonon channel.
    const SystemParams q = zero_phases(nearly_matched(test::generic_params(), 0.0));
    const auto C = stokes_probe_strengths(q);
    const double z = 0.5;
    const ZenoReport m = zeno_case2(q, z);
    CHECK(m[Channel::V] == doctest::Approx(0.25 * (C[0] + C[1]) * z * z).epsilon(1e-12));
    CHECK(zeno_general(q, z, ProbeScenario::StokesProbe)[Channel::V] ==
          doctest::Approx(m[Channel::V]).epsilon(1e-12));
}

TEST_CASE("anti-Stokes-probed channels") {
    SystemParams p = test::generic_params();
    CHECK(zeno_case3(p, 0.8)[Channel::S] == 0.0);
    CHECK(std::abs(zeno_general(p, 0.8, ProbeScenario::AntiStokesProbe)[Channel::S]) < 1e-15);
    CHECK_FALSE(zeno_case3(p, 0.8).applicable[2]);

    const SystemParams q = zero_phases(nearly_matched(p, 0.0));
    const auto D = antistokes_probe_strengths(q);
    const ZenoReport m = zeno_case3(q, 0.5);
    CHECK(m[Channel::V] == doctest::Approx(-0.25 * (D[0] + D[1]) * 0.25).epsilon(1e-12));
    CHECK(m.effect(Channel::V) == ZenoEffect::QZE);

    p.omega_probe = {0.0, 0.0};
    CHECK(zeno_case3(p, 0.8)[Channel::V] == 0.0);
}

TEST_CASE("split probing reduces to its halves") {
    SystemParams p = test::generic_params();
    const double z = 0.9;
    SystemParams no_stokes = p;
    no_stokes.lambda_probe = {0.0, 0.0};
    SystemParams only_probe2 = apply_scenario(p, ProbeScenario::AntiStokesProbe);
    only_probe2.omega_probe[0] = 0.0;
    CHECK(zeno_case4(no_stokes, z)[Channel::V] == doctest::Approx(zeno_case3(only_probe2, z)[Channel::V]));

    SystemParams no_anti = p;
    no_anti.omega_probe = {0.0, 0.0};
    SystemParams only_probe1 = apply_scenario(p, ProbeScenario::StokesProbe);
    only_probe1.lambda_probe[1] = 0.0;
    CHECK(zeno_case4(no_anti, z)[Channel::V] == doctest::Approx(zeno_case2(only_probe1, z)[Channel::V]));

    // Phase matched with zero phase differences the two halves pull apart:
    // the Stokes probe gives +C/4 z^2, the anti-Stokes probe -D/4 z^2.
    const SystemParams q = zero_phases(nearly_matched(p, 0.0));
    const double C1 = stokes_probe_strengths(q)[0], D2 = antistokes_probe_strengths(q)[1];
    CHECK(zeno_case4(q, z)[Channel::V] == doctest::Approx(0.25 * (C1 - D2) * z * z).epsilon(1e-12));
    CHECK(zeno_general(q, z, ProbeScenario::SplitProbe)[Channel::V] ==
          doctest::Approx(0.25 * (C1 - D2) * z * z).epsilon(1e-12));
}

TEST_CASE("phonon channel is the Stokes minus anti-Stokes difference") {
    const SystemParams p = test::generic_params();
    for (double z : {0.1, 0.6, 1.5}) {
        const ZenoReport r = zeno_case1(p, z);
        CHECK(r[Channel::V] == r[Channel::S] - r[Channel::A]);
        const ZenoReport g = zeno_general(p, z, ProbeScenario::PumpProbe);
        CHECK(g[Channel::V] == doctest::Approx(g[Channel::S] - g[Channel::A]).epsilon(1e-12));
    }
}

TEST_CASE("relabelling the two probes changes nothing") {
    const SystemParams p = test::generic_params();
    for (ProbeScenario s : {ProbeScenario::PumpProbe, ProbeScenario::StokesProbe, ProbeScenario::AntiStokesProbe,
                            ProbeScenario::General}) {
        CAPTURE(scenario_name(s));
        check_same(zeno_general(p, 0.7, s), zeno_general(swap_probes(p), 0.7, s), 1e-12, 1e-15);
    }
}

TEST_CASE("anti-Stokes strengths scale from the Stokes ones") {
    const SystemParams p = test::generic_params();
    const CaseIStrengths st = case1_strengths(p);
    const double ratio = (p.chi / p.g) * (p.a(Mode::A).mag / p.a(Mode::S).mag);
    for (int j = 0; j < 2; ++j) CHECK(st.D[j] == doctest::Approx(st.C[j] * ratio));
}

TEST_CASE("special mismatch closed form matches the case formula") {
    const SystemParams p = zero_phases(figure2_params());
    const double z = 0.1;
    for (double x : {0.3, pi / 2, 2.0, 3 * pi / 2, 2 * pi, 7.1}) {
        const double dk = x / z;
        const ZenoReport a = zeno_case1_special_mismatch(p, z, dk);
        const ZenoReport b = zeno_case1(impose_special_mismatch(p, dk), z);
        CAPTURE(x);
        check_same(a, b, 1e-10, 1e-14);
    }
    const ZenoReport two_pi = zeno_case1_special_mismatch(p, z, 2 * pi / z);
    CHECK(std::abs(two_pi[Channel::S]) < 1e-15);
    const DerivedPhases d = derive_phases(impose_special_mismatch(p, 0.37));
    CHECK(d.dk_S == doctest::Approx(0.37));
    CHECK(d.dk_A == doctest::Approx(-0.37));
    CHECK(d.dk_L[0] == doctest::Approx(0.37));
    CHECK(d.dk_L[1] == doctest::Approx(0.37));
}

TEST_CASE("classification") {
    CHECK(classify_zeno(-1e-11) == ZenoEffect::QZE);
    CHECK(classify_zeno(1e-11) == ZenoEffect::QAZE);
    CHECK(classify_zeno(5e-13) == ZenoEffect::Neutral);
    CHECK(classify_zeno(-0.1, 0.2) == ZenoEffect::Neutral);
    ZenoReport r;
    r.applicable = {false, true, true};
    CHECK(r.effect(Channel::S) == ZenoEffect::NotApplicable);
}

}  // TEST_SUITE
