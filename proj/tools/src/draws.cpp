#include "draws.hpp"

#include <cmath>
#include <numbers>

namespace hz::cli {

Draw random_draw(Rng& rng, ProbeScenario s, double strength) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    constexpr double pi = std::numbers::pi;

    SystemParams p;
    p.g = uni(0.1, 1.5);
    p.chi = uni(0.1, 1.5);
    for (int j = 0; j < 2; ++j) {
        p.gamma_probe[j] = uni(-1.5, 1.5);
        p.lambda_probe[j] = uni(-1.5, 1.5);
        p.omega_probe[j] = uni(-1.5, 1.5);
    }
    for (Mode m : kAllModes) p.a(m) = {uni(0.0, 3.0), uni(-pi, pi)};
    p = apply_scenario(normalized(p), s);

    Draw d;
    const double kappa = p.max_coupling();
    d.z = uni(0.2, 1.0) * strength / kappa;

    const double branch = u(rng);
    const double spread = branch < 0.2 ? 0.0 : branch < 0.3 ? 1e-7 : pi;
    for (Mode m : kAllModes) p.k[idx(m)] = uni(-spread, spread) / d.z;
    d.params = p;
    return d;
}

}  // namespace hz::cli
