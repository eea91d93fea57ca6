#pragma once

#include <cstdint>
#include <random>

#include "hyperzeno/model.hpp"

namespace hz::cli {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

struct Draw {
    SystemParams params;
    double z = 0.0;
};

// Random parameter point with the scenario applied and max |coupling * z|
// equal to a uniform fraction in [0.2, 1] of `strength`. Mismatch products
// range over a few radians; about one draw in five is exactly phase matched
// and one in ten sits within 1e-7 of phase matching, so the limit branches
// of every kernel get exercised.
Draw random_draw(Rng& rng, ProbeScenario s, double strength);

}  // namespace hz::cli
