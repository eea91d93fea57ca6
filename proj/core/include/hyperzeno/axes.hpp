#pragma once

#include <optional>
#include <string_view>

#include "hyperzeno/model.hpp"

namespace hz {

// Scalar knobs that sweeps and root searches move. Mismatch axes come in two
// flavours: the dimensionless product with z, and the ratio to g.
enum class Axis {
    dkS_z, dkA_z, dkL_z,
    dkS_g, dkA_g, dkL_g,
    dtheta_S, dtheta_A, dtheta,  // dtheta moves dtheta_S and dtheta_A together
    dphi_L, dphi_L1, dphi_L2, dphi_S, dphi_A,
    gz, z,
};

std::string_view axis_name(Axis a);
std::optional<Axis> axis_from_name(std::string_view name);

struct Point {
    SystemParams params;
    double z = 0.0;
};

// Realizes an axis value on concrete wavevectors and phases. Mismatches are
// moved through k_S, k_A and the probe wavevectors; phase differences through
// phi_S, phi_A and the probe phases, so the other derived groups named by the
// same case formula stay put. Throws std::invalid_argument when the axis is
// undefined (z = 0 for "_z" axes, g = 0 for "_g" axes and gz).
Point set_axis(const Point& at, Axis axis, double value);

}  // namespace hz
