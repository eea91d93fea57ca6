#pragma once

#include <array>

#include "hyperzeno/model.hpp"

namespace hz {

// Second-order operator-expansion coefficients. Arrays are indexed from 1 to
// match the l/m/n labels; slot 0 is unused and always zero.
using StokesTable = std::array<cplx, 19>;      // l1..l18
using PhononTable = std::array<cplx, 21>;      // m1..m20
using AntiStokesTable = std::array<cplx, 19>;  // n1..n18

struct CoefficientSet {
    double z = 0.0;
    StokesTable l{};
    PhononTable m{};
    AntiStokesTable n{};
};

StokesTable stokes_coefficients(const SystemParams& p, double z);
PhononTable phonon_coefficients(const SystemParams& p, double z);
AntiStokesTable antistokes_coefficients(const SystemParams& p, double z);
CoefficientSet coefficients(const SystemParams& p, double z);

}  // namespace hz
