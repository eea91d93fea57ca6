#include "hyperzeno/axes.hpp"

#include <array>
#include <stdexcept>

namespace hz {

namespace {

constexpr std::array<std::string_view, 16> kNames{
    "dkS_z", "dkA_z", "dkL_z", "dkS_g", "dkA_g", "dkL_g", "dthetaS", "dthetaA",
    "dtheta", "dphiL", "dphiL1", "dphiL2", "dphiS", "dphiA", "gz", "z"};

double per_length(const Point& at, Axis axis, double value) {
    switch (axis) {
    case Axis::dkS_z:
    case Axis::dkA_z:
    case Axis::dkL_z:
        if (at.z == 0.0) throw std::invalid_argument("mismatch*z axis needs z != 0");
        return value / at.z;
    default:
        if (at.params.g == 0.0) throw std::invalid_argument("mismatch/g axis needs g != 0");
        return value * at.params.g;
    }
}

void set_dk_S(SystemParams& p, double dk) {
    p.k[idx(Mode::S)] = p.kk(Mode::L1) + p.kk(Mode::L2) - p.kk(Mode::V) + dk;
}
void set_dk_A(SystemParams& p, double dk) {
    p.k[idx(Mode::A)] = p.kk(Mode::L1) + p.kk(Mode::L2) + p.kk(Mode::V) - dk;
}
void set_dk_L(SystemParams& p, double dk) {
    for (int j = 0; j < 2; ++j) p.k[idx(probe(j))] = p.kk(pump(j)) - dk;
}
double phase(const SystemParams& p, Mode m) { return p.a(m).phase; }
void set_phase(SystemParams& p, Mode m, double v) { p.a(m).phase = canonical_phase(v); }

void set_dtheta_S(SystemParams& p, double v) {
    set_phase(p, Mode::S, v - phase(p, Mode::V) + phase(p, Mode::L1) + phase(p, Mode::L2));
}
void set_dtheta_A(SystemParams& p, double v) {
    set_phase(p, Mode::A, phase(p, Mode::L1) + phase(p, Mode::L2) + phase(p, Mode::V) - v);
}

}  // namespace

std::string_view axis_name(Axis a) { return kNames[static_cast<int>(a)]; }

std::optional<Axis> axis_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<Axis>(i);
    return std::nullopt;
}

Point set_axis(const Point& at, Axis axis, double value) {
    Point out = at;
    SystemParams& p = out.params;
    switch (axis) {
    case Axis::dkS_z:
    case Axis::dkS_g: set_dk_S(p, per_length(at, axis, value)); break;
    case Axis::dkA_z:
    case Axis::dkA_g: set_dk_A(p, per_length(at, axis, value)); break;
    case Axis::dkL_z:
    case Axis::dkL_g: set_dk_L(p, per_length(at, axis, value)); break;
    case Axis::dtheta_S: set_dtheta_S(p, value); break;
    case Axis::dtheta_A: set_dtheta_A(p, value); break;
    case Axis::dtheta:
        set_dtheta_S(p, value);
        set_dtheta_A(p, value);
        break;
    case Axis::dphi_L:
        for (int j = 0; j < 2; ++j) set_phase(p, probe(j), phase(p, pump(j)) - value);
        break;
    case Axis::dphi_L1: set_phase(p, Mode::p1, phase(p, Mode::L1) - value); break;
    case Axis::dphi_L2: set_phase(p, Mode::p2, phase(p, Mode::L2) - value); break;
    case Axis::dphi_S:
        for (int j = 0; j < 2; ++j) set_phase(p, probe(j), phase(p, Mode::S) - value);
        break;
    case Axis::dphi_A:
        for (int j = 0; j < 2; ++j) set_phase(p, probe(j), phase(p, Mode::A) - value);
        break;
    case Axis::gz:
        if (p.g == 0.0) throw std::invalid_argument("gz axis needs g != 0");
        out.z = value / p.g;
        break;
    case Axis::z: out.z = value; break;
    }
    return out;
}

}  // namespace hz
