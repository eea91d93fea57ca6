#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace hz::cli {

enum class Figure {
    Fig2a, Fig2b, Fig2c,
    Fig3a, Fig3b, Fig3c,
    Fig4a, Fig4b, Fig4c, Fig4d,
    Fig5a, Fig5b, Fig5c, Fig5d,
    Fig6a, Fig6b, Fig6c, Fig6d,
    Fig8,
};

std::vector<Figure> all_figures();
std::string figure_name(Figure f);
std::optional<Figure> figure_from_name(std::string_view name);

// Surface presets: a two-axis sweep of one Zeno channel.
struct SurfacePreset {
    SweepSpec spec;
    Channel channel = Channel::S;
    std::string note;
};
SurfacePreset surface_preset(Figure f);  // not for Fig8

// Compound Stokes/anti-Stokes discriminant along gz for the four reference
// curves: dk_A = 1.1 dk_S or 0.9 dk_S, combined with dtheta_S - dtheta_A = 0 or pi.
struct Fig8Curve {
    double ratio;  // dk_A / dk_S
    double dtheta_diff;
    std::string label;
};
struct Fig8Data {
    SystemParams params;  // common part; dk_S = 0.01 g
    std::vector<Fig8Curve> curves;
    std::vector<double> gz;
    std::vector<std::vector<double>> D_SA;  // [curve][point]
};
inline constexpr double kFig8GzMax = 100.0;
Fig8Data fig8_data(int points = 1000);

// Writes <outdir>/<name>.csv and <outdir>/<name>.gp; returns the CSV path.
std::filesystem::path write_figure(Figure f, const std::filesystem::path& outdir, int threads);

}  // namespace hz::cli
