#pragma once

#include <functional>
#include <vector>

#include "hyperzeno/axes.hpp"
#include "hyperzeno/zeno.hpp"

namespace hz {

struct Root {
    double x = 0.0;
    bool crossing = true;  // false: the function touches zero without changing sign
};

struct RootOptions {
    int samples = 2001;
    double xtol = 1e-6;
    // A grid minimum of |f| counts as a touching zero when the refined value
    // falls below touch_rel * max|f| over the grid.
    double touch_rel = 1e-9;
};

// All zeros of f on [lo, hi]: sign changes located by bisection, tangential
// zeros by golden-section search on |f|. Sorted ascending.
std::vector<Root> find_roots(const std::function<double(double)>& f, double lo, double hi,
                             const RootOptions& opt = {});

// Zeros of one Zeno channel while `axis` runs over [lo, hi], all other
// parameters fixed at (p, z).
std::vector<Root> find_transition(const SystemParams& p, double z, Axis axis, double lo,
                                  double hi, Channel channel, const ZenoFn& evaluate,
                                  const RootOptions& opt = {});

}  // namespace hz
