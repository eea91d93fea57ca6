#include "hyperzeno/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hz {

namespace {

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double xtol) {
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double golden_min_abs(const std::function<double(double)>& f, double a, double b, double xtol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = std::abs(f(c)), fd = std::abs(f(d));
    while (b - a > xtol * 1e-3) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = std::abs(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = std::abs(f(d));
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<Root> find_roots(const std::function<double(double)>& f, double lo, double hi,
                             const RootOptions& opt) {
    if (!(hi > lo)) throw std::invalid_argument("find_roots: empty range");
    if (opt.samples < 3) throw std::invalid_argument("find_roots: need at least 3 samples");
    const int n = opt.samples;
    std::vector<double> x(n), y(n);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        x[i] = lo + (hi - lo) * i / (n - 1);
        y[i] = f(x[i]);
        scale = std::max(scale, std::abs(y[i]));
    }
    std::vector<Root> roots;
    if (scale == 0.0) return roots;

    const double eps = opt.touch_rel * scale;
    for (int i = 0; i + 1 < n; ++i) {
        if (y[i] == 0.0) {
            // Exact grid zero; classify by the neighbours.
            const bool crossing = i > 0 && (y[i - 1] < 0) != (y[i + 1] < 0);
            roots.push_back({x[i], crossing});
            continue;
        }
        if (y[i + 1] != 0.0 && (y[i] < 0) != (y[i + 1] < 0))
            roots.push_back({bisect(f, x[i], x[i + 1], y[i], opt.xtol), true});
    }
    if (y[n - 1] == 0.0) roots.push_back({x[n - 1], false});

    // Tangential zeros: interior local minima of |f| without a sign change.
    for (int i = 1; i + 1 < n; ++i) {
        const double a0 = std::abs(y[i - 1]), a1 = std::abs(y[i]), a2 = std::abs(y[i + 1]);
        if (y[i] == 0.0 || !(a1 <= a0 && a1 <= a2)) continue;
        if ((y[i - 1] < 0) != (y[i] < 0) || (y[i] < 0) != (y[i + 1] < 0)) continue;
        const double xm = golden_min_abs(f, x[i - 1], x[i + 1], opt.xtol);
        if (std::abs(f(xm)) <= eps) roots.push_back({xm, false});
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.x < b.x; });
    return roots;
}

std::vector<Root> find_transition(const SystemParams& p, double z, Axis axis, double lo, double hi,
                                  Channel channel, const ZenoFn& evaluate, const RootOptions& opt) {
    const Point base{p, z};
    auto f = [&](double v) {
        const Point at = set_axis(base, axis, v);
        return evaluate(at.params, at.z)[channel];
    };
    return find_roots(f, lo, hi, opt);
}

}  // namespace hz
