#include "hyperzeno/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hz::oracle {

std::size_t FockConfig::basis_size() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(std::max(d, 0));
    return n;
}

FockConfig FockConfig::grown(int by) const {
    FockConfig c = *this;
    for (int& d : c.dims) d += by;
    return c;
}

void check_config(const FockConfig& cfg) {
    for (Mode m : kAllModes)
        if (cfg.dims[idx(m)] < 2)
            throw OracleError("dimension of mode " + std::string(mode_name(m)) + " must be >= 2");
    if (cfg.z_steps < 1) throw OracleError("z_steps must be >= 1");
    if (cfg.basis_size() > cfg.budget)
        throw OracleError("basis of " + std::to_string(cfg.basis_size()) + " states exceeds budget " +
                          std::to_string(cfg.budget));
}

void check_occupancy(const SystemParams& p, const FockConfig& cfg) {
    for (Mode m : kAllModes) {
        const double n = p.a(m).mag * p.a(m).mag;
        if (n > cfg.dims[idx(m)] / 4.0)
            throw OracleError("occupancy guard: |alpha_" + std::string(mode_name(m)) + "|^2 = " +
                              std::to_string(n) + " > dim/4");
    }
}

Basis::Basis(const ModeArray<int>& d) : dims(d) {
    std::size_t s = 1;
    for (int m = static_cast<int>(kModeCount) - 1; m >= 0; --m) {
        stride[m] = s;
        s *= static_cast<std::size_t>(d[m]);
    }
    size = s;
}

double FockState::norm() const {
    double s = 0.0;
    for (const cplx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

namespace {

// Per-term data for the gather loop: the signed index offset and, for each
// involved mode, the matrix element as a function of the output occupation.
struct PreparedTerm {
    cplx coef;
    std::ptrdiff_t offset = 0;
    std::vector<std::pair<int, std::vector<double>>> factors;
};

std::vector<PreparedTerm> prepare(const FockOperator& G) {
    std::vector<PreparedTerm> out;
    const Basis& b = G.basis;
    for (const LadderTerm& t : G.terms) {
        PreparedTerm p;
        p.coef = t.coef;
        for (int m = 0; m < static_cast<int>(kModeCount); ++m) {
            const int s = t.shift[m];
            if (s == 0) continue;
            p.offset += s * static_cast<std::ptrdiff_t>(b.stride[m]);
            std::vector<double> f(b.dims[m], 0.0);
            for (int n = 0; n < b.dims[m]; ++n) {
                if (s > 0)  // output n came from n-1 through a^dag
                    f[n] = n >= 1 ? std::sqrt(static_cast<double>(n)) : 0.0;
                else  // output n came from n+1 through a
                    f[n] = n + 1 < b.dims[m] ? std::sqrt(static_cast<double>(n + 1)) : 0.0;
            }
            p.factors.emplace_back(m, std::move(f));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

void FockOperator::apply(const std::vector<cplx>& in, std::vector<cplx>& out) const {
    const std::size_t n = basis.size;
    out.assign(n, cplx{});
    const std::vector<PreparedTerm> pt = prepare(*this);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
        const auto row = static_cast<std::size_t>(r);
        int occ[kModeCount];
        for (std::size_t m = 0; m < kModeCount; ++m)
            occ[m] = static_cast<int>(row / basis.stride[m] % static_cast<std::size_t>(basis.dims[m]));
        cplx acc = diag[row] * in[row];
        for (const PreparedTerm& t : pt) {
            double w = 1.0;
            for (const auto& [m, f] : t.factors) {
                w *= f[occ[m]];
                if (w == 0.0) break;
            }
            if (w != 0.0) acc += t.coef * w * in[static_cast<std::size_t>(r - t.offset)];
        }
        out[row] = acc;
    }
}

void FockOperator::spectral_bounds(double& lo, double& hi) const {
    const std::vector<PreparedTerm> pt = prepare(*this);
    lo = INFINITY;
    hi = -INFINITY;
    // Row sums of |G| equal column sums (G is Hermitian), so the gather
    // weights give the Gershgorin radii directly.
    for (std::size_t row = 0; row < basis.size; ++row) {
        double radius = 0.0;
        for (const PreparedTerm& t : pt) {
            double w = std::abs(t.coef);
            for (const auto& [m, f] : t.factors) w *= f[basis.occupation(row, static_cast<Mode>(m))];
            radius += w;
        }
        lo = std::min(lo, diag[row] - radius);
        hi = std::max(hi, diag[row] + radius);
    }
}

std::vector<FockOperator::Triplet> FockOperator::to_triplets() const {
    std::vector<Triplet> out;
    const std::vector<PreparedTerm> pt = prepare(*this);
    for (std::size_t row = 0; row < basis.size; ++row) {
        if (diag[row] != 0.0) out.push_back({row, row, diag[row]});
        for (const PreparedTerm& t : pt) {
            double w = 1.0;
            for (const auto& [m, f] : t.factors) w *= f[basis.occupation(row, static_cast<Mode>(m))];
            if (w != 0.0)
                out.push_back({row, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(row) - t.offset),
                               t.coef * w});
        }
    }
    return out;
}

namespace {

LadderTerm term(cplx coef, std::initializer_list<std::pair<Mode, int>> ops) {
    LadderTerm t;
    t.coef = coef;
    for (auto [m, s] : ops) t.shift[idx(m)] = static_cast<std::int8_t>(s);
    return t;
}

LadderTerm adjoint(const LadderTerm& t) {
    LadderTerm a;
    a.coef = std::conj(t.coef);
    for (std::size_t m = 0; m < kModeCount; ++m) a.shift[m] = static_cast<std::int8_t>(-t.shift[m]);
    return a;
}

}  // namespace

FockOperator build_g(const SystemParams& params, const FockConfig& cfg) {
    check_config(cfg);
    const SystemParams p = normalized(params);
    FockOperator G{Basis(cfg.dims)};
    for (std::size_t row = 0; row < G.basis.size; ++row) {
        double e = 0.0;
        for (Mode m : kAllModes) e += p.kk(m) * G.basis.occupation(row, m);
        G.diag[row] = e;
    }
    std::vector<LadderTerm> half;
    // g a_L1 a_L2 a_S^dag a_V^dag and chi a_L1 a_L2 a_V a_A^dag
    half.push_back(term(p.g, {{Mode::L1, -1}, {Mode::L2, -1}, {Mode::S, +1}, {Mode::V, +1}}));
    half.push_back(term(p.chi, {{Mode::L1, -1}, {Mode::L2, -1}, {Mode::V, -1}, {Mode::A, +1}}));
    for (int j = 0; j < 2; ++j) {
        const Mode pj = probe(j);
        half.push_back(term(p.gamma_probe[j], {{pj, +1}, {pump(j), -1}}));
        half.push_back(term(p.lambda_probe[j], {{pj, +1}, {Mode::S, -1}}));
        half.push_back(term(p.omega_probe[j], {{pj, +1}, {Mode::A, -1}}));
    }
    for (const LadderTerm& t : half) {
        if (t.coef == cplx{}) continue;
        G.terms.push_back(t);
        G.terms.push_back(adjoint(t));
    }
    return G;
}

FockState coherent_product_state(const SystemParams& params, const FockConfig& cfg) {
    check_config(cfg);
    const SystemParams p = normalized(params);
    check_occupancy(p, cfg);
    FockState s{Basis(cfg.dims)};
    ModeArray<std::vector<cplx>> c;
    for (Mode m : kAllModes) {
        const int d = cfg.dims[idx(m)];
        const cplx alpha = p.a(m).value();
        std::vector<cplx>& v = c[idx(m)];
        v.resize(d);
        v[0] = 1.0;
        for (int n = 1; n < d; ++n) v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
        double norm = 0.0;
        for (const cplx& x : v) norm += std::norm(x);
        for (cplx& x : v) x /= std::sqrt(norm);
    }
    for (std::size_t i = 0; i < s.basis.size; ++i) {
        cplx a = 1.0;
        for (Mode m : kAllModes) a *= c[idx(m)][s.basis.occupation(i, m)];
        s.amp[i] = a;
    }
    return s;
}

namespace {

// J_n(x) for x of either sign.
double bessel(int n, double x) {
    const double j = std::cyl_bessel_j(static_cast<double>(n), std::abs(x));
    return (x < 0 && n % 2 == 1) ? -j : j;
}

void chebyshev_step(std::vector<cplx>& psi, const FockOperator& G, double centre, double radius, double h) {
    const std::size_t n = psi.size();
    const double tau = radius * h;
    const int max_terms = static_cast<int>(std::abs(tau) + 20.0 * std::cbrt(std::abs(tau) + 1.0) + 60.0);

    std::vector<cplx> prev = psi, cur(n), next(n), tmp(n);
    // cur = Ghat psi
    G.apply(prev, tmp);
    for (std::size_t i = 0; i < n; ++i) cur[i] = (tmp[i] - centre * prev[i]) / radius;

    std::vector<cplx> acc(n);
    const double j0 = bessel(0, tau);
    cplx in = cplx(0.0, 1.0);  // i^n
    const double j1 = bessel(1, tau);
    for (std::size_t i = 0; i < n; ++i) acc[i] = j0 * prev[i] + 2.0 * in * j1 * cur[i];

    int small = 0;
    bool converged = false;
    for (int k = 2; k < max_terms; ++k) {
        G.apply(cur, tmp);
        for (std::size_t i = 0; i < n; ++i) next[i] = 2.0 * (tmp[i] - centre * cur[i]) / radius - prev[i];
        in *= cplx(0.0, 1.0);
        const double jk = bessel(k, tau);
        const cplx w = 2.0 * in * jk;
        for (std::size_t i = 0; i < n; ++i) acc[i] += w * next[i];
        std::swap(prev, cur);
        std::swap(cur, next);
        if (k > std::abs(tau) && std::abs(jk) < 1e-17) {
            if (++small >= 3) {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if (!converged) throw OracleError("Chebyshev expansion did not converge");
    const cplx phase = std::polar(1.0, centre * h);
    for (std::size_t i = 0; i < n; ++i) psi[i] = phase * acc[i];
}

}  // namespace

FockState evolve(const FockState& s, const FockOperator& G, double z, int min_steps) {
    if (!std::isfinite(z)) throw OracleError("evolve: non-finite z");
    if (G.basis.size != s.basis.size) throw OracleError("evolve: basis mismatch");
    FockState out = s;
    if (z == 0.0) return out;
    double lo = 0.0, hi = 0.0;
    G.spectral_bounds(lo, hi);
    const double centre = 0.5 * (hi + lo);
    const double radius = 0.5 * (hi - lo);
    if (radius < 1e-300) {
        const cplx phase = std::polar(1.0, centre * z);
        for (cplx& a : out.amp) a *= phase;
        return out;
    }
    const int steps = std::max(min_steps, static_cast<int>(std::ceil(radius * std::abs(z) / kChebyshevSpan)));
    const double h = z / steps;
    for (int k = 0; k < steps; ++k) chebyshev_step(out.amp, G, centre, radius, h);
    return out;
}

double expect_number(const FockState& s, Mode m) {
    double r = 0.0;
    for (std::size_t i = 0; i < s.basis.size; ++i) r += std::norm(s.amp[i]) * s.basis.occupation(i, m);
    return r;
}

double expect_g(const FockState& s, const FockOperator& G) {
    std::vector<cplx> gpsi;
    G.apply(s.amp, gpsi);
    cplx r{};
    for (std::size_t i = 0; i < s.basis.size; ++i) r += std::conj(s.amp[i]) * gpsi[i];
    return r.real();
}

FockState lower(const FockState& s, Mode m) {
    FockState out{s.basis};
    const std::size_t st = s.basis.stride[idx(m)];
    const int d = s.basis.dims[idx(m)];
    for (std::size_t i = 0; i < s.basis.size; ++i) {
        const int n = s.basis.occupation(i, m);
        if (n + 1 < d) out.amp[i] = std::sqrt(static_cast<double>(n + 1)) * s.amp[i + st];
    }
    return out;
}

double pair_moment(const FockState& s, Mode i, Mode j) {
    const FockState v = lower(lower(s, i), j);
    const double n = v.norm();
    return n * n;
}

SystemParams unprobed(const SystemParams& p) {
    SystemParams q = p;
    q.gamma_probe = {0.0, 0.0};
    q.lambda_probe = {0.0, 0.0};
    q.omega_probe = {0.0, 0.0};
    return q;
}

ZenoReport oracle_zeno(const SystemParams& params, const FockConfig& cfg, double z, ProbeScenario s) {
    const SystemParams p = apply_scenario(normalized(params), s);
    const FockState psi0 = coherent_product_state(p, cfg);
    const FockState with = evolve(psi0, build_g(p, cfg), z, cfg.z_steps);
    const FockState without = evolve(psi0, build_g(unprobed(p), cfg), z, cfg.z_steps);
    ZenoReport r;
    r.scenario = s;
    r.z = z;
    r.applicable = applicable_channels(p);
    for (Channel c : kChannels) {
        const int i = static_cast<int>(c);
        if (!r.applicable[i]) continue;
        const Mode m = channel_mode(c);
        r.Z[i] = expect_number(with, m) - expect_number(without, m);
    }
    return r;
}

namespace {

struct Moments {
    std::array<double, 3> n{};
    StatSet D;
};

Moments moments(const FockState& s) {
    constexpr std::array<Mode, 3> modes{Mode::S, Mode::V, Mode::A};
    Moments r;
    for (int i = 0; i < 3; ++i) r.n[i] = expect_number(s, modes[i]);
    const std::array<std::pair<int, int>, 6> pairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        r.D.v[k] = pair_moment(s, modes[i], modes[j]) - r.n[i] * r.n[j];
    }
    return r;
}

}  // namespace

StatReport oracle_stats(const SystemParams& params, const FockConfig& cfg, double z, bool with_g2, bool raw) {
    const SystemParams p = normalized(params);
    const FockState psi0 = coherent_product_state(p, cfg);
    const FockState psi = evolve(psi0, build_g(p, cfg), z, cfg.z_steps);
    const Moments m = moments(psi);
    StatReport r;
    r.z = z;
    r.source = StatSource::Oracle;
    r.D = m.D;
    if (!raw) {
        const Moments b = moments(psi0);
        for (std::size_t k = 0; k < r.D.v.size(); ++k) r.D.v[k] -= b.D.v[k];
    }
    if (with_g2) {
        r.mean = m.n;
        StatSet g;
        const std::array<std::pair<int, int>, 6> pairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
        for (std::size_t k = 0; k < pairs.size(); ++k)
            g.v[k] = g2_normalize(m.D.v[k], m.n[pairs[k].first], m.n[pairs[k].second]);
        r.g2 = g;
    }
    return r;
}

Drift evolution_drift(const SystemParams& params, const FockConfig& cfg, double z, int checkpoints) {
    const SystemParams p = normalized(params);
    const FockOperator G = build_g(p, cfg);
    FockState psi = coherent_product_state(p, cfg);
    auto balance = [](const FockState& s) {
        return expect_number(s, Mode::S) - expect_number(s, Mode::A) - expect_number(s, Mode::V);
    };
    const double n0 = psi.norm(), g0 = expect_g(psi, G), b0 = balance(psi);
    Drift d;
    const int k = std::max(checkpoints, 1);
    for (int i = 0; i < k; ++i) {
        psi = evolve(psi, G, z / k, cfg.z_steps);
        d.norm = std::max(d.norm, std::abs(psi.norm() - n0));
        d.generator = std::max(d.generator, std::abs(expect_g(psi, G) - g0));
        d.stokes_anti_phonon = std::max(d.stokes_anti_phonon, std::abs(balance(psi) - b0));
    }
    return d;
}

std::vector<double> mean_numbers(const SystemParams& p, const FockConfig& cfg, double z) {
    const FockState psi = evolve(coherent_product_state(p, cfg), build_g(p, cfg), z, cfg.z_steps);
    std::vector<double> r;
    for (Mode m : kAllModes) r.push_back(expect_number(psi, m));
    return r;
}

TruncationReport certify_truncation(const SystemParams& params, const FockConfig& cfg, double z,
                                    const Observable& what) {
    const SystemParams p = normalized(params);
    TruncationReport rep;
    auto rank = [&rep](ModeArray<double> score) {
        std::vector<Mode> order(kAllModes.begin(), kAllModes.end());
        std::stable_sort(order.begin(), order.end(),
                         [&](Mode a, Mode b) { return score[idx(a)] > score[idx(b)]; });
        const double top = score[idx(order.front())];
        for (Mode m : order)
            if (top > 0 && score[idx(m)] >= 0.1 * top) rep.grow.push_back(m);
    };
    try {
        check_config(cfg);
        check_config(cfg.grown(2));
        check_occupancy(p, cfg);
    } catch (const OracleError& e) {
        rep.reason = e.what();
        ModeArray<double> ratio{};
        for (Mode m : kAllModes) ratio[idx(m)] = p.a(m).mag * p.a(m).mag / (cfg.dims[idx(m)] / 4.0);
        rank(ratio);
        return rep;
    }
    const FockState psi = evolve(coherent_product_state(p, cfg), build_g(p, cfg), z, cfg.z_steps);
    for (Mode m : kAllModes) {
        double top = 0.0;
        for (std::size_t i = 0; i < psi.basis.size; ++i)
            if (psi.basis.occupation(i, m) == cfg.dims[idx(m)] - 1) top += std::norm(psi.amp[i]);
        rep.top_population[idx(m)] = top;
    }
    // Compare what the evolution did, not the truncated inputs themselves.
    const FockConfig big = cfg.grown(2);
    const std::vector<double> a = what(p, cfg, z), a0 = what(p, cfg, 0.0);
    const std::vector<double> b = what(p, big, z), b0 = what(p, big, 0.0);
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        rep.max_change = std::max(rep.max_change, std::abs((a[i] - a0[i]) - (b[i] - b0[i])));
    rep.certified = rep.max_change < cfg.tol_truncation;
    if (!rep.certified) {
        rep.reason = "observable changed by " + std::to_string(rep.max_change) + " when every dim grew by 2";
        rank(rep.top_population);
    }
    return rep;
}

}  // namespace hz::oracle
