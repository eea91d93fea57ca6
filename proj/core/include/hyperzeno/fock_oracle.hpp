#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperzeno/model.hpp"
#include "hyperzeno/photstat.hpp"
#include "hyperzeno/zeno.hpp"

// Brute-force reference: the generator G in a truncated seven-mode Fock space,
// the coherent product state, and exact evolution |psi(z)> = exp(iGz)|psi(0)>.
namespace hz::oracle {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FockConfig {
    ModeArray<int> dims{5, 5, 6, 6, 5, 5, 5};
    int z_steps = 1;
    double tol_truncation = 1e-6;
    std::size_t budget = 2'000'000;

    std::size_t basis_size() const;
    FockConfig grown(int by) const;
};

// Throws OracleError when a dim is < 2 or the basis exceeds the budget.
void check_config(const FockConfig& cfg);
// Throws OracleError when some |alpha|^2 > dim / 4.
void check_occupancy(const SystemParams& p, const FockConfig& cfg);

// Mixed-radix basis: p1 is the most significant digit, A the least.
struct Basis {
    ModeArray<int> dims{};
    ModeArray<std::size_t> stride{};
    std::size_t size = 0;

    explicit Basis(const ModeArray<int>& d);
    int occupation(std::size_t index, Mode m) const {
        return static_cast<int>(index / stride[idx(m)] % static_cast<std::size_t>(dims[idx(m)]));
    }
};

struct FockState {
    Basis basis;
    std::vector<cplx> amp;

    explicit FockState(const Basis& b) : basis(b), amp(b.size) {}
    double norm() const;
};

// One ladder monomial: coef * prod_m op_m with op_m in {1, a_m, a_m^dag}.
struct LadderTerm {
    cplx coef;
    ModeArray<std::int8_t> shift{};  // -1 annihilate, +1 create, 0 identity
};

// G = diag + sum(terms). Applied matrix-free: each term maps basis index n to
// n + sum(shift * stride) with a sqrt(n) weight; truncated a^dag has its top
// row zeroed and a is its transpose, so the assembled G is exactly Hermitian.
struct FockOperator {
    Basis basis;
    std::vector<double> diag;
    std::vector<LadderTerm> terms;
    bool hermitian = true;

    explicit FockOperator(const Basis& b) : basis(b), diag(b.size) {}

    void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
    // Gershgorin enclosure of the spectrum.
    void spectral_bounds(double& lo, double& hi) const;
    struct Triplet {
        std::size_t row, col;
        cplx value;
    };
    // Explicit sparse entries; only for small bases in tests.
    std::vector<Triplet> to_triplets() const;
};

FockOperator build_g(const SystemParams& p, const FockConfig& cfg);
FockState coherent_product_state(const SystemParams& p, const FockConfig& cfg);

// exp(iGz) state by a Chebyshev expansion, split into substeps so that each
// covers at most kChebyshevSpan of spectral width times length.
inline constexpr double kChebyshevSpan = 50.0;
FockState evolve(const FockState& s, const FockOperator& G, double z, int min_steps = 1);

double expect_number(const FockState& s, Mode m);
double expect_g(const FockState& s, const FockOperator& G);
// <a_i^dag a_j^dag a_j a_i> = |a_j a_i psi|^2.
double pair_moment(const FockState& s, Mode i, Mode j);
FockState lower(const FockState& s, Mode m);

SystemParams unprobed(const SystemParams& p);

ZenoReport oracle_zeno(const SystemParams& p, const FockConfig& cfg, double z, ProbeScenario s);

// Discriminants from exact moments. The truncated initial state is not exactly
// coherent, so its own D values are subtracted unless raw is set.
StatReport oracle_stats(const SystemParams& p, const FockConfig& cfg, double z, bool with_g2 = false,
                        bool raw = false);

struct Drift {
    double norm = 0.0;
    double generator = 0.0;
    double stokes_anti_phonon = 0.0;  // N_S - N_A - N_V
};
// Largest deviation from the initial value over `checkpoints` equal steps.
Drift evolution_drift(const SystemParams& p, const FockConfig& cfg, double z, int checkpoints = 4);

struct TruncationReport {
    bool certified = false;
    double max_change = 0.0;
    std::string reason;
    ModeArray<double> top_population{};  // probability in the highest kept level
    std::vector<Mode> grow;              // modes to enlarge, most populated edge first
};

using Observable = std::function<std::vector<double>(const SystemParams&, const FockConfig&, double)>;
// Mean numbers of all seven modes after evolution.
std::vector<double> mean_numbers(const SystemParams& p, const FockConfig& cfg, double z);

// Certified when the change of `what` between 0 and z moves by less than
// tol_truncation once every dim grows by 2.
TruncationReport certify_truncation(const SystemParams& p, const FockConfig& cfg, double z,
                                    const Observable& what = mean_numbers);

}  // namespace hz::oracle
