#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperzeno/coefficients.hpp"

// Second-order operator solution a_j(z) = sum_i c_i(z) M_i, where each M_i is a
// product of ladder operators taken at z = 0, and coherent-state expectation
// values of products of such expansions truncated at second order in the
// couplings.
namespace hz {

// Ladder word on one mode, leftmost operator first. Bit i of `dag` marks a
// creation operator at position i.
struct ModeWord {
    std::uint8_t len = 0;
    std::uint16_t dag = 0;

    static ModeWord parse(std::string_view letters);  // 'a' annihilate, 'd' create
    ModeWord adjoint() const;
    ModeWord then(const ModeWord& right) const;
    bool has_annihilator() const;
    bool has_creator() const;
};

// <alpha| word |alpha> for a single-mode coherent state.
cplx coherent_expectation(const ModeWord& w, cplx alpha);

struct ExpansionTerm {
    cplx coef;
    int order = 0;       // power of the couplings
    bool probe = false;  // coefficient carries a probe coupling
    int label = 0;       // l/m/n index
    ModeArray<ModeWord> word{};
};

struct ModeExpansion {
    Mode mode = Mode::S;
    std::vector<ExpansionTerm> terms;
};

struct OperatorExpansion {
    ModeExpansion S, V, A;
    const ModeExpansion& of(Mode m) const;
};

OperatorExpansion expand(const CoefficientSet& c);

enum class PairFilter { All, ProbeOnly };

// Re <X_i^dag X_j>, pairs with total order <= 2.
double two_point(const ModeExpansion& xi, const ModeExpansion& xj, const ModeArray<cplx>& alpha,
                 PairFilter filter = PairFilter::All);

// Re [<X_i^dag X_j^dag X_j X_i> - <X_i^dag X_i><X_j^dag X_j>] truncated at
// second order. Only operator orderings that tie the two factors together
// contribute; disconnected products cancel to an exact zero.
double connected_four_point(const ModeExpansion& xi, const ModeExpansion& xj,
                            const ModeArray<cplx>& alpha);

ModeArray<cplx> amplitudes(const SystemParams& p);

}  // namespace hz
