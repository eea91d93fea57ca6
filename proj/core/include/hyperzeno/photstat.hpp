#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hyperzeno/model.hpp"

namespace hz {

// Single-mode (S, V, A) and intermodal (SV, SA, VA) discriminants
// D = <normal-ordered pair moment> - product of means.
enum class StatKey : int { S = 0, V, A, SV, SA, VA };
inline constexpr std::array<StatKey, 6> kStatKeys{StatKey::S,  StatKey::V,  StatKey::A,
                                                  StatKey::SV, StatKey::SA, StatKey::VA};
std::string_view stat_name(StatKey k);

struct StatSet {
    std::array<double, 6> v{};
    double& operator[](StatKey k) { return v[static_cast<int>(k)]; }
    double operator[](StatKey k) const { return v[static_cast<int>(k)]; }
};

enum class Bunching { Antibunched, Unbunched, Bunched };
std::string_view bunching_name(Bunching b);
inline constexpr double kDefaultStatTol = 1e-12;
Bunching classify_bunching(double D, double tol = kDefaultStatTol);

// Closed forms. D_S and D_VA are the printed expressions, D_A = 0, D_V and D_SV
// follow the printed expressions term by term with every ratio of mismatches
// rewritten as an entire kernel. D_SA is the second-order result
// 2 g chi |aL1|^2 |aL2|^2 |beta| |delta| Re[e^{i(dthS-dthA)} conj(E1(dkS) E1(-dkA) - K2(dkS,-dkA))].
std::array<double, 3> d_single(const SystemParams& p, double z);  // S, V, A
std::array<double, 3> d_pair(const SystemParams& p, double z);    // SV, SA, VA
StatSet d_closed_form(const SystemParams& p, double z);

// The same discriminants evaluated directly from the coefficient tables by
// coherent-state normal ordering, truncated at second order.
StatSet d_expansion(const SystemParams& p, double z);

// Second-order <N_mode> from the coefficient tables; mode in {S, V, A}.
double mean_number(const SystemParams& p, double z, Mode mode);

// 1 + D / (n_i n_j); throws std::domain_error if a mean is <= tol.
double g2_normalize(double D, double n_i, double n_j, double tol = kDefaultStatTol);

enum class StatSource { ClosedForm, Expansion, Oracle };
std::string_view source_name(StatSource s);

struct StatReport {
    double z = 0.0;
    StatSource source = StatSource::ClosedForm;
    StatSet D;
    std::optional<StatSet> g2;
    std::array<double, 3> mean{};  // S, V, A, filled when g2 is requested
    double tol = kDefaultStatTol;
    Bunching bunching(StatKey k) const { return classify_bunching(D[k], tol); }
};

StatReport stat_report(const SystemParams& p, double z, StatSource source, bool with_g2 = false);

}  // namespace hz
