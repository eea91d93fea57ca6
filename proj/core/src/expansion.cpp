#include "hyperzeno/expansion.hpp"

#include <bit>
#include <initializer_list>
#include <stdexcept>

namespace hz {

ModeWord ModeWord::parse(std::string_view letters) {
    if (letters.size() > 16) throw std::invalid_argument("ladder word too long");
    ModeWord w;
    w.len = static_cast<std::uint8_t>(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] == 'd')
            w.dag |= static_cast<std::uint16_t>(1u << i);
        else if (letters[i] != 'a')
            throw std::invalid_argument("ladder word letters must be 'a' or 'd'");
    }
    return w;
}

ModeWord ModeWord::adjoint() const {
    ModeWord r;
    r.len = len;
    for (int i = 0; i < len; ++i) {
        const bool created = (dag >> i) & 1u;
        if (!created) r.dag |= static_cast<std::uint16_t>(1u << (len - 1 - i));
    }
    return r;
}

ModeWord ModeWord::then(const ModeWord& right) const {
    if (len + right.len > 16) throw std::length_error("ladder word overflow");
    ModeWord r;
    r.len = static_cast<std::uint8_t>(len + right.len);
    r.dag = static_cast<std::uint16_t>(dag | (right.dag << len));
    return r;
}

bool ModeWord::has_creator() const { return dag != 0; }
bool ModeWord::has_annihilator() const { return std::popcount(static_cast<unsigned>(dag)) < len; }

namespace {

cplx ipow(cplx x, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Normal ordering by repeated a a^dag = a^dag a + 1.
cplx expect_rec(int len, unsigned dag, cplx alpha) {
    for (int i = 0; i + 1 < len; ++i) {
        const bool here = (dag >> i) & 1u, next = (dag >> (i + 1)) & 1u;
        if (!here && next) {
            const unsigned swapped = (dag | (1u << i)) & ~(1u << (i + 1));
            const unsigned low = dag & ((1u << i) - 1u);
            const unsigned high = dag >> (i + 2);
            return expect_rec(len, swapped, alpha) + expect_rec(len - 2, low | (high << i), alpha);
        }
    }
    const int nd = std::popcount(dag);
    return ipow(std::conj(alpha), nd) * ipow(alpha, len - nd);
}

struct Entry {
    int label;
    std::initializer_list<std::pair<Mode, std::string_view>> ops;
};

ModeExpansion build(Mode mode, const cplx* coef, std::initializer_list<Entry> table,
                    std::initializer_list<int> first_order, std::initializer_list<int> probe) {
    ModeExpansion x;
    x.mode = mode;
    for (const auto& e : table) {
        ExpansionTerm t;
        t.label = e.label;
        t.coef = coef[e.label];
        t.order = 2;
        if (e.label == 1) t.order = 0;
        for (int f : first_order)
            if (f == e.label) t.order = 1;
        for (int pr : probe)
            if (pr == e.label) t.probe = true;
        for (const auto& [m, letters] : e.ops) t.word[idx(m)] = ModeWord::parse(letters);
        x.terms.push_back(t);
    }
    return x;
}

using enum Mode;

}  // namespace

cplx coherent_expectation(const ModeWord& w, cplx alpha) { return expect_rec(w.len, w.dag, alpha); }

const ModeExpansion& OperatorExpansion::of(Mode m) const {
    switch (m) {
    case Mode::S: return S;
    case Mode::V: return V;
    case Mode::A: return A;
    default: throw std::invalid_argument("expansions exist only for S, V, A");
    }
}

OperatorExpansion expand(const CoefficientSet& c) {
    OperatorExpansion x;
    x.S = build(S, c.l.data(),
                {{1, {{S, "a"}}},
                 {2, {{L1, "a"}, {L2, "a"}, {V, "d"}}},
                 {3, {{p1, "a"}}},
                 {4, {{p2, "a"}}},
                 {5, {{L1, "aa"}, {L2, "aa"}, {A, "d"}}},
                 {6, {{L1, "ad"}, {V, "dd"}, {A, "a"}}},
                 {7, {{L2, "da"}, {V, "dd"}, {A, "a"}}},
                 {8, {{p1, "a"}, {L2, "a"}, {V, "d"}}},
                 {9, {{p2, "a"}, {L1, "a"}, {V, "d"}}},
                 {10, {{L1, "a"}}},
                 {11, {{L2, "a"}}},
                 {12, {{A, "a"}}},
                 {13, {{A, "a"}}},
                 {14, {{L1, "ad"}, {L2, "ad"}, {S, "a"}}},
                 {15, {{L1, "ad"}, {S, "a"}, {V, "ad"}}},
                 {16, {{L2, "da"}, {S, "a"}, {V, "ad"}}},
                 {17, {{S, "a"}}},
                 {18, {{S, "a"}}}},
                {2, 3, 4}, {3, 4, 8, 9, 10, 11, 12, 13, 17, 18});
    x.V = build(V, c.m.data(),
                {{1, {{V, "a"}}},
                 {2, {{L1, "a"}, {L2, "a"}, {S, "d"}}},
                 {3, {{L1, "d"}, {L2, "d"}, {A, "a"}}},
                 {4, {{L1, "da"}, {S, "d"}, {V, "d"}, {A, "a"}}},
                 {5, {{L2, "da"}, {S, "d"}, {V, "d"}, {A, "a"}}},
                 {6, {{S, "d"}, {V, "d"}, {A, "a"}}},
                 {7, {{p1, "a"}, {L2, "a"}, {S, "d"}}},
                 {8, {{p2, "a"}, {L1, "a"}, {S, "d"}}},
                 {9, {{p1, "d"}, {L1, "a"}, {L2, "a"}}},
                 {10, {{p2, "d"}, {L1, "a"}, {L2, "a"}}},
                 {11, {{p1, "d"}, {L2, "d"}, {A, "a"}}},
                 {12, {{p2, "d"}, {L1, "d"}, {A, "a"}}},
                 {13, {{p1, "a"}, {L1, "d"}, {L2, "d"}}},
                 {14, {{p2, "a"}, {L1, "d"}, {L2, "d"}}},
                 {15, {{L1, "ad"}, {L2, "ad"}, {V, "a"}}},
                 {16, {{L1, "ad"}, {S, "ad"}, {V, "a"}}},
                 {17, {{L2, "da"}, {S, "ad"}, {V, "a"}}},
                 {18, {{L1, "da"}, {L2, "da"}, {V, "a"}}},
                 {19, {{L1, "da"}, {V, "a"}, {A, "da"}}},
                 {20, {{L2, "ad"}, {V, "a"}, {A, "da"}}}},
                {2, 3}, {7, 8, 9, 10, 11, 12, 13, 14});
    x.A = build(A, c.n.data(),
                {{1, {{A, "a"}}},
                 {2, {{L1, "a"}, {L2, "a"}, {V, "a"}}},
                 {3, {{p1, "a"}}},
                 {4, {{p2, "a"}}},
                 {5, {{L1, "aa"}, {L2, "aa"}, {S, "d"}}},
                 {6, {{L1, "ad"}, {S, "a"}, {V, "aa"}}},
                 {7, {{L2, "da"}, {S, "a"}, {V, "aa"}}},
                 {8, {{p1, "a"}, {L2, "a"}, {V, "a"}}},
                 {9, {{p2, "a"}, {L1, "a"}, {V, "a"}}},
                 {10, {{L1, "a"}}},
                 {11, {{L2, "a"}}},
                 {12, {{S, "a"}}},
                 {13, {{S, "a"}}},
                 {14, {{L1, "ad"}, {L2, "ad"}, {A, "a"}}},
                 {15, {{L1, "ad"}, {V, "da"}, {A, "a"}}},
                 {16, {{L2, "da"}, {V, "da"}, {A, "a"}}},
                 {17, {{A, "a"}}},
                 {18, {{A, "a"}}}},
                {2, 3, 4}, {3, 4, 8, 9, 10, 11, 12, 13, 17, 18});
    return x;
}

ModeArray<cplx> amplitudes(const SystemParams& p) {
    ModeArray<cplx> a{};
    for (std::size_t i = 0; i < kModeCount; ++i) a[i] = p.amp[i].value();
    return a;
}

double two_point(const ModeExpansion& xi, const ModeExpansion& xj, const ModeArray<cplx>& alpha,
                 PairFilter filter) {
    double acc = 0.0;
    for (const auto& t : xi.terms) {
        for (const auto& u : xj.terms) {
            if (t.order + u.order > 2) continue;
            if (filter == PairFilter::ProbeOnly && !t.probe && !u.probe) continue;
            cplx v = std::conj(t.coef) * u.coef;
            for (std::size_t m = 0; m < kModeCount; ++m) {
                const ModeWord w = t.word[m].adjoint().then(u.word[m]);
                if (w.len) v *= coherent_expectation(w, alpha[m]);
            }
            acc += v.real();
        }
    }
    return acc;
}

namespace {

// Segments 0 and 3 belong to one pair, 1 and 2 to the other.
bool links_pairs(const std::array<ModeWord, 4>& s) {
    constexpr int group[4] = {0, 1, 1, 0};
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
            if (group[p] != group[q] && s[p].has_annihilator() && s[q].has_creator()) return true;
    return false;
}

}  // namespace

double connected_four_point(const ModeExpansion& xi, const ModeExpansion& xj,
                            const ModeArray<cplx>& alpha) {
    double acc = 0.0;
    for (const auto& t1 : xi.terms)
        for (const auto& t2 : xj.terms) {
            const int o12 = t1.order + t2.order;
            if (o12 > 2) continue;
            for (const auto& t3 : xj.terms) {
                if (o12 + t3.order > 2) continue;
                for (const auto& t4 : xi.terms) {
                    if (o12 + t3.order + t4.order > 2) continue;
                    cplx joint = 1.0, split = 1.0;
                    bool linked = false;
                    for (std::size_t m = 0; m < kModeCount; ++m) {
                        const std::array<ModeWord, 4> s{t1.word[m].adjoint(), t2.word[m].adjoint(),
                                                        t3.word[m], t4.word[m]};
                        if (!s[0].len && !s[1].len && !s[2].len && !s[3].len) continue;
                        const cplx outer = coherent_expectation(s[0].then(s[3]), alpha[m]);
                        const cplx inner = coherent_expectation(s[1].then(s[2]), alpha[m]);
                        split *= outer * inner;
                        if (links_pairs(s)) {
                            linked = true;
                            joint *= coherent_expectation(s[0].then(s[1]).then(s[2]).then(s[3]), alpha[m]);
                        } else {
                            joint *= outer * inner;
                        }
                    }
                    if (!linked) continue;
                    const cplx c = std::conj(t1.coef) * std::conj(t2.coef) * t3.coef * t4.coef;
                    acc += (c * (joint - split)).real();
                }
            }
        }
    return acc;
}

}  // namespace hz
