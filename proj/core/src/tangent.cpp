#include "nestloc/tangent.hpp"

#include <limits>
#include <stdexcept>

namespace nestloc {

namespace {

LaurentPoly tvar(const VarSetPtr& vs, int i, int pw) {
    return LaurentPoly::var(vs, i == 1 ? "T1" : "T2", pw);
}

LaurentPoly rmono(const VarSetPtr& vs, int a, int b) {
    // R_a * R_b^{-1}
    ExpVec e(vs->size(), 0);
    e[vs->index("R" + std::to_string(a))] += 1;
    e[vs->index("R" + std::to_string(b))] -= 1;
    return LaurentPoly::monomial(vs, e, 1);
}

LaurentPoly t1t2(const VarSetPtr& vs, int pw) {
    ExpVec e(vs->size(), 0);
    e[vs->index("T1")] = pw;
    e[vs->index("T2")] = pw;
    return LaurentPoly::monomial(vs, e, 1);
}

} // namespace

LaurentPoly box_character(VarSetPtr vs, const Partition& mu) {
    LaurentPoly p(vs);
    ExpVec e(vs->size(), 0);
    const auto i1 = vs->index("T1");
    const auto i2 = vs->index("T2");
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = 1; c <= mu.part(r); ++c) {
            e[i1] = c - 1;
            e[i2] = r - 1;
            p.add_term(e, 1);
        }
    return p;
}

LaurentPoly dual_character(const LaurentPoly& p) {
    LaurentPoly r(p.varset());
    for (const auto& [e, c] : p.terms()) {
        ExpVec s = e;
        for (auto& x : s)
            x = -x;
        r.add_term(s, c);
    }
    return r;
}

namespace {

struct Modules {
    VarSetPtr vs;
    LaurentPoly W;             // framing: sum of R_a
    std::vector<LaurentPoly> V; // V[0] = outer, V[k] = complement of level k
    LaurentPoly Q, L, one;     // Q = T1^-1 + T2^-1, L = det Q
};

Modules build_modules(const ColoredNestedChain& chain, int rank) {
    if (static_cast<int>(chain.colors.size()) != rank)
        throw std::invalid_argument("rank does not match the colored chain");
    Modules m;
    m.vs = vars::tangent(rank);
    m.one = LaurentPoly::one(m.vs);
    m.Q = tvar(m.vs, 1, -1) + tvar(m.vs, 2, -1);
    m.L = t1t2(m.vs, -1);
    m.W = LaurentPoly::zero(m.vs);
    const int N = chain.levels();
    m.V.assign(static_cast<std::size_t>(N) + 1, LaurentPoly::zero(m.vs));
    for (int a = 1; a <= rank; ++a) {
        LaurentPoly Ra = LaurentPoly::var(m.vs, "R" + std::to_string(a));
        m.W += Ra;
        const NestedChain& ch = chain.colors[static_cast<std::size_t>(a - 1)];
        LaurentPoly outer = box_character(m.vs, ch.mu0);
        m.V[0] += Ra * outer;
        for (int k = 1; k <= N; ++k)
            m.V[static_cast<std::size_t>(k)] +=
                Ra * (outer - box_character(m.vs, ch.mu(k)));
    }
    return m;
}

} // namespace

LaurentPoly tangent_character_oracle(const ColoredNestedChain& chain, int rank) {
    Modules m = build_modules(chain, rank);
    const int N = chain.levels();
    auto hom = [&](const LaurentPoly& A, const LaurentPoly& B) {
        return B * dual_character(A);
    };
    LaurentPoly edge = m.Q - m.one - m.L; // End ⊗ (Q - 1 - Λ²Q)
    LaurentPoly T = hom(m.V[0], m.V[0]) * edge + hom(m.W, m.V[0]) +
                    m.L * hom(m.V[0], m.W);
    if (N >= 1)
        T -= m.L * hom(m.V[1], m.W);
    for (int k = 1; k <= N; ++k) {
        const auto& Vk = m.V[static_cast<std::size_t>(k)];
        const auto& Vp = m.V[static_cast<std::size_t>(k - 1)];
        T += hom(Vk, Vk) * edge;
        T += hom(Vk, Vp) * (m.one + m.L - m.Q);
    }
    return T;
}

LaurentPoly tangent_character_chain(const ColoredNestedChain& chain, int rank,
                                    bool trace_correction) {
    Modules m = build_modules(chain, rank);
    const int N = chain.levels();
    auto hom = [&](const LaurentPoly& A, const LaurentPoly& B) {
        return B * dual_character(A);
    };
    LaurentPoly edge = m.Q - m.one - m.L;
    // unnested moduli part, module form
    LaurentPoly T = hom(m.V[0], m.V[0]) * edge + hom(m.W, m.V[0]) +
                    m.L * hom(m.V[0], m.W);
    if (N == 0)
        return T;
    // obstruction block of the first level
    T -= m.L * hom(m.V[1], m.W);

    /* Literal double-sum blocks, one per level.  The predecessor slot of the
     * first-axis exponent uses the empty partition at k = 1; substituting
     * the outer partition there would create vanishing factors. */
    for (int k = 1; k <= N; ++k) {
        for (int a = 1; a <= rank; ++a) {
            const NestedChain& ca = chain.colors[static_cast<std::size_t>(a - 1)];
            const int M0a = ca.mu0.largest();
            for (int b = 1; b <= rank; ++b) {
                const NestedChain& cb = chain.colors[static_cast<std::size_t>(b - 1)];
                const int N0b = cb.mu0.length();
                LaurentPoly blk = LaurentPoly::zero(m.vs);
                for (int i = 1; i <= M0a; ++i) {
                    for (int j = 1; j <= N0b; ++j) {
                        int mu_k_j = cb.mu(k).part(j);
                        int pred = (k >= 2) ? cb.mu(k - 1).part(j) : 0;
                        int cp_k = ca.mu(k).conj_part(i);
                        int cp_0 = ca.mu0.conj_part(i);
                        LaurentPoly f1 =
                            tvar(m.vs, 1, mu_k_j - i) - tvar(m.vs, 1, pred - i);
                        LaurentPoly f2 =
                            tvar(m.vs, 2, j - cp_k - 1) - tvar(m.vs, 2, j - cp_0 - 1);
                        blk += f1 * f2;
                    }
                }
                T += rmono(m.vs, a, b) * blk;
            }
        }
    }
    if (trace_correction)
        T += LaurentPoly::constant(m.vs, N) * m.L;
    return T;
}

LaurentPoly tangent_character_oracle(const NestedChain& chain) {
    ColoredNestedChain c;
    c.colors = {chain};
    return tangent_character_oracle(c, 1);
}

LaurentPoly tangent_character_chain(const NestedChain& chain, bool trace_correction) {
    ColoredNestedChain c;
    c.colors = {chain};
    return tangent_character_chain(c, 1, trace_correction);
}

LaurentPoly tangent_character_two_step(const NestedChain& chain) {
    if (chain.levels() != 1)
        throw std::invalid_argument("two-step cross-check needs exactly one inner level");
    auto vs = vars::tangent(1);
    LaurentPoly Z0 = box_character(vs, chain.mu0);
    LaurentPoly Z1 = box_character(vs, chain.mu(1));
    LaurentPoly Z0d = dual_character(Z0), Z1d = dual_character(Z1);
    LaurentPoly Linv = t1t2(vs, -1);
    LaurentPoly edge = (LaurentPoly::one(vs) - LaurentPoly::var(vs, "T1")) *
                       (LaurentPoly::one(vs) - LaurentPoly::var(vs, "T2")) * Linv;
    return Z0 + Z1d * Linv + (Z0d * Z1 - Z0d * Z0 - Z1d * Z1) * edge;
}

Int virtual_dimension(const LaurentPoly& character) {
    return character.eval_at_one();
}

FactoredWeight character_weight(const LaurentPoly& character, int rank, Flavor flavor) {
    auto tvs = character.varset();
    auto wvs = vars::weight(rank, flavor == Flavor::ChiY);
    const bool with_y = flavor == Flavor::ChiY;
    // index translation T1->q1, T2->q2, Ra->ta
    std::vector<std::size_t> where(tvs->size());
    where[tvs->index("T1")] = wvs->index("q1");
    where[tvs->index("T2")] = wvs->index("q2");
    for (int a = 1; a <= rank; ++a)
        where[tvs->index("R" + std::to_string(a))] = wvs->index("t" + std::to_string(a));

    FactoredWeight w(wvs);
    const auto yi = with_y ? wvs->index("y") : std::size_t{0};
    for (const auto& [e, c] : character.terms()) {
        if (c == 0)
            continue;
        if (c > std::numeric_limits<int>::max() || c < std::numeric_limits<int>::min())
            throw std::domain_error("character multiplicity out of range");
        int m = c.convert_to<int>();
        ExpVec we(wvs->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            we[where[i]] = e[i];
        w.push(we, -m); // deformations (m > 0) go to the denominator
        if (with_y) {
            ExpVec wy = we;
            wy[yi] += 2; // y^1 on the doubled lattice
            w.push(wy, +m);
        }
    }
    return w;
}

} // namespace nestloc
