#include "nestloc/invariants.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace nestloc {

namespace {

struct WeightCtx {
    VarSetPtr vs;
    std::size_t q1, q2, y = 0;
    bool with_y = false;
    std::vector<std::size_t> t; // t[a-1], rank entries

    explicit WeightCtx(int rank, Flavor flavor) {
        with_y = flavor == Flavor::ChiY;
        vs = vars::weight(rank, with_y);
        q1 = vs->index("q1");
        q2 = vs->index("q2");
        if (with_y)
            y = vs->index("y");
        for (int a = 1; a <= rank; ++a)
            t.push_back(vs->index("t" + std::to_string(a)));
    }

    // exponent vector of t_a t_b^{-1} q1^e1 q2^e2
    ExpVec mono(int a, int b, int e1, int e2) const {
        ExpVec e(vs->size(), 0);
        e[q1] = e1;
        e[q2] = e2;
        if (a != b) {
            e[t[static_cast<std::size_t>(a - 1)]] += 1;
            e[t[static_cast<std::size_t>(b - 1)]] -= 1;
        }
        return e;
    }

    /* One displayed binomial: multiplies `w` by (1 - M)^mult, and for the
     * chi_-y flavor by (1 - y M)^-mult. */
    void factor(FactoredWeight& w, const ExpVec& e, int mult) const {
        w.push(e, mult);
        if (with_y) {
            ExpVec ey = e;
            ey[y] += 2;
            w.push(ey, -mult);
        }
    }
};

} // namespace

FactoredWeight weight_N(const ColoredNestedChain& chain, int rank, Flavor flavor) {
    WeightCtx ctx(rank, flavor);
    FactoredWeight w(ctx.vs);
    for (int a = 1; a <= rank; ++a) {
        const Partition& mua = chain.colors[static_cast<std::size_t>(a - 1)].mu0;
        for (int b = 1; b <= rank; ++b) {
            const Partition& mub = chain.colors[static_cast<std::size_t>(b - 1)].mu0;
            for (int r = 1; r <= mua.length(); ++r) {
                for (int c = 1; c <= mua.part(r); ++c) {
                    Box s{r, c};
                    int la = leg(s, mua);
                    int ab = arm(s, mub);
                    // (1 - t_b/t_a q1^{-l_a-1} q2^{a_b}) (1 - t_a/t_b q1^{l_a} q2^{-a_b-1})
                    ctx.factor(w, ctx.mono(b, a, -la - 1, ab), +1);
                    ctx.factor(w, ctx.mono(a, b, la, -ab - 1), +1);
                }
            }
        }
    }
    return w;
}

FactoredWeight weight_T(const ColoredNestedChain& chain, int rank, Flavor flavor) {
    WeightCtx ctx(rank, flavor);
    FactoredWeight w(ctx.vs);
    if (chain.levels() < 1)
        return w;
    for (int a = 1; a <= rank; ++a) {
        const NestedChain& ca = chain.colors[static_cast<std::size_t>(a - 1)];
        if (!ca.mu(1).contained_in(ca.mu0))
            throw std::invalid_argument("weight_T: non-nested pair");
        const int M0 = ca.mu0.largest();
        for (int b = 1; b <= rank; ++b) {
            for (int i = 1; i <= M0; ++i) {
                int lo = ca.mu(1).conj_part(i);
                int hi = ca.mu0.conj_part(i);
                for (int j = 1; j <= hi - lo; ++j)
                    ctx.factor(w, ctx.mono(b, a, -i, -j - lo), +1);
            }
        }
    }
    return w;
}

FactoredWeight weight_W(const ColoredNestedChain& chain, int rank, Flavor flavor,
                        WForm form) {
    WeightCtx ctx(rank, flavor);
    FactoredWeight w(ctx.vs);
    const int N = chain.levels();
    for (int k = 1; k <= N; ++k) {
        for (int a = 1; a <= rank; ++a) {
            const NestedChain& ca = chain.colors[static_cast<std::size_t>(a - 1)];
            for (int b = 1; b <= rank; ++b) {
                const NestedChain& cb = chain.colors[static_cast<std::size_t>(b - 1)];
                if (form == WForm::IndexPair) {
                    const int M0 = ca.mu0.largest();
                    const int N0 = cb.mu0.length();
                    for (int i = 1; i <= M0; ++i) {
                        for (int j = 1; j <= N0; ++j) {
                            int cur = cb.mu(k).part(j);
                            int pred = (k >= 2) ? cb.mu(k - 1).part(j) : 0;
                            int cpk = ca.mu(k).conj_part(i);
                            int cp0 = ca.mu0.conj_part(i);
                            ctx.factor(w, ctx.mono(a, b, cur - i, j - cp0 - 1), +1);
                            ctx.factor(w, ctx.mono(a, b, pred - i, j - cpk - 1), +1);
                            ctx.factor(w, ctx.mono(a, b, cur - i, j - cpk - 1), -1);
                            ctx.factor(w, ctx.mono(a, b, pred - i, j - cp0 - 1), -1);
                        }
                    }
                } else {
                    /* rectangular envelope of the outer partition; relative
                     * arms and legs, the k = 1 predecessor slot again reads
                     * the empty partition */
                    const int rows = ca.mu0.length();
                    const int cols = ca.mu0.largest();
                    for (int r = 1; r <= rows; ++r) {
                        for (int c = 1; c <= cols; ++c) {
                            Box s{r, c};
                            int lk = leg(s, cb.mu(k));
                            int lp = (k >= 2) ? leg(s, cb.mu(k - 1)) : -r;
                            int a0 = arm(s, ca.mu0);
                            int ak = arm(s, ca.mu(k));
                            ctx.factor(w, ctx.mono(a, b, lk, -a0 - 1), +1);
                            ctx.factor(w, ctx.mono(a, b, lp, -ak - 1), +1);
                            ctx.factor(w, ctx.mono(a, b, lk, -ak - 1), -1);
                            ctx.factor(w, ctx.mono(a, b, lp, -a0 - 1), -1);
                        }
                    }
                }
            }
        }
    }
    return w;
}

FactoredWeight fixed_point_term(const ColoredNestedChain& chain, int rank, Flavor flavor) {
    FactoredWeight t = weight_T(chain, rank, flavor);
    t *= weight_W(chain, rank, flavor);
    t /= weight_N(chain, rank, flavor);
    return t;
}

FactoredWeight weight_N(const Partition& mu0, Flavor flavor) {
    ColoredNestedChain c;
    c.colors = {NestedChain{mu0, {}}};
    return weight_N(c, 1, flavor);
}

FactoredWeight weight_T(const Partition& mu0, const Partition& mu1, Flavor flavor) {
    ColoredNestedChain c;
    c.colors = {NestedChain{mu0, {mu1}}};
    return weight_T(c, 1, flavor);
}

FactoredWeight weight_W(const NestedChain& chain, Flavor flavor, WForm form) {
    ColoredNestedChain c;
    c.colors = {chain};
    return weight_W(c, 1, flavor, form);
}

namespace {

struct TermData {
    FactoredWeight weight;
    LaurentPoly insertion; // over the weight varset
};

/* Assemble sum_i ins_i * w_i over the least common factored denominator.
 * Deterministic: blocks are reduced in index order whatever the job count. */
RationalFn assemble_sum(VarSetPtr vs, const std::vector<TermData>& terms, int jobs) {
    if (terms.empty())
        return RationalFn::zero(vs);

    using Base = FactoredWeight::Base;
    std::map<Base, int> lcm; // positive counts
    for (const auto& t : terms)
        for (const auto& [b, m] : t.weight.factors())
            if (m < 0) {
                int need = -m;
                auto it = lcm.find(b);
                if (it == lcm.end())
                    lcm.emplace(b, need);
                else
                    it->second = std::max(it->second, need);
            }

    auto expand_numerator = [&](const TermData& t) {
        if (t.weight.is_zero())
            return LaurentPoly::zero(vs);
        LaurentPoly num = LaurentPoly::monomial(vs, t.weight.prefactor_exps(),
                                                t.weight.coefficient());
        num = num * t.insertion;
        auto binom = [&](const Base& b) {
            return LaurentPoly::one(vs) - LaurentPoly::monomial(vs, b.exps, Int(b.sign));
        };
        // genuine numerator factors of this term
        for (const auto& [b, m] : t.weight.factors())
            if (m > 0)
                num = num * binom(b).pow(m);
        // complement of this term's denominator inside the common one
        for (const auto& [b, need] : lcm) {
            auto it = t.weight.factors().find(b);
            int have = (it != t.weight.factors().end() && it->second < 0) ? -it->second : 0;
            if (need > have)
                num = num * binom(b).pow(need - have);
        }
        return num;
    };

    const std::size_t n = terms.size();
    std::vector<LaurentPoly> partial;
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 8) {
        LaurentPoly total = LaurentPoly::zero(vs);
        for (const auto& t : terms)
            total += expand_numerator(t);
        partial.push_back(std::move(total));
    } else {
        const std::size_t nblocks = std::min<std::size_t>(static_cast<std::size_t>(jobs) * 4, n);
        partial.assign(nblocks, LaurentPoly::zero(vs));
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            while (true) {
                std::size_t blk = next.fetch_add(1);
                if (blk >= nblocks)
                    return;
                std::size_t lo = blk * n / nblocks, hi = (blk + 1) * n / nblocks;
                LaurentPoly acc = LaurentPoly::zero(vs);
                for (std::size_t i = lo; i < hi; ++i)
                    acc += expand_numerator(terms[i]);
                partial[blk] = std::move(acc);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    LaurentPoly numerator = LaurentPoly::zero(vs);
    for (const auto& p : partial)
        numerator += p;

    LaurentPoly denominator = LaurentPoly::one(vs);
    std::vector<LaurentPoly> bases;
    for (const auto& [b, m] : lcm) {
        LaurentPoly bin = LaurentPoly::one(vs) -
                          LaurentPoly::monomial(vs, b.exps, Int(b.sign));
        denominator = denominator * bin.pow(m);
        bases.push_back(bin);
    }
    RationalFn out(std::move(numerator), std::move(denominator));
    out.reduce_with(bases);
    return out;
}

} // namespace

ChiResult chi_vir(int rank, const Profile& profile, const ChiOptions& opts) {
    ChiResult res;
    WeightCtx ctx(rank, opts.flavor);
    std::vector<TermData> terms;
    auto visit = [&](const ColoredNestedChain& chain) {
        FactoredWeight w = fixed_point_term(chain, rank, opts.flavor);
        if (opts.y_unit) {
            if (opts.flavor != Flavor::ChiY)
                throw std::invalid_argument("y substitution needs the chi_-y flavor");
            w = w.substitute_unit("y", *opts.y_unit);
        }
        LaurentPoly ins = opts.insertion ? opts.insertion(chain).extend_to(ctx.vs)
                                         : LaurentPoly::one(ctx.vs);
        terms.push_back(TermData{std::move(w), std::move(ins)});
        ++res.fixed_points;
    };
    auto st = for_each_colored_chain(rank, profile, visit);
    if (st == Profile::Status::Infeasible) {
        res.infeasible = true;
        res.value = RationalFn::zero(ctx.vs);
        return res;
    }
    res.value = assemble_sum(ctx.vs, terms, opts.jobs);
    return res;
}

LaurentPoly one_minus_qt() {
    auto vs = vars::qt();
    ExpVec e(vs->size(), 0);
    e[vs->index("q")] = 1;
    e[vs->index("t")] = 1;
    return LaurentPoly::one(vs) - LaurentPoly::monomial(vs, e, 1);
}

RationalFn extract_P(const Partition& mu0, const Profile& profile) {
    auto wvs = vars::weight(1, false);
    std::vector<TermData> terms;
    ColoredNestedChain cc;
    auto visit = [&](const NestedChain& chain) {
        cc.colors = {chain};
        FactoredWeight w = weight_T(cc, 1, Flavor::Euler);
        w *= weight_W(cc, 1, Flavor::Euler);
        terms.push_back(TermData{std::move(w), LaurentPoly::one(wvs)});
    };
    auto st = for_each_chain_with_mu0(mu0, profile, visit);
    if (st == Profile::Status::Infeasible)
        return RationalFn::zero(vars::qt());
    RationalFn sum = assemble_sum(wvs, terms, 1);
    // q = q1^{-1}, t = q2^{-1}
    auto qt = vars::qt();
    std::vector<LaurentPoly::MonomialBinding> bind(wvs->size());
    for (auto& b : bind)
        b.exps.assign(qt->size(), 0);
    bind[wvs->index("q1")].exps = ExpVec{-1, 0};
    bind[wvs->index("q2")].exps = ExpVec{0, -1};
    return sum.substitute(qt, bind);
}

Conjecture1Result conjecture1_check(const Partition& mu0, const Profile& profile) {
    Conjecture1Result r;
    r.mu0 = mu0;
    r.profile = profile;
    RationalFn P = extract_P(mu0, profile);
    const int N = profile.levels();
    LaurentPoly omqt = one_minus_qt();
    RationalFn shifted = P * RationalFn(omqt).pow(N);
    auto wit = is_polynomial(shifted, {"q", "t"});
    r.is_poly = wit.has_value();
    if (wit)
        r.witness = *wit;
    // minimal k with (1-qt)^k P polynomial
    r.pole_order = N + 1; // sentinel when even (1-qt)^N fails
    for (int k = 0; k <= N; ++k) {
        auto w = is_polynomial(P * RationalFn(omqt).pow(k), {"q", "t"});
        if (w) {
            r.pole_order = k;
            break;
        }
    }
    auto q = P / RationalFn(omqt).pow(N);
    if (auto qq = is_polynomial(q, {"q", "t"}))
        r.q_quotient = *qq;
    return r;
}

} // namespace nestloc
