#include "nestloc/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestloc {

int patch_count(Surface s) { return s == Surface::P2 ? 3 : 4; }

std::string surface_name(Surface s) { return s == Surface::P2 ? "P2" : "P1xP1"; }

std::vector<LaurentPoly::MonomialBinding> patch_substitution(Surface s, int patch,
                                                             const VarSetPtr& vs) {
    if (patch < 0 || patch >= patch_count(s))
        throw std::invalid_argument("patch index out of range");
    std::vector<LaurentPoly::MonomialBinding> bind(vs->size());
    for (std::size_t i = 0; i < vs->size(); ++i) {
        bind[i].exps.assign(vs->size(), 0);
        bind[i].exps[i] = vs->den(i); // identity by default
    }
    const auto i1 = vs->index("q1");
    const auto i2 = vs->index("q2");
    auto set = [&](std::size_t which, int e1, int e2) {
        bind[which].exps.assign(vs->size(), 0);
        bind[which].exps[i1] = e1;
        bind[which].exps[i2] = e2;
    };
    if (s == Surface::P2) {
        switch (patch) {
        case 0: break;                               // (q1, q2)
        case 1: set(i1, -1, 0); set(i2, -1, 1); break; // (1/q1, q2/q1)
        case 2: set(i1, 0, -1); set(i2, 1, -1); break; // (1/q2, q1/q2)
        }
    } else {
        switch (patch) {
        case 0: break;                               // (q1, q2)
        case 1: set(i2, 0, -1); break;               // (q1, 1/q2)
        case 2: set(i1, -1, 0); break;               // (1/q1, q2)
        case 3: set(i1, -1, 0); set(i2, 0, -1); break; // (1/q1, 1/q2)
        }
    }
    return bind;
}

int s_count(const Partition& mu0) {
    Partition c = mu0.conjugate();
    int n = 0;
    for (int r = 1; r <= c.length(); ++r)
        for (int col = 1; col <= c.part(r); ++col) {
            Box s{r, col};
            int a = arm(s, c), l = leg(s, c);
            if (a <= l && l <= a + 1)
                ++n;
        }
    return n;
}

int s_pair(const NestedChain& chain, int i1, int i2) {
    const int N = chain.levels();
    if (i1 < 0 || i1 > N || i2 < 0 || i2 > N)
        throw std::invalid_argument("s_pair: level index out of range");
    const Partition& m1 = chain.mu(i1);
    const Partition& m2 = chain.mu(i2);
    int n = 0;
    for (int r = 1; r <= chain.mu0.length(); ++r)
        for (int c = 1; c <= chain.mu0.largest(); ++c) {
            Box s{r, c};
            int l1 = leg(s, m1), a2 = arm(s, m2);
            if (l1 > a2 + 1 || (l1 == a2 + 1 && a2 < -1))
                ++n;
        }
    return n;
}

namespace {

constexpr long long kConeA = 997;  // q1 exponent (dominant: the inner limit)
constexpr long long kConeB = 1009; // genericity double check

std::vector<long long> cone_weights(const VarSetPtr& vs, long long w1) {
    std::vector<long long> w(vs->size(), 0);
    w[vs->index("q1")] = -w1; // q = u^{-w1} -> infinity as u -> 0+
    w[vs->index("q2")] = -1;
    return w;
}

LaurentPoly limit_to_poly(const FactoredWeight& w, const char* what) {
    auto l1 = w.cone_limit(cone_weights(w.varset(), kConeA));
    auto l2 = w.cone_limit(cone_weights(w.varset(), kConeB));
    if (l1.kind != LimitKind::Finite || l2.kind != LimitKind::Finite)
        throw std::domain_error(std::string("patch limit diverges for ") + what);
    if (!(l1.value == l2.value))
        throw std::domain_error(std::string("patch limit depends on the cone for ") + what);
    auto p = l1.value.to_polynomial();
    if (!p)
        throw std::domain_error(std::string("patch limit is not a y-polynomial for ") + what);
    return *p;
}

} // namespace

PatchLimit patch_limit_oracle(const NestedChain& chain, Surface s, int patch) {
    ColoredNestedChain cc;
    cc.colors = {chain};
    auto N = weight_N(cc, 1, Flavor::ChiY);
    auto T = weight_T(cc, 1, Flavor::ChiY);
    auto W = weight_W(cc, 1, Flavor::ChiY);
    auto vs = N.varset();
    auto bind = patch_substitution(s, patch, vs);
    PatchLimit out;
    out.inv_n = limit_to_poly(N.inverse().substitute(vs, bind), "1/N");
    out.t_part = limit_to_poly(T.substitute(vs, bind), "T");
    out.w_part = limit_to_poly(W.substitute(vs, bind), "W");
    out.full = limit_to_poly((T * W / N).substitute(vs, bind), "T*W/N");
    return out;
}

PatchPrediction patch_prediction(const NestedChain& chain, Surface s, int patch) {
    PatchPrediction p;
    const int size = chain.mu0.size();
    const int M0 = chain.mu0.largest();
    const int N = chain.levels();
    const int skew1 = N >= 1 ? size - chain.mu(1).size() : 0;
    int w1 = 0; // the nontrivial nesting exponent of the q2/q1-type patch
    for (int k = 1; k <= N; ++k)
        w1 += s_pair(chain, k, k) + s_pair(chain, k - 1, 0) - s_pair(chain, k, 0) -
              s_pair(chain, k - 1, k);
    if (s == Surface::P2) {
        switch (patch) {
        case 0: p = {size - M0, 0, 0}; break;
        case 1: p = {size, -skew1, w1}; break;
        case 2: p = {size + s_count(chain.mu0), 0, 0}; break;
        }
    } else {
        switch (patch) {
        case 0: p = {size - M0, 0, 0}; break;
        case 1: p = {size, 0, 0}; break;
        case 2: p = {size, -skew1, 0}; break;
        case 3: p = {size + M0, -skew1, 0}; break;
        }
    }
    return p;
}

int assembled_form_exponent(const NestedChain& chain, Surface s, int patch) {
    const int size = chain.mu0.size();
    const int M0 = chain.mu0.largest();
    const int N = chain.levels();
    const int skew1 = N >= 1 ? size - chain.mu(1).size() : 0;
    if (s == Surface::P2) {
        int w1 = 0;
        for (int k = 1; k <= N; ++k)
            w1 += s_pair(chain, k, k) + s_pair(chain, k - 1, 0) - s_pair(chain, k, 0) -
                  s_pair(chain, k - 1, k);
        switch (patch) {
        case 0: return size + M0;            // sign flip vs the component limit
        case 1: return size - skew1 + w1;
        case 2: return size - s_count(chain.mu0);
        }
    } else {
        switch (patch) {
        case 0: return size - M0;
        case 1: return size;
        case 2: return size - skew1;
        case 3: return size - skew1 + M0;
        }
    }
    return 0;
}

namespace {

LaurentPoly y_power(const VarSetPtr& vs, int k) {
    ExpVec e(vs->size(), 0);
    e[vs->index("y")] = 2 * k;
    return LaurentPoly::monomial(vs, e, 1);
}

} // namespace

std::vector<LimitReportRow> patch_limit_report(Surface s, const Profile& profile) {
    std::vector<LimitReportRow> rows;
    for_each_chain(profile, [&](const NestedChain& chain) {
        for (int patch = 0; patch < patch_count(s); ++patch) {
            LimitReportRow row;
            row.surface = s;
            row.patch = patch;
            row.chain = chain;
            row.predicted = patch_prediction(chain, s, patch);
            auto lim = patch_limit_oracle(chain, s, patch);
            row.oracle_full = lim.full;
            row.oracle_inv_n = lim.inv_n;
            row.oracle_t = lim.t_part;
            row.oracle_w = lim.w_part;
            auto vs = lim.full.varset();
            row.match_components = lim.inv_n == y_power(vs, row.predicted.inv_n_exp) &&
                                   lim.t_part == y_power(vs, row.predicted.t_exp) &&
                                   lim.w_part == y_power(vs, row.predicted.w_exp);
            row.match_total = lim.full == y_power(vs, row.predicted.total());
            row.match_assembled =
                lim.full == y_power(vs, assembled_form_exponent(chain, s, patch));
            rows.push_back(std::move(row));
        }
    });
    return rows;
}

SurfaceSeries surface_chi_y_series(Surface s, int n_total_max, int levels) {
    SurfaceSeries out;
    out.surface = s;
    out.levels = levels;
    out.n_total_max = n_total_max;
    const int np = patch_count(s);
    out.patch_factors.assign(static_cast<std::size_t>(np), {});
    auto vs = vars::weight(1, true);

    // enumerate feasible profiles with n0 + sum n_i <= n_total_max
    std::vector<Profile> profiles;
    std::function<void(Profile&, int, int)> grow = [&](Profile& p, int level, int budget) {
        if (level == levels) {
            profiles.push_back(p);
            return;
        }
        int cap = level == 0 ? p.n0 : p.inner[static_cast<std::size_t>(level - 1)];
        for (int v = 0; v <= std::min(cap, budget); ++v) {
            p.inner.push_back(v);
            grow(p, level + 1, budget - v);
            p.inner.pop_back();
        }
    };
    for (int n0 = 0; n0 <= n_total_max; ++n0) {
        Profile p;
        p.n0 = n0;
        grow(p, 0, n_total_max - n0);
    }

    for (const auto& p : profiles) {
        std::vector<int> key;
        key.push_back(p.n0);
        for (int v : p.inner)
            key.push_back(v);
        int weight1 = p.n0;
        for (int v : p.inner)
            weight1 += v;
        if (weight1 > n_total_max)
            continue;
        std::vector<LaurentPoly> factor(static_cast<std::size_t>(np),
                                        LaurentPoly::zero(vs));
        auto rows = patch_limit_report(s, p);
        for (const auto& row : rows) {
            factor[static_cast<std::size_t>(row.patch)] += row.oracle_full;
            if (!row.match_total)
                ++out.discrepancies;
            out.report.push_back(row);
        }
        for (int ell = 0; ell < np; ++ell)
            out.patch_factors[static_cast<std::size_t>(ell)][key] =
                factor[static_cast<std::size_t>(ell)];
    }

    // assembled product with total-degree truncation
    std::map<std::vector<int>, LaurentPoly> acc;
    {
        std::vector<int> zero(static_cast<std::size_t>(levels) + 1, 0);
        acc.emplace(zero, LaurentPoly::one(vs));
    }
    auto weight1 = [](const std::vector<int>& k) {
        int w = 0;
        for (int v : k)
            w += v;
        return w;
    };
    for (int ell = 0; ell < np; ++ell) {
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [ka, va] : acc) {
            for (const auto& [kb, vb] : out.patch_factors[static_cast<std::size_t>(ell)]) {
                std::vector<int> k(ka.size());
                for (std::size_t i = 0; i < k.size(); ++i)
                    k[i] = ka[i] + kb[i];
                if (weight1(k) > n_total_max)
                    continue;
                LaurentPoly prod = va * vb;
                auto it = next.find(k);
                if (it == next.end())
                    next.emplace(std::move(k), std::move(prod));
                else
                    it->second += prod;
            }
        }
        acc = std::move(next);
    }
    out.assembled = std::move(acc);
    return out;
}

namespace {

/* Chains of partitions mu0 ⊇ nu_1 ⊇ ... ⊇ nu_j (all nonempty), counted by
 * total box count.  Layer-sequence recursion, independent of the row-wise
 * plane-partition enumeration it is checked against. */
void count_layer_chains(const Partition& top, int budget, const Int& mult,
                        std::vector<Int>& out, int used) {
    out[static_cast<std::size_t>(used)] += mult;
    for (int s = 1; s <= budget; ++s)
        for (const auto& nxt : enumerate_subpartitions(s, top))
            count_layer_chains(nxt, budget - s, mult, out, used + s);
}

} // namespace

MacmahonResult macmahon_check(int n_max) {
    MacmahonResult r;
    r.chain_counts.assign(static_cast<std::size_t>(n_max) + 1, 0);
    r.chain_counts[0] = 1;
    for (int s0 = 1; s0 <= n_max; ++s0)
        for (const auto& mu0 : enumerate_partitions(s0))
            count_layer_chains(mu0, n_max - s0, 1, r.chain_counts, s0);

    for (int m = 0; m <= n_max; ++m)
        r.plane_partitions.push_back(plane_partition_count(m));

    /* literal profile grading: nesting depth j >= 0, inner profile entries
     * n_i >= 1 weakly decreasing, graded by n0 + n_1 + ... + n_j */
    r.profile_grading.assign(static_cast<std::size_t>(n_max) + 1, 0);
    r.profile_grading[0] = 1;
    for (int total = 1; total <= n_max; ++total) {
        for (int n0 = 1; n0 <= total; ++n0) {
            // compositions of total - n0 into weakly decreasing parts 1..n0
            std::vector<int> inner;
            std::function<void(int, int)> rec = [&](int rem, int cap) {
                if (rem == 0) {
                    Profile p;
                    p.n0 = n0;
                    p.inner = inner;
                    if (p.status() == Profile::Status::Ok)
                        r.profile_grading[static_cast<std::size_t>(total)] += count_chains(p);
                    return;
                }
                for (int v = std::min(rem, cap); v >= 1; --v) {
                    inner.push_back(v);
                    rec(rem - v, v);
                    inner.pop_back();
                }
            };
            rec(total - n0, n0);
        }
    }

    r.match = r.chain_counts == r.plane_partitions;
    r.sign_convention =
        "chain counts are nonnegative and match the plane-partition series with "
        "positive signs; the alternating-sign form differs by (-1)^order";
    return r;
}

namespace {

/* chi_-y at y = 1: every factor pair collapses to 1, so the genus evaluates
 * to the number of fixed points.  Computed through the weight pipeline so
 * the specialization path itself is exercised. */
Int euler_number_at_y1(int rank, const Profile& p) {
    ChiOptions opts;
    opts.flavor = Flavor::ChiY;
    opts.y_unit = 1;
    auto chi = chi_vir(rank, p, opts);
    auto poly = chi.value.to_polynomial();
    if (!poly || !poly->is_constant())
        throw std::logic_error("euler_number_at_y1: nonconstant value");
    return poly->eval_at_one();
}

} // namespace

SmoothNestedResult smooth_nested_check(int n_max, int rank) {
    SmoothNestedResult out;
    for (int n = 0; n <= n_max; ++n) {
        // expected: rank-fold convolution of the partition series
        std::vector<Int> conv(static_cast<std::size_t>(n) + 1, 0);
        conv[0] = 1;
        for (int rep = 0; rep < rank; ++rep) {
            std::vector<Int> nxt(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j)
                    nxt[static_cast<std::size_t>(i + j)] +=
                        conv[static_cast<std::size_t>(i)] * partition_count(j);
            conv = std::move(nxt);
        }
        out.expected.push_back(conv[static_cast<std::size_t>(n)]);

        Profile trivial;
        trivial.n0 = n;
        trivial.inner = {0};
        out.values.push_back(euler_number_at_y1(rank, trivial));

        if (n == 0) {
            out.one_box_family.push_back(1);
        } else {
            Profile one_box;
            one_box.n0 = n;
            one_box.inner = {1};
            out.one_box_family.push_back(euler_number_at_y1(rank, one_box));
        }
        if (out.values.back() != out.expected.back())
            out.match = false;
    }
    return out;
}

} // namespace nestloc
