#include "nestloc/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestloc {

RationalFn SymPoly::coeff(const Partition& label) const {
    auto it = coeffs.find(label);
    if (it == coeffs.end())
        return RationalFn::zero(vs);
    return it->second;
}

namespace {

struct Cell {
    int r, c;
};

/* inv and maj of a filling, in the fixed reading convention: rows are read
 * from the last (shortest) to the first, left to right; a descent compares a
 * box with the one in the previous row of the same column; attack pairs are
 * same-row pairs and (row r, col j) vs (row r-1, col k > j). */
struct FillingStats {
    const Partition& mu;
    std::vector<Cell> cells;        // reading order
    std::vector<int> conj;          // conjugate parts, 1-based

    explicit FillingStats(const Partition& m) : mu(m) {
        for (int r = m.length(); r >= 1; --r)
            for (int c = 1; c <= m.part(r); ++c)
                cells.push_back({r, c});
        conj.resize(static_cast<std::size_t>(m.largest()) + 1, 0);
        for (int c = 1; c <= m.largest(); ++c)
            conj[static_cast<std::size_t>(c)] = m.conj_part(c);
    }

    // sigma is indexed [r-1][c-1]
    std::pair<int, int> inv_maj(const std::vector<std::vector<int>>& sigma) const {
        int maj = 0;
        for (int r = 2; r <= mu.length(); ++r)
            for (int c = 1; c <= mu.part(r); ++c)
                if (sigma[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] >
                    sigma[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)]) {
                    int leglen = conj[static_cast<std::size_t>(c)] - r;
                    maj += leglen + 1;
                }
        int big = 0; // attack inversions in reading order
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                const Cell &u = cells[i], &v = cells[j];
                bool attack = (u.r == v.r) || (v.r == u.r - 1 && v.c < u.c);
                if (!attack)
                    continue;
                if (sigma[static_cast<std::size_t>(u.r - 1)][static_cast<std::size_t>(u.c - 1)] >
                    sigma[static_cast<std::size_t>(v.r - 1)][static_cast<std::size_t>(v.c - 1)])
                    ++big;
            }
        int armsum = 0; // arm over descents
        for (int r = 2; r <= mu.length(); ++r)
            for (int c = 1; c <= mu.part(r); ++c)
                if (sigma[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] >
                    sigma[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)])
                    armsum += mu.part(r) - c;
        return {big - armsum, maj};
    }
};

} // namespace

SymPoly modified_macdonald(const Partition& mu, int n_vars) {
    if (n_vars < mu.size())
        throw std::invalid_argument(
            "modified_macdonald: need at least |mu| variables for stable coefficients");
    SymPoly out;
    out.degree = mu.size();
    out.vs = vars::qt();
    if (mu.size() == 0) {
        out.coeffs.emplace(Partition::empty(), RationalFn::one(out.vs));
        return out;
    }

    FillingStats stats(mu);
    std::vector<std::vector<int>> sigma(static_cast<std::size_t>(mu.length()));
    for (int r = 1; r <= mu.length(); ++r)
        sigma[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(mu.part(r)), 0);

    std::map<Partition, LaurentPoly> acc;
    std::vector<int> content(static_cast<std::size_t>(n_vars) + 1, 0);
    const auto qi = out.vs->index("q");
    const auto ti = out.vs->index("t");

    std::function<void(int)> rec = [&](int idx) {
        if (idx == mu.size()) {
            // keep only the canonical (weakly decreasing) contents
            for (int v = 1; v < n_vars; ++v)
                if (content[static_cast<std::size_t>(v)] < content[static_cast<std::size_t>(v + 1)])
                    return;
            std::vector<int> parts;
            for (int v = 1; v <= n_vars; ++v)
                if (content[static_cast<std::size_t>(v)] > 0)
                    parts.push_back(content[static_cast<std::size_t>(v)]);
            Partition label(parts);
            auto [inv, maj] = stats.inv_maj(sigma);
            ExpVec e(out.vs->size(), 0);
            e[qi] = inv;
            e[ti] = maj;
            auto it = acc.find(label);
            if (it == acc.end())
                it = acc.emplace(label, LaurentPoly::zero(out.vs)).first;
            it->second.add_term(e, 1);
            return;
        }
        const Cell& cell = stats.cells[static_cast<std::size_t>(idx)];
        for (int v = 1; v <= n_vars; ++v) {
            sigma[static_cast<std::size_t>(cell.r - 1)][static_cast<std::size_t>(cell.c - 1)] = v;
            ++content[static_cast<std::size_t>(v)];
            rec(idx + 1);
            --content[static_cast<std::size_t>(v)];
        }
    };
    rec(0);

    for (auto& [label, poly] : acc)
        out.coeffs.emplace(label, RationalFn(std::move(poly)));
    return out;
}

RationalFn hall_pair_h(const Partition& mu, const SymPoly& f) {
    if (mu.size() != f.degree)
        throw std::invalid_argument("hall_pair_h: degree mismatch");
    return f.coeff(mu);
}

Int kostka_number(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("kostka_number: size mismatch");
    if (lambda.size() == 0)
        return 1;
    // fill the diagram of lambda box by box in row-major order
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(lambda.length()));
    for (int r = 1; r <= lambda.length(); ++r)
        tab[static_cast<std::size_t>(r - 1)].assign(
            static_cast<std::size_t>(lambda.part(r)), 0);
    std::vector<int> remaining;
    for (int j = 1; j <= nu.length(); ++j)
        remaining.push_back(nu.part(j));
    Int count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r > lambda.length()) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc > lambda.part(r)) {
            nr = r + 1;
            nc = 1;
        }
        for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            if (c > 1 && tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)] > v)
                continue; // weakly increasing along rows
            if (r > 1 && lambda.part(r - 1) >= c &&
                tab[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] >= v)
                continue; // strictly increasing down columns
            tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
            --remaining[static_cast<std::size_t>(v - 1)];
            rec(nr, nc);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
        tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 0;
    };
    rec(1, 1);
    return count;
}

bool dominates(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        return false;
    int a = 0, b = 0;
    int len = std::max(lambda.length(), nu.length());
    for (int i = 1; i <= len; ++i) {
        a += lambda.part(i);
        b += nu.part(i);
        if (a < b)
            return false;
    }
    return true;
}

std::map<Partition, LaurentPoly> modified_kostka_row(const Partition& mu) {
    const int n = mu.size();
    SymPoly H = modified_macdonald(mu, std::max(n, 1));
    auto vs = vars::qt();
    // partitions of n, dominance-compatible order (lex-descending dominates first)
    std::vector<Partition> all = enumerate_partitions(n);
    std::map<Partition, LaurentPoly> d;
    for (const auto& nu : all) {
        RationalFn c = H.coeff(nu);
        for (const auto& lam : all) {
            if (lam == nu || !dominates(lam, nu))
                continue;
            auto it = d.find(lam);
            if (it == d.end())
                continue;
            Int k = kostka_number(lam, nu);
            if (k != 0)
                c = c - RationalFn(it->second * k);
        }
        auto poly = c.to_polynomial();
        if (!poly)
            throw std::logic_error("modified_kostka_row: non-polynomial Schur coefficient");
        for (const auto& [e, cf] : poly->terms())
            if (cf < 0 || e[0] < 0 || e[1] < 0)
                throw std::logic_error("modified_kostka_row: negative Kostka data");
        d.emplace(nu, std::move(*poly));
    }
    return d;
}

LaurentPoly modified_kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("modified_kostka: size mismatch");
    auto row = modified_kostka_row(mu);
    auto it = row.find(lambda);
    if (it == row.end())
        return LaurentPoly::zero(vars::qt());
    return it->second;
}

std::string MacdonaldConvention::to_string() const {
    std::string s = swap_qt ? "q<->t" : "identity";
    if (transpose)
        s += ", transposed shape";
    return s;
}

namespace {

Profile staircase_profile(const Partition& mu0) {
    Profile p;
    p.n0 = mu0.size();
    for (int k = 1; k <= mu0.size() - 1; ++k)
        p.inner.push_back(mu0.size() - k); // |mu_k| = k
    return p;
}

RationalFn staircase_localization_q(const Partition& mu0, bool& exact) {
    Profile p = staircase_profile(mu0);
    const int N = p.levels();
    RationalFn P = extract_P(mu0, p);
    RationalFn Q = P / RationalFn(one_minus_qt()).pow(N);
    exact = is_polynomial(Q, {"q", "t"}).has_value();
    return Q;
}

LaurentPoly apply_convention(const LaurentPoly& p, const MacdonaldConvention& cv) {
    return cv.swap_qt ? p.swap_vars("q", "t") : p;
}

/* The Macdonald side of the staircase identity: the coefficient of the
 * fully refined monomial m_(1^n) in the modified Macdonald polynomial,
 * equivalently sum_lambda K~_{lambda,mu0} K_{lambda,(1^n)}. */
RationalFn kostka_weighted_sum(const Partition& mu0, const MacdonaldConvention& cv) {
    const int n0 = mu0.size();
    Partition shape = cv.transpose ? mu0.conjugate() : mu0;
    SymPoly H = modified_macdonald(shape, std::max(n0, 1));
    Partition column(std::vector<int>(static_cast<std::size_t>(n0), 1));
    RationalFn c = hall_pair_h(column, H);
    return cv.swap_qt ? c.swap_vars("q", "t") : c;
}

LaurentPoly kostka_plain_sum(const Partition& mu0, const MacdonaldConvention& cv,
                             int max_length) {
    Partition shape = cv.transpose ? mu0.conjugate() : mu0;
    auto row = modified_kostka_row(shape);
    LaurentPoly sum = LaurentPoly::zero(vars::qt());
    for (const auto& [lam, k] : row)
        if (lam.length() <= max_length)
            sum += apply_convention(k, cv);
    return sum;
}

} // namespace

const MacdonaldConvention& detected_convention() {
    static const MacdonaldConvention cv = [] {
        std::vector<MacdonaldConvention> cands = {
            {false, false}, {true, false}, {false, true}, {true, true}};
        std::vector<bool> alive(cands.size(), true);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& mu0 : enumerate_partitions(n)) {
                bool exact = false;
                RationalFn qloc = staircase_localization_q(mu0, exact);
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    if (!alive[i])
                        continue;
                    if (!(qloc == kostka_weighted_sum(mu0, cands[i])))
                        alive[i] = false;
                }
            }
        }
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (alive[i])
                return cands[i];
        throw std::logic_error("no Macdonald convention matches the localization values");
    }();
    return cv;
}

Conjecture2Result conjecture2_check(const Partition& mu0) {
    Conjecture2Result r;
    r.mu0 = mu0;
    r.profile = staircase_profile(mu0);
    const int n0 = mu0.size();
    r.q_localization = staircase_localization_q(mu0, r.division_exact);

    const MacdonaldConvention& cv = detected_convention();
    RationalFn mac = kostka_weighted_sum(mu0, cv);
    if (auto poly = mac.to_polynomial())
        r.q_macdonald = *poly;
    r.equal = r.q_localization == mac;

    Partition shape = cv.transpose ? mu0.conjugate() : mu0;
    SymPoly H = modified_macdonald(shape, std::max(n0, 1));
    RationalFn hall = hall_pair_h(shape, H);
    r.q_hall = cv.swap_qt ? hall.swap_vars("q", "t") : hall;
    r.hall_matches = r.q_localization == r.q_hall;

    for (int v = 1; v <= n0; ++v)
        r.ksum_by_vars.push_back(kostka_plain_sum(mu0, cv, v));
    return r;
}

SymPoly assemble_Z_MD(int n_max, int levels) {
    if (levels < 0 || n_max < 0)
        throw std::invalid_argument("assemble_Z_MD: bad bounds");
    SymPoly out;
    out.vs = vars::qt();
    out.degree = n_max;
    auto qtv = out.vs;
    std::vector<LaurentPoly::MonomialBinding> bind(2);
    bind[0].exps = ExpVec{-1, 0}; // q1 -> q^{-1}
    bind[1].exps = ExpVec{0, -1}; // q2 -> t^{-1}

    for (int n = 0; n <= n_max; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            if (lam.length() > levels + 1)
                continue; // exponent vector has levels+1 slots
            // canonical profile: sorted m-vector lam padded with zeros
            Profile p;
            std::vector<int> mt(static_cast<std::size_t>(levels) + 1, 0);
            for (int i = 0; i < lam.length(); ++i)
                mt[static_cast<std::size_t>(i)] = lam.part(i + 1);
            int acc = 0;
            std::vector<int> nvec(static_cast<std::size_t>(levels) + 1, 0);
            for (int i = levels; i >= 0; --i) {
                acc += mt[static_cast<std::size_t>(i)];
                nvec[static_cast<std::size_t>(i)] = acc;
            }
            p.n0 = nvec[0];
            for (int i = 1; i <= levels; ++i)
                p.inner.push_back(nvec[static_cast<std::size_t>(i)]);
            auto chi = chi_vir(1, p, {});
            out.coeffs.emplace(lam, chi.value.substitute(qtv, bind));
        }
    }
    return out;
}

} // namespace nestloc
