#include "nestloc/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace nestloc {

NomeSeries::NomeSeries(VarSetPtr vs, int qmax) : vs_(std::move(vs)), qmax_(qmax) {
    if (qmax_ < 0)
        throw std::invalid_argument("NomeSeries: negative truncation order");
    c_.assign(static_cast<std::size_t>(qmax_) + 1, RationalFn::zero(vs_));
}

NomeSeries NomeSeries::one(VarSetPtr vs, int qmax) {
    NomeSeries s(std::move(vs), qmax);
    s.c_[0] = RationalFn::one(s.vs_);
    return s;
}

NomeSeries NomeSeries::operator+(const NomeSeries& o) const {
    NomeSeries r(vs_, std::min(qmax_, o.qmax_));
    for (int k = 0; k <= r.qmax_; ++k)
        r.c_[static_cast<std::size_t>(k)] =
            c_[static_cast<std::size_t>(k)] + o.c_[static_cast<std::size_t>(k)];
    return r;
}

NomeSeries NomeSeries::operator*(const NomeSeries& o) const {
    NomeSeries r(vs_, std::min(qmax_, o.qmax_));
    for (int k = 0; k <= r.qmax_; ++k) {
        RationalFn acc = RationalFn::zero(vs_);
        for (int i = 0; i <= k; ++i)
            acc = acc + c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(k - i)];
        r.c_[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return r;
}

NomeSeries NomeSeries::scaled(const RationalFn& s) const {
    NomeSeries r(vs_, qmax_);
    for (int k = 0; k <= qmax_; ++k)
        r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * s;
    return r;
}

NomeSeries NomeSeries::inverse() const {
    if (c_[0].is_zero())
        throw std::domain_error("NomeSeries::inverse: zero constant term");
    NomeSeries r(vs_, qmax_);
    RationalFn inv0 = RationalFn::one(vs_) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= qmax_; ++k) {
        RationalFn acc = RationalFn::zero(vs_);
        for (int i = 1; i <= k; ++i)
            acc = acc + c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(k - i)];
        r.c_[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return r;
}

NomeSeries NomeSeries::pow(int n) const {
    NomeSeries base = n >= 0 ? *this : inverse();
    NomeSeries r = NomeSeries::one(vs_, qmax_);
    for (int t = 0; t < std::abs(n); ++t)
        r = r * base;
    return r;
}

bool NomeSeries::operator==(const NomeSeries& o) const {
    if (qmax_ != o.qmax_)
        return false;
    for (int k = 0; k <= qmax_; ++k)
        if (!(c_[static_cast<std::size_t>(k)] == o.c_[static_cast<std::size_t>(k)]))
            return false;
    return true;
}

NomeSeries theta_ratio(VarSetPtr vs, const ExpVec& m_exps, int qmax) {
    bool trivial = std::all_of(m_exps.begin(), m_exps.end(), [](auto e) { return e == 0; });
    if (trivial)
        throw std::domain_error("theta_ratio: vanishing theta argument");
    const auto yi = vs->index("y");

    auto mono = [&](const ExpVec& e, int dy) {
        ExpVec s = e;
        s[yi] += 2 * dy;
        return LaurentPoly::monomial(vs, s, 1);
    };
    ExpVec minus(m_exps.size());
    for (std::size_t i = 0; i < m_exps.size(); ++i)
        minus[i] = -m_exps[i];

    // prefactor ratio y^{-1/2} (1 - yM)/(1 - M)
    ExpVec yhalf(vs->size(), 0);
    yhalf[yi] = -1;
    RationalFn pref(
        LaurentPoly::monomial(vs, yhalf, 1) * (LaurentPoly::one(vs) - mono(m_exps, 1)),
        LaurentPoly::one(vs) - mono(m_exps, 0));

    /* series part: prod_{l>=1} (1 - q^l M y)(1 - q^l M^{-1} y^{-1})
     *            / prod_{l>=1} (1 - q^l M)(1 - q^l M^{-1})            */
    NomeSeries num = NomeSeries::one(vs, qmax);
    NomeSeries den = NomeSeries::one(vs, qmax);
    for (int l = 1; l <= qmax; ++l) {
        auto lin = [&](const LaurentPoly& m) {
            NomeSeries s(vs, qmax);
            s.coeff(0) = RationalFn::one(vs);
            s.coeff(l) = RationalFn(-m);
            return s;
        };
        num = num * lin(mono(m_exps, 1));
        num = num * lin(mono(minus, -1));
        den = den * lin(mono(m_exps, 0));
        den = den * lin(mono(minus, 0));
    }
    return (num * den.inverse()).scaled(pref);
}

Int profile_virtual_dimension(int rank, const Profile& profile) {
    // 2 r n0 - r n1 from the deformation complex; checked per chain in tests
    int n1 = profile.levels() >= 1 ? profile.inner[0] : 0;
    return Int(rank) * (2 * profile.n0 - n1);
}

EllipticResult elliptic_genus(int rank, const Profile& profile, int qmax,
                              const Insertion& insertion, int jobs) {
    auto vs = vars::weight(rank, true);
    EllipticResult out(vs, qmax);
    std::vector<ColoredNestedChain> chains;
    auto st = for_each_colored_chain(
        rank, profile, [&](const ColoredNestedChain& c) { chains.push_back(c); });
    if (st == Profile::Status::Infeasible) {
        out.infeasible = true;
        return out;
    }
    out.fixed_points = static_cast<long long>(chains.size());

    auto chain_series = [&](const ColoredNestedChain& chain) {
        FactoredWeight w = fixed_point_term(chain, rank, Flavor::Euler);
        // weight varsets differ (no y); translate base exponents
        auto wvs = w.varset();
        NomeSeries s = NomeSeries::one(vs, qmax);
        for (const auto& [b, m] : w.factors()) {
            if (b.sign != +1)
                throw std::logic_error("elliptic_genus: unexpected signed base");
            ExpVec e(vs->size(), 0);
            for (std::size_t i = 0; i < b.exps.size(); ++i)
                e[vs->index(wvs->name(i))] = b.exps[i];
            s = s * theta_ratio(vs, e, qmax).pow(-m);
        }
        if (insertion) {
            LaurentPoly ins = insertion(chain).extend_to(vs);
            s = s.scaled(RationalFn(std::move(ins)));
        }
        return s;
    };

    const std::size_t n = chains.size();
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 4) {
        for (const auto& c : chains)
            out.series = out.series + chain_series(c);
    } else {
        std::vector<NomeSeries> parts(n, NomeSeries(vs, qmax));
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                parts[i] = chain_series(chains[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
        for (const auto& p : parts)
            out.series = out.series + p;
    }
    return out;
}

} // namespace nestloc
