#include "nestloc/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nestloc {

RationalFn::RationalFn(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::one(num_.varset())) {
    canonicalize();
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("RationalFn: zero denominator");
    canonicalize();
}

void RationalFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(num_.varset());
        return;
    }
    Int cn = num_.content();
    Int cd = den_.content();
    Int g = boost::multiprecision::gcd(cn, cd);
    if (g > 1) {
        num_.divide_content(g);
        den_.divide_content(g);
    }
    // fixed sign: lex-leading denominator coefficient positive
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (den_ == o.den_)
        return RationalFn(num_ + o.num_, den_);
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    if (den_ == o.den_)
        return RationalFn(num_ - o.num_, den_);
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.num_.is_zero())
        throw std::invalid_argument("RationalFn: division by zero");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn RationalFn::pow(int n) const {
    if (n == 0)
        return one(varset());
    if (n < 0) {
        if (num_.is_zero())
            throw std::invalid_argument("RationalFn::pow: zero to negative power");
        return RationalFn(den_.pow(-n), num_.pow(-n));
    }
    return RationalFn(num_.pow(n), den_.pow(n));
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFn RationalFn::substitute(VarSetPtr target,
                                  const std::vector<LaurentPoly::MonomialBinding>& b) const {
    LaurentPoly d = den_.substitute(target, b);
    if (d.is_zero())
        throw std::domain_error("RationalFn::substitute: denominator vanished");
    return RationalFn(num_.substitute(target, b), std::move(d));
}

RationalFn RationalFn::swap_vars(const std::string& a, const std::string& b) const {
    return RationalFn(num_.swap_vars(a, b), den_.swap_vars(a, b));
}

RationalFn RationalFn::extend_to(VarSetPtr target) const {
    return RationalFn(num_.extend_to(target), den_.extend_to(target));
}

namespace {

/* poly with var = p/q, exactly: returns (poly', k) meaning poly' * q^{-k},
 * where poly' no longer involves var. */
std::pair<LaurentPoly, int> subst_const_poly(const LaurentPoly& f, std::size_t vi,
                                             const Int& p, const Int& q) {
    const auto& vs = f.varset();
    auto [lo, hi] = f.exp_range(vi);
    const int d = vs->den(vi);
    if (lo % d != 0 || hi % d != 0)
        throw std::domain_error("substitute_const: half-integer exponent");
    int klo = lo / d, khi = hi / d;
    if (p == 0 && klo < 0)
        throw std::domain_error("substitute_const: zero to negative power");
    LaurentPoly out(vs);
    for (const auto& [e, c] : f.terms()) {
        int k = e[vi] / d;
        Int coef = c;
        // multiply by p^(k-klo) q^(khi-k); overall scale q^(khi-klo) handled by caller
        for (int t = 0; t < k - klo; ++t)
            coef *= p;
        for (int t = 0; t < khi - k; ++t)
            coef *= q;
        if (coef == 0)
            continue;
        ExpVec s = e;
        s[vi] = 0;
        out.add_term(s, coef);
    }
    return {out, khi - klo};
}

} // namespace

RationalFn RationalFn::substitute_const(const std::string& var, const Rat& value) const {
    auto vi = varset()->index(var);
    Int p = boost::multiprecision::numerator(value);
    Int q = boost::multiprecision::denominator(value);
    auto [n2, kn] = subst_const_poly(num_, vi, p, q);
    auto [d2, kd] = subst_const_poly(den_, vi, p, q);
    if (d2.is_zero())
        throw std::domain_error("substitute_const: denominator vanished");
    // f = n2 q^{-kn} / (d2 q^{-kd})  =  n2 q^{kd-kn} / d2 (or the inverse side)
    if (kd >= kn)
        n2 = n2 * LaurentPoly::constant(varset(), boost::multiprecision::pow(q, kd - kn));
    else
        d2 = d2 * LaurentPoly::constant(varset(), boost::multiprecision::pow(q, kn - kd));
    return RationalFn(std::move(n2), std::move(d2));
}

void RationalFn::reduce_with(const std::vector<LaurentPoly>& bases) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& b : bases) {
            if (b.is_constant())
                continue;
            while (true) {
                auto qn = num_.divide_exact(b);
                if (!qn)
                    break;
                auto qd = den_.divide_exact(b);
                if (!qd)
                    break;
                num_ = std::move(*qn);
                den_ = std::move(*qd);
                progress = true;
            }
        }
    }
    canonicalize();
}

std::optional<LaurentPoly> RationalFn::to_polynomial() const {
    return num_.divide_exact(den_);
}

std::string RationalFn::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::optional<LaurentPoly> is_polynomial(const RationalFn& f,
                                         const std::vector<std::string>& vars) {
    auto q = f.to_polynomial();
    if (!q)
        return std::nullopt;
    for (const auto& v : vars) {
        auto [lo, hi] = q->exp_range(f.varset()->index(v));
        (void)hi;
        if (lo < 0)
            return std::nullopt;
    }
    return q;
}

LimitResult limit_var_to_zero(const RationalFn& f, const std::string& var) {
    const auto vi = f.varset()->index(var);
    if (f.is_zero())
        return {LimitKind::Finite, f};
    auto leading = [&](const LaurentPoly& p) {
        auto [lo, hi] = p.exp_range(vi);
        (void)hi;
        LaurentPoly lead(p.varset());
        for (const auto& [e, c] : p.terms())
            if (e[vi] == lo) {
                ExpVec s = e;
                s[vi] = 0;
                lead.add_term(s, c);
            }
        return std::make_pair(lo, lead);
    };
    auto [kn, ln] = leading(f.num());
    auto [kd, ld] = leading(f.den());
    if (kn < kd)
        return {LimitKind::Divergent, RationalFn::zero(f.varset())};
    if (kn > kd)
        return {LimitKind::Finite, RationalFn::zero(f.varset())};
    return {LimitKind::Finite, RationalFn(std::move(ln), std::move(ld))};
}

namespace {

/* Exact coefficients of poly(var = 1 + eps) as polynomials in the remaining
 * variables, after normalizing the var-exponents to be >= 0.  The expansion
 * is then a polynomial in eps, so every coefficient is reachable. */
std::vector<LaurentPoly> eps_expansion(const LaurentPoly& f, std::size_t vi, int order) {
    const auto& vs = f.varset();
    auto [lo, hi] = f.exp_range(vi);
    const int d = vs->den(vi);
    if (lo % d != 0 || hi % d != 0)
        throw std::domain_error("limit_var_to_one: half-integer exponent");
    std::vector<LaurentPoly> out(static_cast<std::size_t>(order) + 1,
                                 LaurentPoly::zero(vs));
    for (const auto& [e, c] : f.terms()) {
        int k = (e[vi] - lo) / d; // normalized nonnegative power
        ExpVec s = e;
        s[vi] = 0;
        Int binom = 1; // C(k, j), built incrementally
        for (int j = 0; j <= std::min(k, order); ++j) {
            if (j > 0) {
                binom *= (k - j + 1);
                binom /= j;
            }
            out[static_cast<std::size_t>(j)].add_term(s, c * binom);
        }
    }
    return out;
}

} // namespace

LimitResult limit_var_to_one(const RationalFn& f, const std::string& var) {
    const auto vi = f.varset()->index(var);
    if (f.is_zero())
        return {LimitKind::Finite, f};
    auto span = [&](const LaurentPoly& p) {
        auto [lo, hi] = p.exp_range(vi);
        return (hi - lo) / p.varset()->den(vi);
    };
    const int cap = std::max(span(f.num()), span(f.den()));
    auto first_nonzero = [&](const LaurentPoly& p) -> std::pair<int, LaurentPoly> {
        auto coeffs = eps_expansion(p, vi, cap);
        for (int j = 0; j <= cap; ++j)
            if (!coeffs[static_cast<std::size_t>(j)].is_zero())
                return {j, coeffs[static_cast<std::size_t>(j)]};
        throw std::logic_error("limit_var_to_one: nonzero polynomial with zero expansion");
    };
    auto [rn, cn] = first_nonzero(f.num());
    auto [rd, cd] = first_nonzero(f.den());
    if (rn < rd)
        return {LimitKind::Divergent, RationalFn::zero(f.varset())};
    if (rn > rd)
        return {LimitKind::Finite, RationalFn::zero(f.varset())};
    return {LimitKind::Finite, RationalFn(std::move(cn), std::move(cd))};
}

} // namespace nestloc
