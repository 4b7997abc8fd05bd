#include "nestloc/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestloc {

FactoredWeight::FactoredWeight(VarSetPtr vs)
    : vs_(std::move(vs)), pre_(vs_->size(), 0) {}

void FactoredWeight::push(ExpVec e, int mult, int sign) {
    if (zero_ || mult == 0)
        return;
    if (e.size() != vs_->size())
        throw std::invalid_argument("FactoredWeight::push: arity mismatch");
    bool trivial = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (trivial) {
        if (sign == +1) { // the binomial (1-1) = 0
            if (mult > 0) {
                zero_ = true;
                return;
            }
            throw std::domain_error("FactoredWeight: vanishing factor in denominator");
        }
        // (1+1) = 2
        if (mult < 0)
            throw std::domain_error("FactoredWeight: constant 2 in denominator");
        for (int t = 0; t < mult; ++t)
            coef_ *= 2;
        return;
    }
    Base b{sign, std::move(e)};
    auto it = factors_.find(b);
    if (it == factors_.end()) {
        factors_.emplace(std::move(b), mult);
    } else {
        it->second += mult;
        if (it->second == 0)
            factors_.erase(it);
    }
}

void FactoredWeight::push_monomial(const ExpVec& e, const Int& c) {
    if (zero_)
        return;
    if (c == 0) {
        zero_ = true;
        return;
    }
    for (std::size_t i = 0; i < pre_.size(); ++i)
        pre_[i] += e[i];
    coef_ *= c;
}

FactoredWeight& FactoredWeight::operator*=(const FactoredWeight& o) {
    if (zero_)
        return *this;
    if (o.zero_) {
        zero_ = true;
        return *this;
    }
    coef_ *= o.coef_;
    for (std::size_t i = 0; i < pre_.size(); ++i)
        pre_[i] += o.pre_[i];
    for (const auto& [b, m] : o.factors_) {
        auto it = factors_.find(b);
        if (it == factors_.end()) {
            factors_.emplace(b, m);
        } else {
            it->second += m;
            if (it->second == 0)
                factors_.erase(it);
        }
    }
    return *this;
}

FactoredWeight FactoredWeight::inverse() const {
    if (zero_)
        throw std::domain_error("FactoredWeight::inverse of zero");
    FactoredWeight r(vs_);
    if (coef_ == 1 || coef_ == -1)
        r.coef_ = coef_;
    else
        throw std::domain_error("FactoredWeight::inverse: non-unit coefficient");
    for (std::size_t i = 0; i < pre_.size(); ++i)
        r.pre_[i] = -pre_[i];
    for (const auto& [b, m] : factors_)
        r.factors_.emplace(b, -m);
    return r;
}

FactoredWeight& FactoredWeight::operator/=(const FactoredWeight& o) {
    return (*this) *= o.inverse();
}

FactoredWeight FactoredWeight::operator*(const FactoredWeight& o) const {
    FactoredWeight r = *this;
    r *= o;
    return r;
}

FactoredWeight FactoredWeight::operator/(const FactoredWeight& o) const {
    FactoredWeight r = *this;
    r /= o;
    return r;
}

FactoredWeight FactoredWeight::pow(int n) const {
    if (n == 0)
        return one(vs_);
    FactoredWeight base = n > 0 ? *this : inverse();
    FactoredWeight r = base;
    for (int t = 1; t < std::abs(n); ++t)
        r *= base;
    return r;
}

int FactoredWeight::numerator_count() const {
    int k = 0;
    for (const auto& [b, m] : factors_)
        if (m > 0)
            k += m;
    return k;
}

int FactoredWeight::denominator_count() const {
    int k = 0;
    for (const auto& [b, m] : factors_)
        if (m < 0)
            k -= m;
    return k;
}

void FactoredWeight::assert_denominator_regular() const {
    // trivial bases never enter factors_ (push folds or flags them), so the
    // denominator is regular by construction; keep the hook for callers.
}

RationalFn FactoredWeight::expand() const {
    if (zero_)
        return RationalFn::zero(vs_);
    LaurentPoly num = LaurentPoly::monomial(vs_, pre_, coef_);
    LaurentPoly den = LaurentPoly::one(vs_);
    for (const auto& [b, m] : factors_) {
        LaurentPoly bin = LaurentPoly::one(vs_) -
                          LaurentPoly::monomial(vs_, b.exps, Int(b.sign));
        LaurentPoly p = bin.pow(std::abs(m));
        if (m > 0)
            num = num * p;
        else
            den = den * p;
    }
    return RationalFn(std::move(num), std::move(den));
}

FactoredWeight FactoredWeight::substitute(
    VarSetPtr target, const std::vector<LaurentPoly::MonomialBinding>& bind) const {
    FactoredWeight r(target);
    if (zero_) {
        r.zero_ = true;
        return r;
    }
    // prefactor
    {
        LaurentPoly m = LaurentPoly::monomial(vs_, pre_, coef_);
        auto img = m.substitute(target, bind).as_monomial();
        if (!img)
            throw std::logic_error("FactoredWeight::substitute: non-monomial prefactor image");
        r.push_monomial(img->second, img->first);
    }
    for (const auto& [b, mult] : factors_) {
        LaurentPoly m = LaurentPoly::monomial(vs_, b.exps, Int(b.sign));
        auto img = m.substitute(target, bind).as_monomial();
        if (!img) {
            // the monomial was annihilated (a variable bound to 0)
            if (b.sign == 0)
                throw std::logic_error("unreachable");
            continue; // (1 - 0) = 1
        }
        int s;
        if (img->first == 1)
            s = +1;
        else if (img->first == -1)
            s = -1;
        else
            throw std::logic_error("FactoredWeight::substitute: non-unit base coefficient");
        r.push(img->second, mult, s);
        if (r.zero_)
            return r;
    }
    return r;
}

FactoredWeight FactoredWeight::substitute_unit(const std::string& var, int value) const {
    if (value != 0 && value != 1 && value != -1)
        throw std::invalid_argument("substitute_unit: value must be 0 or ±1");
    std::vector<LaurentPoly::MonomialBinding> bind;
    bind.reserve(vs_->size());
    const auto vi = vs_->index(var);
    for (std::size_t i = 0; i < vs_->size(); ++i) {
        LaurentPoly::MonomialBinding b;
        b.exps.assign(vs_->size(), 0);
        if (i == vi) {
            b.coeff = value;
        } else {
            b.coeff = 1;
            b.exps[i] = vs_->den(i); // identity
        }
        bind.push_back(std::move(b));
    }
    return substitute(vs_, bind);
}

FactoredWeight::ConeLimit FactoredWeight::cone_limit(
    const std::vector<long long>& u_weight) const {
    if (u_weight.size() != vs_->size())
        throw std::invalid_argument("cone_limit: weight arity mismatch");
    ConeLimit out;
    if (zero_) {
        out.kind = LimitKind::Finite;
        out.value = RationalFn::zero(vs_);
        return out;
    }
    auto u_exp = [&](const ExpVec& e) {
        long long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (u_weight[i] == 0)
                continue;
            if (e[i] % vs_->den(i) != 0)
                throw std::domain_error("cone_limit: half-integer exponent on limited variable");
            s += u_weight[i] * (e[i] / vs_->den(i));
        }
        return s;
    };
    auto survivor = [&](const ExpVec& e) {
        ExpVec s = e;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (u_weight[i] != 0)
                s[i] = 0;
        return s;
    };

    long long u_total = u_exp(pre_);
    FactoredWeight res(vs_);
    res.push_monomial(survivor(pre_), coef_);
    for (const auto& [b, m] : factors_) {
        long long e = u_exp(b.exps);
        if (e > 0)
            continue; // monomial -> 0, factor -> 1
        if (e == 0) {
            // purely transverse factor (e.g. y-only); keep it
            res.push(survivor(b.exps), m, b.sign);
            continue;
        }
        // monomial blows up: (1 - s x^e) ~ (-s) x^e
        u_total += static_cast<long long>(m) * e;
        ExpVec se = survivor(b.exps);
        LaurentPoly mono = LaurentPoly::monomial(vs_, se, Int(-b.sign));
        for (int t = 0; t < std::abs(m); ++t) {
            auto mm = mono.as_monomial();
            if (m > 0)
                res.push_monomial(mm->second, mm->first);
            else {
                // inverse monomial
                ExpVec inv = mm->second;
                for (auto& x : inv)
                    x = -x;
                res.push_monomial(inv, mm->first); // sign^{-1} = sign for ±1
            }
        }
    }
    if (res.is_zero()) {
        out.kind = LimitKind::Finite;
        out.value = RationalFn::zero(vs_);
        return out;
    }
    if (u_total < 0) {
        out.kind = LimitKind::Divergent;
        return out;
    }
    out.kind = LimitKind::Finite;
    out.value = u_total > 0 ? RationalFn::zero(vs_) : res.expand();
    return out;
}

bool FactoredWeight::operator==(const FactoredWeight& o) const {
    return zero_ == o.zero_ && coef_ == o.coef_ && pre_ == o.pre_ && factors_ == o.factors_;
}

} // namespace nestloc
