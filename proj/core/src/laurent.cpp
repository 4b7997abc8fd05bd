#include "nestloc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nestloc {

LaurentPoly LaurentPoly::constant(VarSetPtr vs, Int c) {
    LaurentPoly p(std::move(vs));
    if (c != 0)
        p.terms_.emplace(ExpVec(p.vs_->size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vs, ExpVec e, Int c) {
    LaurentPoly p(std::move(vs));
    if (e.size() != p.vs_->size())
        throw std::invalid_argument("monomial: exponent arity mismatch");
    if (c != 0)
        p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::var(VarSetPtr vs, const std::string& name, int power) {
    auto i = vs->index(name);
    ExpVec e(vs->size(), 0);
    e[i] = static_cast<std::int32_t>(power * vs->den(i));
    return monomial(std::move(vs), std::move(e), 1);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1)
        return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

std::optional<std::pair<Int, ExpVec>> LaurentPoly::as_monomial() const {
    if (terms_.size() != 1)
        return std::nullopt;
    return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!vs_ || !o.vs_ || !(*vs_ == *o.vs_))
        throw std::invalid_argument("LaurentPoly: VarSet mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vs_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly r(vs_);
    if (terms_.empty() || o.terms_.empty())
        return r;
    ExpVec e(vs_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(vs_);
    if (c == 0)
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) { return p * c; }

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0)
        throw std::invalid_argument("LaurentPoly::pow: negative power");
    LaurentPoly r = one(vs_);
    LaurentPoly b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = (n >>= 1) ? b * b : b;
    }
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1)
            break;
    }
    return g;
}

void LaurentPoly::divide_content(const Int& c) {
    if (c == 0 || c == 1)
        return;
    for (auto& [e, k] : terms_) {
        if (k % c != 0)
            throw std::logic_error("divide_content: not divisible");
        k /= c;
    }
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& g) const {
    check_same(g);
    if (g.terms_.empty())
        throw std::invalid_argument("divide_exact: division by zero");
    if (terms_.empty())
        return zero(vs_);

    // normalize away the Laurent part: shift so both operands are polynomials
    const std::size_t n = vs_->size();
    ExpVec fshift(n, 0), gshift(n, 0);
    auto min_exps = [n](const Terms& t, ExpVec& out) {
        out.assign(n, 0);
        bool first = true;
        for (const auto& [e, c] : t) {
            for (std::size_t i = 0; i < n; ++i)
                out[i] = first ? e[i] : std::min(out[i], e[i]);
            first = false;
        }
    };
    min_exps(terms_, fshift);
    min_exps(g.terms_, gshift);

    Terms f;
    for (const auto& [e, c] : terms_) {
        ExpVec s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = e[i] - fshift[i];
        f.emplace(std::move(s), c);
    }
    Terms gg;
    for (const auto& [e, c] : g.terms_) {
        ExpVec s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = e[i] - gshift[i];
        gg.emplace(std::move(s), c);
    }

    const auto& glead = *gg.rbegin(); // lex-largest term of the divisor
    LaurentPoly q(vs_);
    Terms r = std::move(f);
    ExpVec qe(n);
    while (!r.empty()) {
        const auto& rlead = *r.rbegin();
        bool ok = rlead.second % glead.second == 0;
        for (std::size_t i = 0; ok && i < n; ++i) {
            qe[i] = rlead.first[i] - glead.first[i];
            if (qe[i] < 0)
                ok = false;
        }
        if (!ok)
            return std::nullopt;
        Int qc = rlead.second / glead.second;
        q.add_term(qe, qc);
        // r -= (qc * x^qe) * g
        ExpVec e(n);
        for (const auto& [ge, gc] : gg) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ge[i] + qe[i];
            Int delta = -qc * gc;
            auto it = r.find(e);
            if (it == r.end()) {
                if (delta != 0)
                    r.emplace(e, delta);
            } else {
                it->second += delta;
                if (it->second == 0)
                    r.erase(it);
            }
        }
    }
    // restore the Laurent shift difference
    ExpVec diff(n);
    for (std::size_t i = 0; i < n; ++i)
        diff[i] = fshift[i] - gshift[i];
    LaurentPoly out(vs_);
    for (const auto& [e, c] : q.terms_) {
        ExpVec s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = e[i] + diff[i];
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute(VarSetPtr target,
                                    const std::vector<MonomialBinding>& bindings) const {
    if (bindings.size() != vs_->size())
        throw std::invalid_argument("substitute: one binding per variable required");
    LaurentPoly r(target);
    const std::size_t m = target->size();
    ExpVec e(m);
    for (const auto& [se, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        Int coeff = c;
        bool dead = false;
        for (std::size_t i = 0; i < se.size() && !dead; ++i) {
            if (se[i] == 0)
                continue;
            const auto& b = bindings[i];
            const int d = vs_->den(i);
            if (b.exps.size() != m && b.coeff != 0)
                throw std::invalid_argument("substitute: binding arity mismatch");
            // exponent of the full variable is se[i]/d
            if (b.coeff == 0) {
                // variable sent to 0: the term survives only with exponent 0
                dead = true;
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                long long contrib = static_cast<long long>(se[i]) * b.exps[j];
                if (contrib % d != 0)
                    throw std::domain_error(
                        "substitute: image monomial incompatible with half-integer exponent");
                e[j] += static_cast<std::int32_t>(contrib / d);
            }
            if (b.coeff == -1) {
                if (se[i] % d != 0)
                    throw std::domain_error("substitute: (-1)^(half-integer)");
                if ((se[i] / d) % 2 != 0)
                    coeff = -coeff;
            } else if (b.coeff != 1) {
                if (se[i] % d != 0)
                    throw std::domain_error("substitute: fractional power of coefficient");
                int k = se[i] / d;
                if (k < 0)
                    throw std::domain_error("substitute: negative power of non-unit coefficient");
                for (int t = 0; t < k; ++t)
                    coeff *= b.coeff;
            }
        }
        if (!dead)
            r.add_term(e, coeff);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars(const std::string& a, const std::string& b) const {
    auto ia = vs_->index(a), ib = vs_->index(b);
    if (vs_->den(ia) != vs_->den(ib))
        throw std::invalid_argument("swap_vars: denominator mismatch");
    LaurentPoly r(vs_);
    for (const auto& [e, c] : terms_) {
        ExpVec s = e;
        std::swap(s[ia], s[ib]);
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

LaurentPoly LaurentPoly::extend_to(VarSetPtr target) const {
    std::vector<std::size_t> where(vs_->size());
    for (std::size_t i = 0; i < vs_->size(); ++i) {
        where[i] = target->index(vs_->name(i));
        if (target->den(where[i]) != vs_->den(i))
            throw std::invalid_argument("extend_to: denominator mismatch");
    }
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        ExpVec s(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            s[where[i]] = e[i];
        r.add_term(s, c);
    }
    return r;
}

std::pair<std::int32_t, std::int32_t> LaurentPoly::exp_range(std::size_t var) const {
    std::int32_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            lo = hi = e[var];
            first = false;
        } else {
            lo = std::min(lo, e[var]);
            hi = std::max(hi, e[var]);
        }
    }
    return {lo, hi};
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

Rat LaurentPoly::eval_rational(const std::vector<Rat>& point) const {
    if (point.size() != vs_->size())
        throw std::invalid_argument("eval_rational: arity mismatch");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] % vs_->den(i) != 0)
                throw std::domain_error("eval_rational: half-integer exponent");
            int k = e[i] / vs_->den(i);
            Rat base = point[i];
            if (base == 0 && k < 0)
                throw std::domain_error("eval_rational: zero to negative power");
            Rat pw = 1;
            int n = std::abs(k);
            while (n-- > 0)
                pw *= base;
            if (k < 0)
                pw = Rat(boost::multiprecision::denominator(pw),
                         boost::multiprecision::numerator(pw));
            t *= pw;
        }
        sum += t;
    }
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0)
            a = -a;
        bool any_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        if (a != 1 || !any_var)
            os << a.str();
        bool star = (a != 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (star || !(!star && &e[i] == &e[0]))
                if (star)
                    os << "*";
            os << vs_->name(i);
            int d = vs_->den(i);
            if (e[i] != d) {
                os << "^";
                if (e[i] % d == 0)
                    os << e[i] / d;
                else
                    os << "(" << e[i] << "/" << d << ")";
            }
            star = true;
        }
    }
    return os.str();
}

} // namespace nestloc
