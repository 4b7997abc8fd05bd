#pragma once

#include <map>
#include <vector>

#include "nestloc/rational.hpp"

namespace nestloc {

/* K-theoretic localization weight kept in factored form:
 *
 *     coef * x^pre * prod_i (1 - sign_i * x^{e_i})^{mult_i}
 *
 * Multiplication and division are multiset merges, so the huge cancellations
 * between numerator and denominator factors of fixed-point weights cost
 * nothing.  Expansion to a RationalFn happens once, at the very end. */
class FactoredWeight {
public:
    struct Base {
        int sign; // the binomial is (1 - sign * x^e)
        ExpVec exps;
        bool operator<(const Base& o) const {
            if (sign != o.sign)
                return sign < o.sign;
            return exps < o.exps;
        }
        bool operator==(const Base& o) const = default;
    };
    using Factors = std::map<Base, int>;

    explicit FactoredWeight(VarSetPtr vs);
    static FactoredWeight one(VarSetPtr vs) { return FactoredWeight(std::move(vs)); }

    const VarSetPtr& varset() const { return vs_; }
    bool is_zero() const { return zero_; }
    const Factors& factors() const { return factors_; }
    const ExpVec& prefactor_exps() const { return pre_; }
    const Int& coefficient() const { return coef_; }

    // multiply by (1 - sign*x^e)^mult
    void push(ExpVec e, int mult, int sign = +1);
    // multiply by coef * x^e
    void push_monomial(const ExpVec& e, const Int& c = 1);

    FactoredWeight& operator*=(const FactoredWeight& o);
    FactoredWeight& operator/=(const FactoredWeight& o);
    FactoredWeight operator*(const FactoredWeight& o) const;
    FactoredWeight operator/(const FactoredWeight& o) const;
    FactoredWeight inverse() const;
    FactoredWeight pow(int n) const;

    // factor counts by multiplicity sign (numerator side / denominator side)
    int numerator_count() const;
    int denominator_count() const;

    // vanishing binomial in the denominator side -> logic error (asserted)
    void assert_denominator_regular() const;

    RationalFn expand() const;

    FactoredWeight substitute(VarSetPtr target,
                              const std::vector<LaurentPoly::MonomialBinding>& b) const;

    // exact specialization of one variable to 0, 1 or -1, staying factored
    FactoredWeight substitute_unit(const std::string& var, int value) const;

    /* Limit along x_i -> u^{w_i} as u -> 0+ (y-like variables carry weight 0
     * and survive).  Exact, factor by factor. */
    struct ConeLimit {
        LimitKind kind = LimitKind::Divergent;
        RationalFn value; // over the same VarSet, limited vars appearing with exponent 0
    };
    ConeLimit cone_limit(const std::vector<long long>& u_weight) const;

    bool operator==(const FactoredWeight& o) const;

private:
    VarSetPtr vs_;
    bool zero_ = false;
    Int coef_ = 1;
    ExpVec pre_;
    Factors factors_;
};

} // namespace nestloc
