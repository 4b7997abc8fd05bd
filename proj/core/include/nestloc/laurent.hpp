#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestloc/bigint.hpp"
#include "nestloc/varset.hpp"

namespace nestloc {

/* Exact multivariate Laurent polynomial: a term map from scaled exponent
 * vectors to arbitrary-precision integer coefficients.  No zero coefficient
 * is ever stored; the map order (lexicographic on exponent vectors) is the
 * canonical term order used for serialization and for leading-term division.
 */
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarSetPtr vs) : vs_(std::move(vs)) {}

    static LaurentPoly zero(VarSetPtr vs) { return LaurentPoly(std::move(vs)); }
    static LaurentPoly constant(VarSetPtr vs, Int c);
    static LaurentPoly one(VarSetPtr vs) { return constant(std::move(vs), 1); }
    // c * x^e, e in scaled units
    static LaurentPoly monomial(VarSetPtr vs, ExpVec e, Int c = 1);
    // the variable `name` to the first power
    static LaurentPoly var(VarSetPtr vs, const std::string& name, int power = 1);

    const VarSetPtr& varset() const { return vs_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // single-term test; returns (coeff, exponents) when true
    std::optional<std::pair<Int, ExpVec>> as_monomial() const;
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const Int& c) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int n) const; // n >= 0

    // gcd of all coefficients (positive; 0 for the zero polynomial)
    Int content() const;
    void divide_content(const Int& c);

    // exact division; nullopt when not divisible
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& g) const;

    /* Substitute each variable by coeff * monomial.  bindings[i] applies to
     * variable i of this VarSet; the exponent vector lives in the target
     * VarSet's scaled units and represents the image of the full variable. */
    struct MonomialBinding {
        Int coeff = 1; // +1 or -1 in practice
        ExpVec exps;
    };
    LaurentPoly substitute(VarSetPtr target,
                           const std::vector<MonomialBinding>& bindings) const;

    // exchange the exponents of two variables (they must share a denominator)
    LaurentPoly swap_vars(const std::string& a, const std::string& b) const;

    /* Map this polynomial onto a wider/reordered VarSet by variable name.
     * Every variable here must exist in `target` with the same denominator. */
    LaurentPoly extend_to(VarSetPtr target) const;

    // scaled exponent range of one variable over all terms
    std::pair<std::int32_t, std::int32_t> exp_range(std::size_t var) const;

    // value with every variable set to 1 (sum of coefficients)
    Int eval_at_one() const;

    /* Evaluate at a rational point.  A variable with denominator 2 must have
     * even stored exponents everywhere (no square roots are taken). */
    Rat eval_rational(const std::vector<Rat>& point) const;

    std::string to_string() const;

private:
    void check_same(const LaurentPoly& o) const;

    VarSetPtr vs_;
    Terms terms_;
};

LaurentPoly operator*(const Int& c, const LaurentPoly& p);

} // namespace nestloc
