#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestloc/laurent.hpp"

namespace nestloc {

/* Ratio of two Laurent polynomials kept in a canonical form: joint integer
 * content removed, the denominator's lex-leading coefficient positive, and
 * (on request) known binomial factors cancelled.  Full multivariate gcd is
 * deliberately not attempted. */
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(LaurentPoly num);
    RationalFn(LaurentPoly num, LaurentPoly den);

    static RationalFn zero(VarSetPtr vs) { return RationalFn(LaurentPoly::zero(vs)); }
    static RationalFn one(VarSetPtr vs) { return RationalFn(LaurentPoly::one(vs)); }
    static RationalFn constant(VarSetPtr vs, Int c) {
        return RationalFn(LaurentPoly::constant(vs, std::move(c)));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const VarSetPtr& varset() const { return num_.varset(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn pow(int n) const; // any sign

    // exact equality (cross multiplication)
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn substitute(VarSetPtr target,
                          const std::vector<LaurentPoly::MonomialBinding>& b) const;
    RationalFn swap_vars(const std::string& a, const std::string& b) const;
    RationalFn extend_to(VarSetPtr target) const;

    // substitute one variable by an exact rational constant
    RationalFn substitute_const(const std::string& var, const Rat& value) const;

    // cancel the given factors out of num and den as often as they divide both
    void reduce_with(const std::vector<LaurentPoly>& bases);

    // exact polynomial quotient num/den when it exists
    std::optional<LaurentPoly> to_polynomial() const;

    std::string to_string() const;

private:
    void canonicalize();

    LaurentPoly num_, den_;
};

/* Polynomiality test: true iff num/den divides exactly and the quotient has
 * no negative exponents in the named variables.  Returns the witness. */
std::optional<LaurentPoly> is_polynomial(const RationalFn& f,
                                         const std::vector<std::string>& vars);

enum class LimitKind { Finite, Divergent };

struct LimitResult {
    LimitKind kind = LimitKind::Divergent;
    RationalFn value; // meaningful when kind == Finite
};

/* Limit of f as `var` tends to 0: compare the minimal var-degrees of num and
 * den; the surviving leading coefficients form the value.  Exact. */
LimitResult limit_var_to_zero(const RationalFn& f, const std::string& var);

/* Limit of f as `var` tends to 1, by exact expansion around var = 1+eps.
 * Handles pole/zero cancellation of any order.  Exact. */
LimitResult limit_var_to_one(const RationalFn& f, const std::string& var);

} // namespace nestloc
