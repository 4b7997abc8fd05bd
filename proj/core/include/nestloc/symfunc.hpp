#pragma once

#include <map>

#include "nestloc/invariants.hpp"

namespace nestloc {

/* Symmetric polynomial stored on monomial-basis labels: the coefficient of
 * m_lambda, keyed by the partition lambda.  Symmetry is structural. */
struct SymPoly {
    int degree = 0;
    VarSetPtr vs;                            // coefficient variables (q, t)
    std::map<Partition, RationalFn> coeffs;  // absent key = zero

    RationalFn coeff(const Partition& label) const;
};

/* Modified Macdonald polynomial via the filling statistics inv and maj.
 * n_vars >= |mu| is required for stable monomial coefficients. */
SymPoly modified_macdonald(const Partition& mu, int n_vars);

// the coefficient of m_mu in f (the Hall pairing against h_mu)
RationalFn hall_pair_h(const Partition& mu, const SymPoly& f);

// semistandard tableaux of shape lambda and content nu
Int kostka_number(const Partition& lambda, const Partition& nu);

// dominance order: lambda >= nu (prefix sums)
bool dominates(const Partition& lambda, const Partition& nu);

/* Schur coefficients of the modified Macdonald polynomial, by the
 * unitriangular inverse-Kostka solve; every entry must be a polynomial in
 * q, t with nonnegative integer coefficients. */
std::map<Partition, LaurentPoly> modified_kostka_row(const Partition& mu);
LaurentPoly modified_kostka(const Partition& lambda, const Partition& mu);

/* The four convention variants of the Macdonald side: optionally exchange
 * q <-> t and/or transpose the indexing partition. */
struct MacdonaldConvention {
    bool swap_qt = false;
    bool transpose = false;
    std::string to_string() const;
};

/* The unique convention under which the staircase identity holds for all
 * |mu0| <= 3; detected once, then cached. */
const MacdonaldConvention& detected_convention();

struct Conjecture2Result {
    Partition mu0;
    Profile profile;            // the implied staircase profile
    RationalFn q_localization;  // inner sum divided by (1-qt)^N
    bool division_exact = false;
    LaurentPoly q_macdonald;        // sum of modified Kostka polynomials
    RationalFn q_hall;              // the m_{mu0}-coefficient of H~_{mu0}
    std::vector<LaurentPoly> ksum_by_vars; // lambda-sums restricted to 1..n0 variables
    bool equal = false;          // localization == Kostka sum
    bool hall_matches = false;   // localization == Hall pairing form
};

Conjecture2Result conjecture2_check(const Partition& mu0);

/* Generating function over profiles, assembled on monomial-basis labels from
 * a canonical (sorted) representative profile per label — symmetric by
 * construction. */
SymPoly assemble_Z_MD(int n_max, int levels);

} // namespace nestloc
