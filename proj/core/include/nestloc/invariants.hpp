#pragma once

#include <functional>
#include <optional>

#include "nestloc/tangent.hpp"

namespace nestloc {

/* Literal fixed-point weight blocks.  The numerator/denominator bookkeeping
 * lives inside FactoredWeight multiplicities: the value of the returned
 * object is exactly the displayed product. */

// vertex factor over the boxes of the outer partitions
FactoredWeight weight_N(const ColoredNestedChain& chain, int rank, Flavor flavor);
// first-level obstruction factor; requires mu1 ⊆ mu0 per color
FactoredWeight weight_T(const ColoredNestedChain& chain, int rank, Flavor flavor);

enum class WForm { IndexPair, BoxEnvelope };
/* Nesting factor.  IndexPair is the (i,j)-indexed triple product;
 * BoxEnvelope runs over the smallest rectangle containing the outer
 * partition with relative arm/leg statistics.  The two displayed forms
 * agree only after exchanging the two torus axes; the IndexPair form is the
 * one whose content matches the tangent character. */
FactoredWeight weight_W(const ColoredNestedChain& chain, int rank, Flavor flavor,
                        WForm form = WForm::IndexPair);

// T * W / N for one fixed point
FactoredWeight fixed_point_term(const ColoredNestedChain& chain, int rank, Flavor flavor);

// rank-1 conveniences
FactoredWeight weight_N(const Partition& mu0, Flavor flavor);
FactoredWeight weight_T(const Partition& mu0, const Partition& mu1, Flavor flavor);
FactoredWeight weight_W(const NestedChain& chain, Flavor flavor,
                        WForm form = WForm::IndexPair);

/* Optional per-fixed-point insertion [V]|_chain; defaults to 1. */
using Insertion = std::function<LaurentPoly(const ColoredNestedChain&)>;

struct ChiOptions {
    Flavor flavor = Flavor::Euler;
    std::optional<int> y_unit;  // exact pre-sum substitution y = 0, 1 or -1
    int jobs = 1;
    Insertion insertion;        // empty = trivial bundle
};

struct ChiResult {
    RationalFn value;
    bool infeasible = false; // profile could not nest: the sum is empty
    Int fixed_points = 0;
};

/* Equivariant virtual invariant: the sum of fixed-point terms over every
 * (colored) chain of the profile.  Exact; deterministic for any job count. */
ChiResult chi_vir(int rank, const Profile& profile, const ChiOptions& opts = {});

/* Inner sum with the outer partition held fixed, mapped to the (q,t)
 * variables by q = q1^-1, t = q2^-1.  Rank 1. */
RationalFn extract_P(const Partition& mu0, const Profile& profile);

struct Conjecture1Result {
    Partition mu0;
    Profile profile;
    bool is_poly = false;       // (1-qt)^N * P is a polynomial in q, t
    LaurentPoly witness;        // that polynomial, when is_poly
    int pole_order = 0;         // minimal k with (1-qt)^k * P polynomial
    std::optional<LaurentPoly> q_quotient; // P / (1-qt)^N when the division is exact
};

Conjecture1Result conjecture1_check(const Partition& mu0, const Profile& profile);

// (1 - q t) over the qt varset; the only denominator the inner sums keep
LaurentPoly one_minus_qt();

} // namespace nestloc
