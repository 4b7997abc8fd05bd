#pragma once

#include "nestloc/chain.hpp"
#include "nestloc/weight.hpp"

namespace nestloc {

/* Virtual tangent characters of the nested-instanton fixed points, as exact
 * Laurent polynomials in the torus characters T1, T2 and the framing
 * characters R1..Rr.
 *
 * Axis convention, fixed once for the whole engine: the box (row, col) of a
 * Young diagram carries the character T1^(col-1) T2^(row-1); the defining
 * two-dimensional representation contributes Q = T1^-1 + T2^-1 and its
 * determinant L = T1^-1 T2^-1.  Under this convention the closed-form
 * character, the deformation-complex character and the two-Hilbert-scheme
 * cross-check formula can be compared verbatim, and a character monomial M
 * of multiplicity +1 becomes the localization factor 1/(1 - M(q,t)). */

// character of the boxes of one diagram
LaurentPoly box_character(VarSetPtr vs, const Partition& mu);
// exponent inversion (dual module)
LaurentPoly dual_character(const LaurentPoly& p);

/* Character from the full equivariant deformation complex of the nested
 * quiver.  The independent oracle: nothing below reuses it. */
LaurentPoly tangent_character_oracle(const ColoredNestedChain& chain, int rank);

/* Closed-form character: unnested part in module form plus the literal
 * per-level double-sum blocks.  `trace_correction` adds N * T1^-1 T2^-1
 * (one unit per inner level); it is off by default because it breaks the
 * agreement with the deformation complex and with the cross-check formula. */
LaurentPoly tangent_character_chain(const ColoredNestedChain& chain, int rank,
                                    bool trace_correction = false);

// rank-1 convenience overloads
LaurentPoly tangent_character_oracle(const NestedChain& chain);
LaurentPoly tangent_character_chain(const NestedChain& chain,
                                    bool trace_correction = false);

/* Two-step cross-check: the nested Hilbert scheme tangent character written
 * through the characters of the two monomial ideals.  Rank 1, one level. */
LaurentPoly tangent_character_two_step(const NestedChain& chain);

// virtual dimension: the character evaluated at T = R = 1
Int virtual_dimension(const LaurentPoly& character);

enum class Flavor { Euler, ChiY };

/* Convert a tangent character into its localization weight: every character
 * monomial M of multiplicity m contributes (1-M)^-m, and for the chi_-y
 * flavor additionally (1-yM)^+m. */
FactoredWeight character_weight(const LaurentPoly& character, int rank, Flavor flavor);

} // namespace nestloc
