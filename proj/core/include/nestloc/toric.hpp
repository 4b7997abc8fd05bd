#pragma once

#include <map>

#include "nestloc/qseries.hpp"

namespace nestloc {

enum class Surface { P2, P1xP1 };

int patch_count(Surface s);
std::string surface_name(Surface s);

/* Per-patch torus weights as monomial substitutions on (q1, q2). */
std::vector<LaurentPoly::MonomialBinding> patch_substitution(Surface s, int patch,
                                                             const VarSetPtr& vs);

/* Box statistics of the iterated-limit exponent formulas. */
int s_count(const Partition& mu0);
// indices 0..N, 0 meaning the outer partition; boxes run over the envelope
int s_pair(const NestedChain& chain, int i1, int i2);

/* Iterated-limit oracle: substitute the patch weights, then send q1 to
 * infinity much faster than q2 (one-variable cone, exponent pair checked
 * against a second generic choice).  Returns the exact limit, a Laurent
 * polynomial in y. */
struct PatchLimit {
    LaurentPoly full;      // limit of T W / N, chi_-y flavor
    LaurentPoly inv_n;     // limit of 1/N
    LaurentPoly t_part;    // limit of T
    LaurentPoly w_part;    // limit of W
};
PatchLimit patch_limit_oracle(const NestedChain& chain, Surface s, int patch);

/* Closed-form exponent predictions from the displayed component limits. */
struct PatchPrediction {
    int inv_n_exp = 0;
    int t_exp = 0;
    int w_exp = 0;
    int total() const { return inv_n_exp + t_exp + w_exp; }
};
PatchPrediction patch_prediction(const NestedChain& chain, Surface s, int patch);
/* The alternative assembled-form exponents (the generating-function display
 * whose signs disagree with the component limits on two of the factors). */
int assembled_form_exponent(const NestedChain& chain, Surface s, int patch);

struct LimitReportRow {
    Surface surface;
    int patch;
    NestedChain chain;
    PatchPrediction predicted;
    LaurentPoly oracle_full;
    LaurentPoly oracle_inv_n, oracle_t, oracle_w;
    bool match_components = false; // component-wise vs displayed exponents
    bool match_total = false;      // product vs displayed total
    bool match_assembled = false;  // product vs the assembled-form exponent
};

std::vector<LimitReportRow> patch_limit_report(Surface s, const Profile& profile);

/* Multi-variable generating function: per-patch factors from the oracle,
 * assembled product, and the count of closed-form disagreements. */
struct SurfaceSeries {
    Surface surface;
    int levels;
    int n_total_max;
    // key: profile vector (n0..nN); value: y-Laurent coefficient
    std::vector<std::map<std::vector<int>, LaurentPoly>> patch_factors;
    std::map<std::vector<int>, LaurentPoly> assembled;
    long discrepancies = 0; // closed-form rows that disagree with the oracle
    std::vector<LimitReportRow> report;
};
SurfaceSeries surface_chi_y_series(Surface s, int n_total_max, int levels);

/* Nested-chain counting against the plane-partition series.  Chains are
 * graded by their total box count with every inner level nonempty; the
 * profile grading printed alongside documents how the two differ. */
struct MacmahonResult {
    std::vector<Int> chain_counts;      // box-count grading, orders 0..n_max
    std::vector<Int> plane_partitions;  // independent oracle
    std::vector<Int> profile_grading;   // the literal profile-sum grading
    bool match = true;                  // chain_counts == plane_partitions
    std::string sign_convention;
};
MacmahonResult macmahon_check(int n_max);

/* Euler numbers of the smooth nested families.  The y = 1 specialization of
 * the chi_-y genus counts fixed points exactly; on the trivially nested
 * family it reproduces the unnested point counts p(n) (rank 1) and their
 * rank-fold convolution.  The one-box-nested family counts partial sums of
 * p instead; both are reported. */
struct SmoothNestedResult {
    std::vector<Int> values;          // e_vir of the trivially nested family
    std::vector<Int> expected;        // p(n) or its rank-fold convolution
    std::vector<Int> one_box_family;  // e_vir of the (n; 1) profiles
    bool match = true;
};
SmoothNestedResult smooth_nested_check(int n_max, int rank);

} // namespace nestloc
