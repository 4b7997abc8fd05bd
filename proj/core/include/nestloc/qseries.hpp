#pragma once

#include "nestloc/invariants.hpp"

namespace nestloc {

/* Truncated power series in the elliptic nome with exact rational-function
 * coefficients.  Arithmetic never looks past qmax; the truncation order of a
 * product is the minimum of the operands'. */
class NomeSeries {
public:
    NomeSeries(VarSetPtr vs, int qmax);

    static NomeSeries one(VarSetPtr vs, int qmax);

    int qmax() const { return qmax_; }
    const VarSetPtr& varset() const { return vs_; }
    const RationalFn& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    RationalFn& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

    NomeSeries operator+(const NomeSeries& o) const;
    NomeSeries operator*(const NomeSeries& o) const;
    NomeSeries scaled(const RationalFn& s) const;
    // multiplicative inverse; the constant coefficient must be nonzero
    NomeSeries inverse() const;
    NomeSeries pow(int n) const; // any sign

    bool operator==(const NomeSeries& o) const;

private:
    VarSetPtr vs_;
    int qmax_;
    std::vector<RationalFn> c_;
};

/* The theta-quotient building block
 *
 *   theta(arg + z) / theta(arg),   e^{2 pi i arg} = M,  e^{2 pi i z} = y,
 *
 * with the balanced q^{1/8} and 1/i prefactors cancelled between numerator
 * and denominator.  Its constant coefficient is y^{-1/2} (1-yM)/(1-M); one
 * such block per localization factor makes the q^0 coefficient of the genus
 * automatically carry the y^{-vd/2} normalization.  M must be nontrivial
 * (theta vanishes at the origin). */
NomeSeries theta_ratio(VarSetPtr vs, const ExpVec& m_exps, int qmax);

struct EllipticResult {
    NomeSeries series;
    bool infeasible = false;
    Int fixed_points = 0;

    EllipticResult(VarSetPtr vs, int qmax) : series(std::move(vs), qmax) {}
};

/* Virtual equivariant elliptic genus through order qmax: per chain the
 * product of one theta block per weight factor, summed over fixed points. */
EllipticResult elliptic_genus(int rank, const Profile& profile, int qmax,
                              const Insertion& insertion = {}, int jobs = 1);

// virtual dimension of the fixed points of a profile (chain independent)
Int profile_virtual_dimension(int rank, const Profile& profile);

} // namespace nestloc
