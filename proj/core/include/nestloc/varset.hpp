#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nestloc {

/* An ordered set of variable names with a per-variable exponent denominator
 * (1 or 2).  Exponents are stored scaled by the denominator, so y^{1/2} on a
 * denominator-2 variable is the stored exponent 1.  A polynomial is bound to
 * one VarSet for its whole life; mixing VarSets is a logic error. */
class VarSet {
public:
    VarSet(std::vector<std::string> names, std::vector<int> dens);

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names,
                                              std::vector<int> dens = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int den(std::size_t i) const { return dens_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& dens() const { return dens_; }

    // index of a name; throws if absent
    std::size_t index(const std::string& n) const;
    bool has(const std::string& n) const;

    bool operator==(const VarSet& o) const {
        return names_ == o.names_ && dens_ == o.dens_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> dens_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/* Exponent vector, one scaled-integer entry per variable of the VarSet. */
using ExpVec = std::vector<std::int32_t>;

// Canonical variable sets used throughout the engine.
namespace vars {

// torus characters T1, T2 plus framing characters R1..Rr
VarSetPtr tangent(int rank);
// weight variables q1, q2 (+ y, den 2) (+ t1..tr)
VarSetPtr weight(int rank, bool with_y);
// the (q,t) pair used by the polynomiality / symmetric-function layer
VarSetPtr qt();
// q, t plus y (den 2)
VarSetPtr qty();
// a single auxiliary variable (limits)
VarSetPtr single(const std::string& name);
// y alone (den 2)
VarSetPtr y_only();

} // namespace vars

} // namespace nestloc
