#include "nestloc/varset.hpp"

#include <algorithm>

namespace nestloc {

VarSet::VarSet(std::vector<std::string> names, std::vector<int> dens)
    : names_(std::move(names)), dens_(std::move(dens)) {
    if (dens_.empty())
        dens_.assign(names_.size(), 1);
    if (dens_.size() != names_.size())
        throw std::invalid_argument("VarSet: names/dens length mismatch");
    for (int d : dens_)
        if (d != 1 && d != 2)
            throw std::invalid_argument("VarSet: denominator must be 1 or 2");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("VarSet: duplicate name " + names_[i]);
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names,
                                           std::vector<int> dens) {
    return std::make_shared<const VarSet>(std::move(names), std::move(dens));
}

std::size_t VarSet::index(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end())
        throw std::out_of_range("VarSet: no variable named " + n);
    return static_cast<std::size_t>(it - names_.begin());
}

bool VarSet::has(const std::string& n) const {
    return std::find(names_.begin(), names_.end(), n) != names_.end();
}

namespace vars {

VarSetPtr tangent(int rank) {
    std::vector<std::string> n = {"T1", "T2"};
    for (int a = 1; a <= rank; ++a)
        n.push_back("R" + std::to_string(a));
    return VarSet::make(std::move(n));
}

VarSetPtr weight(int rank, bool with_y) {
    std::vector<std::string> n = {"q1", "q2"};
    std::vector<int> d = {1, 1};
    if (with_y) {
        n.push_back("y");
        d.push_back(2);
    }
    for (int a = 1; a <= rank; ++a) {
        n.push_back("t" + std::to_string(a));
        d.push_back(1);
    }
    return VarSet::make(std::move(n), std::move(d));
}

VarSetPtr qt() { return VarSet::make({"q", "t"}); }

VarSetPtr qty() { return VarSet::make({"q", "t", "y"}, {1, 1, 2}); }

VarSetPtr single(const std::string& name) { return VarSet::make({name}); }

VarSetPtr y_only() { return VarSet::make({"y"}, {2}); }

} // namespace vars

} // namespace nestloc
