#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nestloc/partition.hpp"

namespace nestloc {

/* Numerical type (n0; n1..nN).  The k-th inner partition has |mu_k| =
 * n0 - n_k, so a profile is feasible iff n0 >= n1 >= ... >= nN >= 0.
 * Profiles with any n_k < 0 or n_k > n0 are invalid input, not merely
 * infeasible. */
struct Profile {
    int n0 = 0;
    std::vector<int> inner; // n_1..n_N

    int levels() const { return static_cast<int>(inner.size()); }
    int inner_size(int k) const { return n0 - inner[static_cast<std::size_t>(k - 1)]; }

    enum class Status { Ok, Infeasible, Invalid };
    Status status() const;

    static Profile parse(const std::string& csv); // "n0,n1,..."
    std::string to_string() const;
    bool operator==(const Profile&) const = default;
};

/* A torus-fixed point: mu_1 \subseteq ... \subseteq mu_N \subseteq mu_0,
 * stored smallest-first with the outer partition separate. */
struct NestedChain {
    Partition mu0;
    std::vector<Partition> inner; // mu_1..mu_N

    int levels() const { return static_cast<int>(inner.size()); }
    // mu_k with mu(0) = mu0; k in 0..N
    const Partition& mu(int k) const {
        return k == 0 ? mu0 : inner[static_cast<std::size_t>(k - 1)];
    }
    bool valid() const;
    NestedChain conjugated() const;
    std::string to_string() const;
    bool operator==(const NestedChain&) const = default;
};

/* r-tuple of nested chains, one per color; level sizes add up to the
 * profile across colors. */
struct ColoredNestedChain {
    std::vector<NestedChain> colors;

    int rank() const { return static_cast<int>(colors.size()); }
    int levels() const { return colors.empty() ? 0 : colors[0].levels(); }
    ColoredNestedChain conjugated() const;
    std::string to_string() const;
    bool operator==(const ColoredNestedChain&) const = default;
};

/* Streaming enumeration; deterministic order, bounded memory.  Returns the
 * feasibility status; Invalid input throws instead. */
Profile::Status for_each_chain(const Profile& p,
                               const std::function<void(const NestedChain&)>& fn);
Profile::Status for_each_colored_chain(int rank, const Profile& p,
                                       const std::function<void(const ColoredNestedChain&)>& fn);

std::vector<NestedChain> enumerate_chains(const Profile& p);
std::vector<ColoredNestedChain> enumerate_colored_chains(int rank, const Profile& p);

Int count_chains(const Profile& p);
Int count_colored_chains(int rank, const Profile& p);

/* Partition the outer-partition index range for deterministic parallel
 * consumption: workers re-enumerate their slice. */
int chain_top_level_count(const Profile& p);
Profile::Status for_each_chain_in_slice(const Profile& p, int begin, int end,
                                        const std::function<void(const NestedChain&)>& fn);

// inner chains under a fixed outer partition (|mu0| must equal p.n0)
Profile::Status for_each_chain_with_mu0(const Partition& mu0, const Profile& p,
                                        const std::function<void(const NestedChain&)>& fn);

} // namespace nestloc
