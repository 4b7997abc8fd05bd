#include "nestloc/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nestloc {

Profile::Status Profile::status() const {
    if (n0 < 0)
        return Status::Invalid;
    for (int nk : inner)
        if (nk < 0 || nk > n0)
            return Status::Invalid; // inner size would be negative or exceed n0
    for (std::size_t k = 1; k < inner.size(); ++k)
        if (inner[k - 1] < inner[k])
            return Status::Infeasible; // |mu_k| > |mu_{k+1}| cannot nest
    return Status::Ok;
}

Profile Profile::parse(const std::string& csv) {
    Profile p;
    std::stringstream ss(csv);
    std::string tok;
    bool first = true;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("Profile::parse: empty component");
        int v = std::stoi(tok);
        if (first) {
            p.n0 = v;
            first = false;
        } else {
            p.inner.push_back(v);
        }
    }
    if (first)
        throw std::invalid_argument("Profile::parse: empty profile");
    return p;
}

std::string Profile::to_string() const {
    std::ostringstream os;
    os << "(" << n0;
    for (int v : inner)
        os << "," << v;
    os << ")";
    return os.str();
}

bool NestedChain::valid() const {
    for (int k = 1; k <= levels(); ++k) {
        const Partition& lo = mu(k);
        const Partition& hi = (k == levels()) ? mu0 : mu(k + 1);
        if (!lo.contained_in(hi))
            return false;
    }
    if (levels() > 0 && !inner.back().contained_in(mu0))
        return false;
    return true;
}

NestedChain NestedChain::conjugated() const {
    NestedChain c;
    c.mu0 = mu0.conjugate();
    for (const auto& m : inner)
        c.inner.push_back(m.conjugate());
    return c;
}

std::string NestedChain::to_string() const {
    std::ostringstream os;
    for (const auto& m : inner)
        os << m.to_string() << " <= ";
    os << mu0.to_string();
    return os.str();
}

ColoredNestedChain ColoredNestedChain::conjugated() const {
    ColoredNestedChain c;
    for (const auto& ch : colors)
        c.colors.push_back(ch.conjugated());
    return c;
}

std::string ColoredNestedChain::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t a = 0; a < colors.size(); ++a)
        os << (a ? " | " : "") << colors[a].to_string();
    os << "]";
    return os.str();
}

namespace {

/* Extend the chain inwards: level k holds a partition of inner_size(k)
 * contained in level k+1 (or mu0 for k = N).  Enumeration goes from the
 * outermost inner level down to mu_1. */
void extend_down(const Profile& p, NestedChain& chain, int k,
                 const std::function<void(const NestedChain&)>& fn) {
    if (k == 0) {
        fn(chain);
        return;
    }
    const Partition& outer = (k == p.levels()) ? chain.mu0 : chain.mu(k + 1);
    for (const auto& m : enumerate_subpartitions(p.inner_size(k), outer)) {
        chain.inner[static_cast<std::size_t>(k - 1)] = m;
        extend_down(p, chain, k - 1, fn);
    }
}

} // namespace

int chain_top_level_count(const Profile& p) {
    if (p.status() == Profile::Status::Invalid)
        throw std::invalid_argument("invalid profile " + p.to_string());
    return static_cast<int>(enumerate_partitions(p.n0).size());
}

Profile::Status for_each_chain_in_slice(const Profile& p, int begin, int end,
                                        const std::function<void(const NestedChain&)>& fn) {
    auto st = p.status();
    if (st == Profile::Status::Invalid)
        throw std::invalid_argument("invalid profile " + p.to_string());
    if (st == Profile::Status::Infeasible)
        return st;
    auto mu0s = enumerate_partitions(p.n0);
    end = std::min<int>(end, static_cast<int>(mu0s.size()));
    NestedChain chain;
    chain.inner.assign(static_cast<std::size_t>(p.levels()), Partition());
    for (int i = begin; i < end; ++i) {
        chain.mu0 = mu0s[static_cast<std::size_t>(i)];
        extend_down(p, chain, p.levels(), fn);
    }
    return st;
}

Profile::Status for_each_chain(const Profile& p,
                               const std::function<void(const NestedChain&)>& fn) {
    return for_each_chain_in_slice(p, 0, chain_top_level_count(p), fn);
}

Profile::Status for_each_chain_with_mu0(const Partition& mu0, const Profile& p,
                                        const std::function<void(const NestedChain&)>& fn) {
    auto st = p.status();
    if (st == Profile::Status::Invalid)
        throw std::invalid_argument("invalid profile " + p.to_string());
    if (mu0.size() != p.n0)
        throw std::invalid_argument("for_each_chain_with_mu0: |mu0| != n0");
    if (st == Profile::Status::Infeasible)
        return st;
    NestedChain chain;
    chain.mu0 = mu0;
    chain.inner.assign(static_cast<std::size_t>(p.levels()), Partition());
    extend_down(p, chain, p.levels(), fn);
    return st;
}

std::vector<NestedChain> enumerate_chains(const Profile& p) {
    std::vector<NestedChain> out;
    for_each_chain(p, [&](const NestedChain& c) { out.push_back(c); });
    return out;
}

Int count_chains(const Profile& p) {
    Int n = 0;
    for_each_chain(p, [&](const NestedChain&) { ++n; });
    return n;
}

namespace {

/* Colored enumeration: distribute every level size over r colors, then glue
 * one ordinary chain per color. */
void assemble_colors(int rank, const std::vector<Profile>& per_color, int color,
                     ColoredNestedChain& acc,
                     const std::function<void(const ColoredNestedChain&)>& fn) {
    if (color == rank) {
        fn(acc);
        return;
    }
    for_each_chain(per_color[static_cast<std::size_t>(color)], [&](const NestedChain& c) {
        acc.colors[static_cast<std::size_t>(color)] = c;
        assemble_colors(rank, per_color, color + 1, acc, fn);
    });
}

/* Choose per-color sizes for one level: compositions of the level total
 * into `rank` parts.  Levels are processed N, N-1, ..., 1, 0, so sizes[a]
 * reads [s_N, ..., s_{level+1}] when level is being chosen.  Per color the
 * sizes must satisfy s_1 <= ... <= s_N <= s_0. */
void split_level(int rank, const Profile& p, int level,
                 std::vector<std::vector<int>>& sizes,
                 const std::function<void()>& done) {
    const int total = (level == 0) ? p.n0 : p.inner_size(level);
    const int N = p.levels();
    auto fits = [&](int a, int s) {
        const auto& col = sizes[static_cast<std::size_t>(a)];
        if (col.empty())
            return true; // level == N, first choice for this color
        if (level == 0)
            return s >= col.front(); // outer dominates s_N
        return s <= col.back(); // s_level <= s_{level+1}
    };
    (void)N;
    std::vector<int> comp(static_cast<std::size_t>(rank), 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == rank - 1) {
            if (!fits(idx, rem))
                return;
            comp[static_cast<std::size_t>(idx)] = rem;
            for (int a = 0; a < rank; ++a)
                sizes[static_cast<std::size_t>(a)].push_back(comp[static_cast<std::size_t>(a)]);
            done();
            for (int a = 0; a < rank; ++a)
                sizes[static_cast<std::size_t>(a)].pop_back();
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            if (!fits(idx, v))
                continue;
            comp[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, total);
}

} // namespace

Profile::Status for_each_colored_chain(
    int rank, const Profile& p,
    const std::function<void(const ColoredNestedChain&)>& fn) {
    if (rank < 1)
        throw std::invalid_argument("rank must be >= 1");
    auto st = p.status();
    if (st == Profile::Status::Invalid)
        throw std::invalid_argument("invalid profile " + p.to_string());
    if (st == Profile::Status::Infeasible)
        return st;
    if (rank == 1) {
        return for_each_chain(p, [&](const NestedChain& c) {
            ColoredNestedChain cc;
            cc.colors = {c};
            fn(cc);
        });
    }

    const int N = p.levels();
    // per-color size tables, filled level N, N-1, ..., 1, then 0 (outer last)
    std::vector<std::vector<int>> sizes(static_cast<std::size_t>(rank));
    std::function<void(int)> by_level = [&](int level) {
        if (level == -1) {
            // sizes[a] = [s_N, ..., s_1, s_0]; build per-color profiles
            std::vector<Profile> per_color(static_cast<std::size_t>(rank));
            for (int a = 0; a < rank; ++a) {
                const auto& col = sizes[static_cast<std::size_t>(a)];
                Profile q;
                q.n0 = col.back();
                for (int k = 1; k <= N; ++k) {
                    // inner size of level k is col[N-k]; store n_k = n0 - size
                    q.inner.push_back(q.n0 - col[static_cast<std::size_t>(N - k)]);
                }
                per_color[static_cast<std::size_t>(a)] = q;
            }
            ColoredNestedChain acc;
            acc.colors.assign(static_cast<std::size_t>(rank), NestedChain());
            assemble_colors(rank, per_color, 0, acc, fn);
            return;
        }
        split_level(rank, p, level, sizes, [&]() { by_level(level - 1); });
    };
    by_level(N);
    return st;
}

std::vector<ColoredNestedChain> enumerate_colored_chains(int rank, const Profile& p) {
    std::vector<ColoredNestedChain> out;
    for_each_colored_chain(rank, p, [&](const ColoredNestedChain& c) { out.push_back(c); });
    return out;
}

Int count_colored_chains(int rank, const Profile& p) {
    Int n = 0;
    for_each_colored_chain(rank, p, [&](const ColoredNestedChain&) { ++n; });
    return n;
}

} // namespace nestloc
