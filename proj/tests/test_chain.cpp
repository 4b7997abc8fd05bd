#include <doctest.h>

#include <sstream>

#include "nestloc/chain.hpp"

using namespace nestloc;

TEST_CASE("profile parsing and status") {
    Profile p = Profile::parse("3,2,1");
    CHECK(p.n0 == 3);
    CHECK(p.inner == std::vector<int>{2, 1});
    CHECK(p.status() == Profile::Status::Ok);

    CHECK(Profile{2, {1, 2}}.status() == Profile::Status::Infeasible);
    CHECK(Profile{2, {3}}.status() == Profile::Status::Invalid);
    CHECK(Profile{-1, {}}.status() == Profile::Status::Invalid);
}

TEST_CASE("chain enumeration small cases") {
    CHECK(count_chains(Profile{1, {}}) == 1);
    CHECK(count_chains(Profile{2, {1}}) == 2);
    CHECK(count_chains(Profile{2, {2}}) == 2); // both mu0, mu1 empty
    // infeasible profile: empty stream, flagged distinctly
    Int seen = 0;
    auto st = for_each_chain(Profile{2, {1, 2}}, [&](const NestedChain&) { ++seen; });
    CHECK(st == Profile::Status::Infeasible);
    CHECK(seen == 0);
    CHECK_THROWS_AS(count_chains(Profile{1, {2}}), std::invalid_argument);
}

TEST_CASE("one-box-step chain counts are partial sums of p") {
    // brute-force cross-check: #chains(n,1) = p(0) + ... + p(n-1)
    for (int n = 1; n <= 8; ++n) {
        Int expect = 0;
        for (int k = 0; k < n; ++k)
            expect += partition_count(k);
        CHECK(count_chains(Profile{n, {1}}) == expect);
    }
}

TEST_CASE("chain stream is deterministic and valid") {
    Profile p{4, {2, 1}};
    std::ostringstream a, b;
    for_each_chain(p, [&](const NestedChain& c) {
        CHECK(c.valid());
        a << c.to_string() << ";";
    });
    for_each_chain(p, [&](const NestedChain& c) { b << c.to_string() << ";"; });
    CHECK(a.str() == b.str());
}

TEST_CASE("sliced enumeration covers the stream exactly once") {
    Profile p{5, {2}};
    std::vector<std::string> whole, sliced;
    for_each_chain(p, [&](const NestedChain& c) { whole.push_back(c.to_string()); });
    int top = chain_top_level_count(p);
    for (int i = 0; i < top; i += 2)
        for_each_chain_in_slice(p, i, std::min(i + 2, top), [&](const NestedChain& c) {
            sliced.push_back(c.to_string());
        });
    CHECK(whole == sliced);
}

TEST_CASE("colored chains") {
    // r = 1 reduces to the plain stream
    Profile p{2, {1}};
    auto plain = enumerate_chains(p);
    auto colored = enumerate_colored_chains(1, p);
    REQUIRE(plain.size() == colored.size());
    for (std::size_t i = 0; i < plain.size(); ++i)
        CHECK(colored[i].colors[0] == plain[i]);

    // one box in either color
    CHECK(count_colored_chains(2, Profile{1, {}}) == 2);

    // brute force over color splittings: nested pairs of colored partitions
    Int expect = 0;
    for (int s1 = 0; s1 <= 2; ++s1) {
        for (const auto& m0a : enumerate_partitions(s1))
            for (const auto& m0b : enumerate_partitions(2 - s1))
                for (int t1 = 0; t1 <= 1; ++t1)
                    for (const auto& m1a : enumerate_subpartitions(t1, m0a))
                        for (const auto& m1b : enumerate_subpartitions(1 - t1, m0b)) {
                            (void)m1a;
                            (void)m1b;
                            ++expect;
                        }
    }
    CHECK(count_colored_chains(2, Profile{2, {1}}) == expect);
}

TEST_CASE("per-level totals match the rank-2 profile") {
    Profile p{3, {1}};
    for_each_colored_chain(2, p, [&](const ColoredNestedChain& c) {
        int outer = 0, inner = 0;
        for (const auto& ch : c.colors) {
            outer += ch.mu0.size();
            inner += ch.mu(1).size();
            CHECK(ch.valid());
        }
        CHECK(outer == 3);
        CHECK(inner == 2);
    });
}
