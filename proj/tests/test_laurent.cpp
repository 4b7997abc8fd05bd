#include <doctest.h>

#include <random>

#include "nestloc/laurent.hpp"

using namespace nestloc;

namespace {

LaurentPoly random_poly(VarSetPtr vs, std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> coef(-5, 5);
    LaurentPoly p(vs);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        ExpVec e(vs->size());
        for (auto& x : e)
            x = expo(rng);
        p.add_term(e, coef(rng));
    }
    return p;
}

} // namespace

TEST_CASE("basic arithmetic identities") {
    auto vs = vars::weight(1, false);
    auto q1 = LaurentPoly::var(vs, "q1");
    auto one = LaurentPoly::one(vs);
    // (1-q1)(1+q1) = 1 - q1^2
    CHECK((one - q1) * (one + q1) == one - q1 * q1);
}

TEST_CASE("half-integer exponents multiply on the doubled lattice") {
    auto vs = vars::y_only();
    ExpVec half{1}; // y^{1/2}
    auto yhalf = LaurentPoly::monomial(vs, half, 1);
    auto y = LaurentPoly::var(vs, "y");
    CHECK(yhalf * yhalf == y);
}

TEST_CASE("ring axioms on randomized polynomials") {
    auto vs = vars::qt();
    std::mt19937 rng(20240811);
    for (int it = 0; it < 1200; ++it) {
        auto a = random_poly(vs, rng);
        auto b = random_poly(vs, rng);
        auto c = random_poly(vs, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    auto vs = vars::qt();
    auto q = LaurentPoly::var(vs, "q");
    auto t = LaurentPoly::var(vs, "t");
    auto one = LaurentPoly::one(vs);
    auto f = (one - q * t) * (one + q + t);
    auto g = one - q * t;
    auto quo = f.divide_exact(g);
    REQUIRE(quo.has_value());
    CHECK(*quo == one + q + t);
    CHECK_FALSE((one + q).divide_exact(g).has_value());
    // Laurent shifts divide through
    auto shifted = f * LaurentPoly::var(vs, "q", -2);
    auto quo2 = shifted.divide_exact(g);
    REQUIRE(quo2.has_value());
    CHECK(*quo2 == (one + q + t) * LaurentPoly::var(vs, "q", -2));
}

TEST_CASE("division agrees with multiplication on random pairs") {
    auto vs = vars::qt();
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        auto a = random_poly(vs, rng);
        auto b = random_poly(vs, rng);
        if (b.is_zero())
            continue;
        auto q = (a * b).divide_exact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("monomial substitution is a ring homomorphism") {
    auto vs = vars::weight(1, false);
    auto target = vars::qt();
    std::vector<LaurentPoly::MonomialBinding> bind(vs->size());
    for (auto& b : bind)
        b.exps.assign(target->size(), 0);
    bind[vs->index("q1")].exps = ExpVec{-1, 0}; // q1 -> q^{-1}
    bind[vs->index("q2")].exps = ExpVec{0, -1}; // q2 -> t^{-1}
    bind[vs->index("t1")].exps = ExpVec{0, 0};  // t1 -> 1

    std::mt19937 rng(99);
    for (int it = 0; it < 300; ++it) {
        auto a = random_poly(vs, rng);
        auto b = random_poly(vs, rng);
        CHECK((a * b).substitute(target, bind) ==
              a.substitute(target, bind) * b.substitute(target, bind));
        CHECK((a + b).substitute(target, bind) ==
              a.substitute(target, bind) + b.substitute(target, bind));
    }
}

TEST_CASE("substitution examples") {
    auto vs = vars::weight(1, false);
    // q1 -> 1/q2 (a patch-table style binding)
    std::vector<LaurentPoly::MonomialBinding> bind(vs->size());
    for (std::size_t i = 0; i < vs->size(); ++i) {
        bind[i].exps.assign(vs->size(), 0);
        bind[i].exps[i] = 1;
    }
    bind[vs->index("q1")].exps = ExpVec(vs->size(), 0);
    bind[vs->index("q1")].exps[vs->index("q2")] = -1;
    auto img = LaurentPoly::var(vs, "q1").substitute(vs, bind);
    CHECK(img == LaurentPoly::var(vs, "q2", -1));
    // identity bindings act trivially
    std::vector<LaurentPoly::MonomialBinding> ident(vs->size());
    for (std::size_t i = 0; i < vs->size(); ++i) {
        ident[i].exps.assign(vs->size(), 0);
        ident[i].exps[i] = 1;
    }
    auto p = LaurentPoly::var(vs, "q1", 2) * LaurentPoly::var(vs, "q2", -1);
    CHECK(p.substitute(vs, ident) == p);
}

TEST_CASE("swap_vars exchanges exponents") {
    auto vs = vars::qt();
    auto p = LaurentPoly::var(vs, "q", 2) + LaurentPoly::var(vs, "t", -1);
    auto s = p.swap_vars("q", "t");
    CHECK(s == LaurentPoly::var(vs, "t", 2) + LaurentPoly::var(vs, "q", -1));
}
