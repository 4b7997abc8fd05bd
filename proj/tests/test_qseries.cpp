#include <doctest.h>

#include "nestloc/qseries.hpp"

using namespace nestloc;

namespace {

RationalFn ypow(const VarSetPtr& vs, int half_steps) {
    ExpVec e(vs->size(), 0);
    e[vs->index("y")] = half_steps; // scaled units: 1 = y^{1/2}
    return RationalFn(LaurentPoly::monomial(vs, e, 1));
}

} // namespace

TEST_CASE("series arithmetic and truncation propagation") {
    auto vs = vars::weight(1, true);
    auto a = NomeSeries::one(vs, 3);
    a.coeff(1) = RationalFn(LaurentPoly::var(vs, "y"));
    auto b = NomeSeries::one(vs, 2);
    b.coeff(2) = RationalFn::constant(vs, -1);
    auto c = a * b;
    CHECK(c.qmax() == 2);
    CHECK(c.coeff(1) == RationalFn(LaurentPoly::var(vs, "y")));
    CHECK(c.coeff(2) == RationalFn::constant(vs, -1));
    // inverse is a two-sided inverse through the truncation order
    auto inv = a.inverse();
    auto prod = a * inv;
    CHECK(prod.coeff(0) == RationalFn::one(vs));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2).is_zero());
}

TEST_CASE("theta block structure") {
    auto vs = vars::weight(1, true);
    ExpVec m(vs->size(), 0);
    m[vs->index("q1")] = 1;

    auto th = theta_ratio(vs, m, 2);
    // constant coefficient y^{-1/2} (1 - yM)/(1 - M)
    auto one = LaurentPoly::one(vs);
    auto M = LaurentPoly::monomial(vs, m, 1);
    ExpVec my = m;
    my[vs->index("y")] += 2;
    auto yM = LaurentPoly::monomial(vs, my, 1);
    CHECK(th.coeff(0) == ypow(vs, -1) * RationalFn(one - yM, one - M));

    // swapping numerator and denominator inverts the series
    auto inv = th.inverse();
    auto prod = th * inv;
    CHECK(prod.coeff(0) == RationalFn::one(vs));
    CHECK(prod.coeff(1).is_zero());

    // a vanishing theta argument is an error
    CHECK_THROWS(theta_ratio(vs, ExpVec(vs->size(), 0), 2));
}

TEST_CASE("elliptic genus degenerations, rank 1") {
    for (int n0 = 0; n0 <= 3; ++n0)
        for (int n1 = 0; n1 <= n0; ++n1) {
            Profile p{n0, {}};
            if (n0 > 0)
                p.inner = {n1};
            auto ell = elliptic_genus(1, p, 1);
            ChiOptions oy;
            oy.flavor = Flavor::ChiY;
            auto chi = chi_vir(1, p, oy);
            auto vs = ell.series.varset();
            Int vd = profile_virtual_dimension(1, p);
            auto norm = ypow(vs, -static_cast<int>(vd.convert_to<long long>()));
            CHECK(ell.series.coeff(0) == chi.value.extend_to(vs) * norm);
            if (n0 == 0)
                break;
        }
}

TEST_CASE("elliptic genus profile (0) is 1") {
    auto ell = elliptic_genus(1, Profile{0, {}}, 2);
    CHECK(ell.series.coeff(0) == RationalFn::one(ell.series.varset()));
    CHECK(ell.series.coeff(1).is_zero());
    CHECK(ell.series.coeff(2).is_zero());
}

TEST_CASE("elliptic genus rank 2 degeneration") {
    Profile p{2, {1}};
    auto ell = elliptic_genus(2, p, 1);
    ChiOptions oy;
    oy.flavor = Flavor::ChiY;
    auto chi = chi_vir(2, p, oy);
    auto vs = ell.series.varset();
    Int vd = profile_virtual_dimension(2, p);
    auto norm = ypow(vs, -static_cast<int>(vd.convert_to<long long>()));
    CHECK(ell.series.coeff(0) == chi.value.extend_to(vs) * norm);
}

TEST_CASE("parallel elliptic evaluation is deterministic") {
    Profile p{3, {1}};
    auto a = elliptic_genus(1, p, 2, {}, 1);
    auto b = elliptic_genus(1, p, 2, {}, 4);
    for (int k = 0; k <= 2; ++k) {
        CHECK(a.series.coeff(k).num() == b.series.coeff(k).num());
        CHECK(a.series.coeff(k).den() == b.series.coeff(k).den());
    }
}
