#include <doctest.h>

#include "c2/errors.hpp"
#include "c2/euler.hpp"

using namespace c2;

namespace {

BundleSum sum(Ambient a, const std::string& text) { return {a, parse_bundles(text)}; }
ProjClass tau(Ambient a, std::int64_t i, std::int64_t z, std::int64_t c, std::int64_t coeff = 1) {
    return proj_tau_monomial(a, i, z, c, coeff);
}

}  // namespace

TEST_CASE("line bundles") {
    const Ambient a{3, 3};
    const auto Q = class_Q(a);
    CHECK(euler_line(a, LineBundleSpec::make(false, 1)) == ProjClass::c_omega(a));
    CHECK(euler_line(a, LineBundleSpec::make(false, 2)) == Q);
    CHECK(euler_line(a, LineBundleSpec::make(true, 2)) == class_chiQ(a));
    CHECK(euler_line(a, LineBundleSpec::make(false, -2)) == -Q);
    CHECK(euler_line(a, LineBundleSpec::make(false, 7)) == ProjClass::c_omega(a) + ProjClass::zeta1(a) * Q.scaled(3));
    CHECK(euler_line(a, LineBundleSpec::make(true, -3)) == ProjClass::c_chi_omega(a) - ProjClass::zeta0(a) * Q.scaled(2));
    CHECK(euler_line(a, LineBundleSpec::make(true, 6)) == class_chiQ(a) + tau(a, 2, 0, 1, 2));
    CHECK_THROWS(LineBundleSpec{Family::I, 2}.validate());
    CHECK_THROWS(LineBundleSpec{Family::IV, 3}.validate());
}

TEST_CASE("bundle parsing") {
    const auto b = parse_bundles("O(3), O(2),xO(1) , xO(-4)");
    REQUIRE(b.size() == 4);
    CHECK(b[0] == LineBundleSpec{Family::I, 3});
    CHECK(b[1] == LineBundleSpec{Family::II, 2});
    CHECK(b[2] == LineBundleSpec{Family::III, 1});
    CHECK(b[3] == LineBundleSpec{Family::IV, -4});
    CHECK(bundles_to_text(b) == "O(3),O(2),xO(1),xO(-4)");
    CHECK_THROWS_AS(parse_bundles("O(2.5)"), ParseError);
    CHECK_THROWS_AS(parse_bundles("O(3"), ParseError);
    CHECK_THROWS_AS(parse_bundles("P(3)"), ParseError);
    CHECK_THROWS_AS(parse_bundles("O(1),,O(1)"), ParseError);
    try {
        parse_bundles("O(1),O(x)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position >= 7);
    }
}

TEST_CASE("products") {
    const Ambient a{3, 3};
    CHECK(euler_product({a, {}}) == ProjClass::unit(a));
    CHECK(euler_product(sum(a, "O(1),O(1)")) == proj_pow(ProjClass::c_omega(a), 2));
    // O(3) + xO(3) against the two-family formula with d_I = d_III = 3.
    const auto Q = class_Q(a);
    const auto want = ProjClass::c_omega(a) * ProjClass::c_chi_omega(a) + ProjClass::c_chi_omega(a) * ProjClass::zeta1(a) * Q +
                      ProjClass::c_omega(a) * ProjClass::zeta0(a) * Q + tau(a, 2, 0, 2, 2);
    CHECK(euler_product(sum(a, "O(3),xO(3)")) == want);
}

TEST_CASE("invariants") {
    const auto i1 = bundle_invariants(sum({2, 2}, "O(3),O(2),xO(1)"));
    CHECK(i1.n == 3);
    CHECK(std::tuple(i1.n_I, i1.n_II, i1.n_III, i1.n_IV) == std::tuple(1, 1, 1, 0));
    CHECK(std::tuple(i1.n0, i1.n1, i1.Delta, i1.Delta0, i1.Delta1) == std::tuple(2, 2, 6, 0, 0));
    CHECK(std::tuple(i1.m, i1.m0, i1.m1, i1.ell, i1.k0, i1.k1) == std::tuple(1, 0, 0, -1, 1, 1));
    CHECK(i1.context_ok());

    const auto i2 = bundle_invariants(sum({3, 3}, "xO(2)"));
    CHECK(std::tuple(i2.n, i2.n_IV, i2.n0, i2.n1, i2.ell) == std::tuple(1, 1, 0, 0, 1));
    CHECK(std::tuple(i2.Delta, i2.Delta0, i2.Delta1, i2.eps) == std::tuple(2, 1, 1, 1));
    CHECK(std::tuple(i2.m, i2.m0, i2.m1) == std::tuple(5, 3, 3));

    const auto i3 = bundle_invariants(sum({2, 1}, "O(3),xO(1)"));
    CHECK(std::tuple(i3.n, i3.n0, i3.n1, i3.Delta, i3.Delta0, i3.Delta1) == std::tuple(2, 1, 1, 3, 3, 0));
    CHECK(std::tuple(i3.m, i3.m0, i3.m1, i3.ell) == std::tuple(1, 1, 0, 0));

    // Equal parity of the fixed degrees holds only while neither one is zeroed by saturation.
    for (const char* text : {"O(3),xO(5)", "xO(2),O(1)", "O(4),xO(4)", "O(3),O(5),xO(1)"}) {
        const auto v = bundle_invariants(sum({4, 4}, text));
        REQUIRE(v.n0 < 4);
        REQUIRE(v.n1 < 4);
        CHECK((v.Delta0 - v.Delta1) % 2 == 0);
    }

    const auto bad = bundle_invariants(sum({1, 1}, "O(1),O(1)"));
    REQUIRE_FALSE(bad.context_ok());
    CHECK(bad.context_warnings.front() == "n < p + q");
}

TEST_CASE("closed forms") {
    const auto i1 = bundle_invariants(sum({2, 2}, "O(3),O(2),xO(1)"));
    CHECK(euler_closed_form(i1) == tau({2, 2}, 2, 0, 3, 3));
    CHECK(euler_closed_form(i1) == euler_product(sum({2, 2}, "O(3),O(2),xO(1)")));

    const auto i2 = bundle_invariants(sum({3, 3}, "xO(2)"));
    CHECK(euler_closed_form_expr(i2).branch == "ell>0");
    CHECK(euler_closed_form(i2) == class_chiQ({3, 3}));

    for (const char* text : {"O(3),O(5)", "O(2),xO(3)", "xO(1),xO(4),O(1)", "O(4),O(2),xO(5)"}) {
        const auto s = sum({3, 3}, text);
        CHECK(euler_closed_form(bundle_invariants(s)) == euler_product(s));
    }
    CHECK_THROWS_AS(euler_closed_form_expr(bundle_invariants(sum({1, 1}, "O(1),O(1)"))), ContextViolation);
}

TEST_CASE("type blocks") {
    const Ambient a{3, 3};
    CHECK(euler_type_block(a, Family::I, 1, 3) == ProjClass::c_omega(a) + ProjClass::zeta1(a) * class_Q(a));
    CHECK(euler_type_block(a, Family::II, 2, 4) == proj_pow(class_Q(a), 2));
    CHECK(euler_type_block(a, Family::IV, 0, 1) == ProjClass::unit(a));
    CHECK_THROWS(euler_type_block(a, Family::II, 1, 3));
}

TEST_CASE("fixed-part sums for families I and III") {
    const Ambient a{4, 4};
    const auto Q = class_Q(a);
    const auto cw = ProjClass::c_omega(a), cx = ProjClass::c_chi_omega(a);
    for (std::int64_t dI : {1, 3, 5, 7})
        for (std::int64_t dIII : {1, 3, 5, 7})
            for (std::int64_t nI = 1; nI <= 3; ++nI)
                for (std::int64_t nIII = 1; nIII <= 3; ++nIII) {
                    std::string text;
                    for (std::int64_t i = 0; i < nI; ++i) text += "O(" + std::to_string(dI) + "),";
                    for (std::int64_t i = 0; i < nIII; ++i) text += "xO(" + std::to_string(dIII) + "),";
                    text.pop_back();
                    std::int64_t DI = 1, DIII = 1;
                    for (std::int64_t i = 0; i < nI; ++i) DI *= dI;
                    for (std::int64_t i = 0; i < nIII; ++i) DIII *= dIII;
                    const auto want = proj_pow(cw, nI) * proj_pow(cx, nIII) +
                                      (proj_pow(cw, nI - 1) * proj_pow(cx, nIII) * ProjClass::zeta1(a) * Q).scaled((DI - 1) / 2) +
                                      (proj_pow(cw, nI) * proj_pow(cx, nIII - 1) * ProjClass::zeta0(a) * Q).scaled((DIII - 1) / 2) +
                                      tau(a, 2 * nIII, nI - nIII, nI + nIII, (DI - 1) * (DIII - 1) / 2);
                    CHECK_MESSAGE(euler_product(sum(a, text)) == want, text);
                }
}
