#include <doctest.h>

#include <random>

#include "c2/errors.hpp"
#include "c2/projective_ring.hpp"

using namespace c2;

namespace {

ProjClass mono(Ambient a, std::int64_t z0, std::int64_t z1, std::int64_t cw, std::int64_t ccw,
               const PointClass& c = PointClass::one()) {
    return ProjClass::monomial(a, {z0, z1, cw, ccw}, c);
}
ProjClass cst(Ambient a, const PointClass& c) { return ProjClass::constant(a, c); }
LaurentClass lm(std::int64_t i, std::int64_t z, std::int64_t c, std::int64_t coeff, std::int64_t bound) {
    return LaurentClass::monomial({i, z, c}, coeff, bound);
}

}  // namespace

TEST_CASE("defining relations") {
    const Ambient a{3, 3};
    const auto z0 = ProjClass::zeta0(a), z1 = ProjClass::zeta1(a);
    const auto cw = ProjClass::c_omega(a), ccw = ProjClass::c_chi_omega(a);
    CHECK(z0 * z1 == cst(a, PointClass::xi(1)));
    CHECK(z1 * ccw == (z0 * cw).times(PointClass(1) - PointClass::kappa()) + cst(a, PointClass::e(2)));
    CHECK(z0 * z0 * class_Q(a) == (z0 * ccw).scaled(2));
    CHECK((proj_pow(cw, 3) * proj_pow(ccw, 3)).is_zero());
    CHECK(class_Q(a) == proj_tau_monomial(a, 0, 0, 1) + (cw * ccw).times(PointClass::e_inv_kappa(2)));
    CHECK(class_chiQ(a) == z0 * cw + z1 * ccw);
}

TEST_CASE("restriction to the underlying space") {
    const Ambient a{2, 2};
    CHECK(proj_rho(ProjClass::c_omega(a)) == lm(0, 1, 1, 1, 4));
    CHECK(proj_rho(class_Q(a)) == lm(0, 0, 1, 2, 4));
    CHECK(proj_rho(ProjClass::zeta0(a)) == lm(2, -1, 0, 1, 4));
    CHECK(proj_rho(ProjClass::zeta1(a)) == lm(0, 1, 0, 1, 4));
    CHECK(proj_rho(ProjClass::c_chi_omega(a)) == lm(2, -1, 1, 1, 4));
    const Ambient b{1, 2};
    CHECK(proj_rho(ProjClass::divided0(b, 1)) == lm(-2, 2, 1, 1, 3));
}

TEST_CASE("fixed points") {
    const Ambient a{3, 2};
    for (std::int64_t i = 0; i <= 3; ++i)
        for (std::int64_t j = 0; j <= 2; ++j) {
            if (i == 3 && j == 2) continue;
            FixedPair want{std::vector<std::int64_t>(3, 0), std::vector<std::int64_t>(2, 0)};
            if (i < 3) want.on_b0[static_cast<std::size_t>(i)] = 1;
            if (j < 2) want.on_b1[static_cast<std::size_t>(j)] = 1;
            CHECK(proj_fixed(mono(a, 0, 0, i, j)) == want);
        }
    for (std::int64_t k = 1; k <= 4; ++k)
        CHECK(proj_fixed(proj_pow(ProjClass::zeta0(a), k)) == FixedPair{{0, 0, 0}, {1, 0}});
    CHECK(proj_fixed(class_Q(a)) == FixedPair{{0, 2, 0}, {0, 2}});
}

TEST_CASE("transfers") {
    const Ambient a{2, 2};
    CHECK(proj_tau(a, LaurentClass::monomial({0, 0, 0}), PiBDegree{}) == cst(a, PointClass::g()));
    CHECK(class_chiQ(a) == proj_tau_monomial(a, 2, 0, 1) + cst(a, PointClass::e(2)));
    for (std::int64_t k = 0; k <= 2; ++k)
        CHECK(proj_tau_monomial(a, 0, 0, k) * proj_tau_monomial(a, 0, 0, 1) == proj_tau_monomial(a, 0, 0, k + 1, 2));
    CHECK_THROWS_AS(proj_tau(a, LaurentClass::monomial({0, 0, 1}), PiBDegree{}), DegreeMismatch);
}

TEST_CASE("basis enumeration") {
    const auto b21 = basis_enumerate({2, 1}, 0);
    CHECK(b21.elements == std::vector<ProjMonomial>{{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}});
    const auto b30 = basis_enumerate({3, 0}, 2);
    CHECK(b30.elements == std::vector<ProjMonomial>{{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}});
    for (std::int64_t m = -11; m <= 11; ++m) {
        const auto b = basis_enumerate({4, 5}, m);
        REQUIRE(b.elements.size() == 9);
        for (std::size_t k = 0; k < b.elements.size(); ++k) {
            CHECK(b.elements[k].c_degree() == static_cast<std::int64_t>(k));
            CHECK(b.elements[k].coset() == m);
            CHECK(b.elements[k] == basis_element_closed({4, 5}, m, static_cast<std::int64_t>(k)));
        }
    }
}

TEST_CASE("reduce_to_basis") {
    const Ambient a{2, 2};
    const auto coords = reduce_to_basis(class_Q(a));
    CHECK(coords.size() == 2);
    CHECK(coords.at({0, 0, 1, 1}) == PointClass::e_inv_kappa(2));
    CHECK(reconstruct(a, coords) == class_Q(a));
    CHECK(reduce_to_basis(ProjClass(a)).empty());

    const Ambient b{3, 2};
    const auto basis = basis_enumerate(b, 1);
    for (const auto& x : basis.elements)
        for (const auto& y : basis.elements) {
            const auto prod = ProjClass::monomial(b, x) * ProjClass::monomial(b, y);
            CHECK(reconstruct(b, reduce_to_basis(prod)) == prod);
        }
}

TEST_CASE("freeness on small ambients") {
    for (std::int64_t p = 0; p <= 3; ++p)
        for (std::int64_t q = 0; p + q <= 4; ++q) {
            if (p + q == 0) continue;
            const Ambient a{p, q};
            for (std::int64_t m = -(p + q + 2); m <= p + q + 2; ++m) {
                const auto b = basis_enumerate(a, m);
                REQUIRE(b.elements.size() == static_cast<std::size_t>(p + q));
                for (const auto& x : b.elements) {
                    const auto cls = ProjClass::monomial(a, x);
                    REQUIRE(cls.terms().size() == 1);
                    CHECK(cls.terms().begin()->first == x);
                }
            }
        }
}

TEST_CASE("divided classes") {
    for (Ambient a : {Ambient{1, 2}, Ambient{2, 2}, Ambient{3, 1}}) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            CHECK(proj_pow(ProjClass::zeta0(a), k) * ProjClass::divided0(a, k) == proj_pow(ProjClass::c_omega(a), a.p));
            CHECK(proj_pow(ProjClass::zeta1(a), k) * ProjClass::divided1(a, k) ==
                  proj_pow(ProjClass::c_chi_omega(a), a.q));
        }
    }
}

TEST_CASE("relation shadows") {
    const Ambient a{2, 3};
    const auto lhs = ProjClass::zeta1(a) * ProjClass::c_chi_omega(a);
    const auto rhs = (ProjClass::zeta0(a) * ProjClass::c_omega(a)).times(PointClass(1) - PointClass::kappa()) +
                     cst(a, PointClass::e(2));
    CHECK(proj_rho(lhs) == lm(2, 0, 1, 1, 5));
    CHECK(proj_rho(rhs) == proj_rho(lhs));
    CHECK(proj_fixed(rhs) == proj_fixed(lhs));
}

TEST_CASE("shadows are multiplicative on random pairs") {
    std::mt19937_64 rng(11);
    for (Ambient a : {Ambient{2, 2}, Ambient{3, 1}, Ambient{0, 3}}) {
        auto random_class = [&] {
            ProjClass x(a);
            std::uniform_int_distribution<std::int64_t> e(0, 3), c(-3, 3);
            for (int t = 0; t < 3; ++t) {
                const PointClass coeff = (rng() & 1) ? PointClass(c(rng)) : PointClass::e(e(rng)).scaled(c(rng));
                x += mono(a, e(rng), e(rng), e(rng), e(rng), coeff);
            }
            return x;
        };
        for (int i = 0; i < 50; ++i) {
            const auto x = random_class(), y = random_class();
            CHECK(proj_rho(x * y) == proj_rho(x) * proj_rho(y));
            CHECK(proj_fixed(x * y) == proj_fixed(x) * proj_fixed(y));
        }
    }
}

TEST_CASE("Frobenius in the module") {
    const Ambient a{2, 2};
    const std::vector<ProjClass> gens{ProjClass::zeta0(a), ProjClass::zeta1(a), ProjClass::c_omega(a),
                                      ProjClass::c_chi_omega(a), cst(a, PointClass::e(1))};
    for (const auto& y : gens)
        for (std::int64_t i = -2; i <= 2; ++i)
            for (std::int64_t z = -2; z <= 2; ++z)
                for (std::int64_t c = 0; c <= 3; ++c) {
                    const auto x = lm(2 * i, z, c, 1, a.dim());
                    CHECK(y * proj_tau(a, x) == proj_tau(a, proj_rho(y) * x));
                }
}

TEST_CASE("rendering") {
    const Ambient a{3, 3};
    CHECK(mono(a, 2, 0, 0, 0).to_text() == "zeta0^2");
    CHECK(mono(a, 2, 0, 0, 0).to_latex().find("\\zeta_0^2") != std::string::npos);
    CHECK(mono(a, 0, 0, 1, 1).to_latex().find("\\widehat{c}_\\omega") != std::string::npos);
    CHECK(ProjClass(a).to_text() == "0");
}
