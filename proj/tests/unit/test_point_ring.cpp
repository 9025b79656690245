#include <doctest.h>

#include "c2/errors.hpp"
#include "c2/point_ring.hpp"

using namespace c2;

namespace {

PointClass tau_neg(std::int64_t k) { return PointClass(PointSym::tau_iota_neg(k)); }
LaurentClass iota(std::int64_t a, std::int64_t coeff = 1) { return LaurentClass::monomial({a, 0, 0}, coeff); }

// Basis symbols whose degree a + b sigma has |a|, |b| <= 8.
std::vector<PointClass> window_symbols() {
    std::vector<PointClass> out{PointClass::one(), PointClass::g()};
    for (std::int64_t m = 1; m <= 8; ++m) out.push_back(PointClass::e(m)), out.push_back(PointClass::e_inv_kappa(m));
    for (std::int64_t n = 1; n <= 4; ++n) out.push_back(PointClass::xi(n)), out.push_back(tau_neg(n));
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t n = 1; 2 * n <= 8 && m + 2 * n <= 8; ++n) out.emplace_back(PointSym::exi(m, n));
    return out;
}

}  // namespace

TEST_CASE("products") {
    CHECK(PointClass::g() * PointClass::g() == PointClass::g().scaled(2));
    CHECK(PointClass::e_inv_kappa(1) * PointClass::e_inv_kappa(1) == PointClass::e_inv_kappa(2).scaled(2));
    const PointClass exi = PointClass::e(1) * PointClass::xi(1);
    CHECK_FALSE(exi.is_zero());
    CHECK(exi.scaled(2).is_zero());
    CHECK(PointClass::kappa() * PointClass::kappa() == PointClass::kappa().scaled(2));
    CHECK(PointClass::kappa() == PointClass(2) - PointClass::g());
}

TEST_CASE("e times e^-m kappa") {
    CHECK(PointClass::e(1) * PointClass::e_inv_kappa(3) == PointClass::e_inv_kappa(2));
    CHECK(PointClass::e(3) * PointClass::e_inv_kappa(3) == PointClass::kappa());
    CHECK(PointClass::e(5) * PointClass::e_inv_kappa(3) == PointClass::e(2).scaled(2));
    CHECK((PointClass::xi(2) * PointClass::e_inv_kappa(4)).is_zero());
    CHECK((PointClass::g() * PointClass::e(3)).is_zero());
    CHECK(PointClass::g() * PointClass::xi(2) == PointClass::xi(2).scaled(2));
}

TEST_CASE("restriction") {
    CHECK(point_rho(PointClass::xi(2)) == iota(4));
    CHECK(point_rho(PointClass::e(3)).is_zero());
    CHECK(point_rho(PointClass::g()) == iota(0, 2));
    CHECK(point_rho(PointClass::one()) == iota(0));
    CHECK(point_rho(PointClass::e_inv_kappa(2)).is_zero());
    CHECK(point_rho(PointClass(PointSym::exi(1, 1))).is_zero());
    CHECK(point_rho(tau_neg(2)) == iota(-4, 2));
}

TEST_CASE("transfer") {
    CHECK(point_tau(iota(0)) == PointClass::g());
    CHECK(point_tau(iota(2)) == PointClass::xi(1).scaled(2));
    CHECK(point_tau(iota(6)) == PointClass::xi(3).scaled(2));
    CHECK(point_tau(iota(-4)) == tau_neg(2));
    CHECK_THROWS_AS(point_tau(iota(1)), UnsupportedSubring);
    CHECK_THROWS_AS(point_tau(iota(-3)), UnsupportedSubring);
}

TEST_CASE("fixed points") {
    CHECK(point_fixed(PointClass::e(4)) == 1);
    CHECK(point_fixed(PointClass::xi(1)) == 0);
    CHECK(point_fixed(PointClass::kappa()) == 2);
    CHECK(point_fixed(PointClass::g()) == 0);
    CHECK(point_fixed(PointClass::e_inv_kappa(3)) == 2);
    CHECK(point_fixed(tau_neg(1)) == 0);
}

TEST_CASE("rendering") {
    CHECK(PointClass::e(2).to_text() == "e^2");
    CHECK(PointClass::xi(3).to_text() == "xi^3");
    CHECK(PointClass::e_inv_kappa(2).to_text() == "e^-2 kappa");
    CHECK(tau_neg(2).to_text() == "tau(iota^-4)");
    CHECK(PointClass::g().to_text() == "g");
    CHECK(PointClass::kappa().to_text() == "kappa");
}

TEST_CASE("group structure spot checks") {
    CHECK(point_group_structure({0, 0}).burnside);
    CHECK(point_group_structure({0, 3}).free_rank == 1);
    CHECK(point_group_structure({0, -3}).free_rank == 1);
    CHECK(point_group_structure({-4, 4}).free_rank == 1);
    CHECK(point_group_structure({4, -4}).free_rank == 1);
    const auto t = point_group_structure({-2, 3});
    CHECK(t.free_rank == 0);
    CHECK(t.torsion == std::vector<std::int64_t>{2});
    const auto z = point_group_structure({1, 0});
    CHECK(z.free_rank == 0);
    CHECK(z.torsion.empty());
    CHECK_FALSE(z.burnside);
}

TEST_CASE("ring axioms and shadows on the window") {
    const auto syms = window_symbols();
    for (const auto& a : syms)
        for (const auto& b : syms) {
            const auto ab = a * b;
            CHECK(ab == b * a);
            CHECK(point_rho(ab) == point_rho(a) * point_rho(b));
            CHECK(point_fixed(ab) == point_fixed(a) * point_fixed(b));
        }
    for (const auto& a : syms) CHECK(point_tau(point_rho(a)) == PointClass::g() * a);
}

TEST_CASE("associativity on small symbols") {
    std::vector<PointClass> syms{PointClass::one(), PointClass::g(), PointClass::kappa()};
    for (std::int64_t m = 1; m <= 3; ++m) {
        syms.push_back(PointClass::e(m));
        syms.push_back(PointClass::e_inv_kappa(m));
        syms.push_back(PointClass::xi(m));
        syms.push_back(tau_neg(m));
    }
    syms.emplace_back(PointSym::exi(1, 1));
    for (const auto& a : syms)
        for (const auto& b : syms)
            for (const auto& c : syms) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("Frobenius") {
    for (const auto& b : window_symbols())
        for (std::int64_t k = -4; k <= 4; ++k) CHECK(b * point_tau(iota(2 * k)) == point_tau(point_rho(b) * iota(2 * k)));
}
