#include <doctest.h>

#include <random>

#include "c2/grading.hpp"

using namespace c2;

TEST_CASE("degree_add examples") {
    const auto omega = standard_degree("omega");
    const auto chi_omega = standard_degree("chi_omega");
    CHECK(omega + chi_omega == PiBDegree{4, 2, 2});
    CHECK(omega + (-1) * omega == PiBDegree{0, 0, 0});
    CHECK(standard_degree("zeta0") + standard_degree("zeta1") == PiBDegree{0, -2, -2});
    CHECK(standard_degree("zeta0") + standard_degree("zeta1") == standard_degree("xi"));
}

TEST_CASE("standard degree table") {
    CHECK(standard_degree("one") == PiBDegree{1, 1, 1});
    CHECK(standard_degree("sigma") == PiBDegree{1, 0, 0});
    CHECK(standard_degree("omega") == PiBDegree{2, 2, 0});
    CHECK(standard_degree("chi_omega") == PiBDegree{2, 0, 2});
    CHECK(standard_degree("Omega0") == PiBDegree{0, -2, 0});
    CHECK(standard_degree("Omega1") == PiBDegree{0, 0, -2});
    CHECK(standard_degree("Omega0") + standard_degree("Omega1") == PiBDegree{0, -2, -2});
    CHECK(standard_degree("zeta0") == standard_degree("chi_omega") - 2 * standard_degree("one"));
    CHECK(standard_degree("zeta1") == standard_degree("omega") - 2 * standard_degree("one"));
    CHECK(standard_degree("c_omega") == standard_degree("omega"));
    CHECK(standard_degree("c_chi_omega") == standard_degree("chi_omega"));
    CHECK(standard_degree("e") == standard_degree("sigma"));
    CHECK(standard_degree("xi") == 2 * standard_degree("sigma") - 2 * standard_degree("one"));
    CHECK(standard_degree("omega") == 2 * standard_degree("one") + standard_degree("Omega1"));
    CHECK(standard_degree("chi_omega") == 2 * standard_degree("one") + standard_degree("Omega0"));
    CHECK_THROWS(standard_degree("psi"));
}

TEST_CASE("RO(C2) detection and conversion") {
    CHECK(is_roc2({2, 2, 2}));
    CHECK_FALSE(is_roc2({2, 2, 0}));
    CHECK(is_roc2({0, -2, -2}));
    REQUIRE(to_roc2({0, -2, -2}).has_value());
    CHECK(*to_roc2({0, -2, -2}) == ROC2Degree{-2, 2});
    CHECK_FALSE(to_roc2({2, 2, 0}).has_value());
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = -5; b <= 5; ++b) CHECK(to_roc2(from_roc2({a, b})) == ROC2Degree{a, b});
}

TEST_CASE("coset index") {
    CHECK(standard_degree("omega").coset() == 1);
    CHECK(standard_degree("chi_omega").coset() == -1);
    CHECK(standard_degree("xi").coset() == 0);
}

TEST_CASE("group law on |ranks| <= 6") {
    std::vector<PiBDegree> window;
    for (std::int64_t r = -6; r <= 6; ++r)
        for (std::int64_t f0 = -6; f0 <= 6; ++f0)
            for (std::int64_t f1 = -6; f1 <= 6; ++f1)
                if (PiBDegree{r, f0, f1}.parity_ok()) window.push_back({r, f0, f1});
    const PiBDegree zero{};
    bool ok = true;
    for (const auto& a : window) {
        ok = ok && a + zero == a && a + (-a) == zero;
        for (const auto& b : window) ok = ok && a + b == b + a && (a + b).parity_ok();
    }
    CHECK(ok);

    std::vector<PiBDegree> small;
    for (const auto& a : window)
        if (std::abs(a.total_rank) <= 2 && std::abs(a.fixed_rank_0) <= 2 && std::abs(a.fixed_rank_1) <= 2)
            small.push_back(a);
    bool assoc = true;
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) assoc = assoc && (a + b) + c == a + (b + c);
    CHECK(assoc);
}

TEST_CASE("parity survives random add/negate sequences") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 11);
    const std::vector<std::string> names{"one", "sigma", "omega", "chi_omega", "Omega0", "Omega1",
                                         "zeta0", "zeta1", "c_omega", "c_chi_omega", "e", "xi"};
    for (int trial = 0; trial < 200; ++trial) {
        PiBDegree d{};
        for (int step = 0; step < 30; ++step) {
            const auto g = standard_degree(names[static_cast<std::size_t>(pick(rng))]);
            d = (rng() & 1) ? d + g : d - g;
            if (rng() % 5 == 0) d = -d;
        }
        CHECK(d.parity_ok());
    }
}

TEST_CASE("rendering") {
    CHECK(to_string(ROC2Degree{-2, 2}) == "-2+2sigma");
    CHECK_FALSE(to_string(PiBDegree{2, 2, 0}).empty());
}
