#include <doctest.h>

#include "c2/errors.hpp"
#include "c2/render_json.hpp"
#include "c2/schubert.hpp"

using namespace c2;

namespace {

BundleInvariants inv_of(Ambient a, const std::string& text) { return bundle_invariants({a, parse_bundles(text)}); }

template <class T>
int count_of(const BezoutExpansion& e) {
    int n = 0;
    for (const auto& t : e.terms) n += std::holds_alternative<T>(t.term) ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("class dictionary") {
    const Ambient a{3, 2};
    CHECK(class_of(InvariantChain{2, 2, 0, 0, std::nullopt}, a) == ProjClass::c_omega(a));
    CHECK(class_of(BinatePair{4, 2, 1, SingularPart::None}, a) == class_Q(a));
    CHECK(class_of(BinatePair{3, 2, 1, SingularPart::None}, a) == (ProjClass::c_omega(a) * ProjClass::c_chi_omega(a)).scaled(2));
    for (std::int64_t k = 1; k <= 2; ++k)
        CHECK(class_of(InvariantChain{3, 2, k, 0, std::nullopt}, a) == proj_pow(ProjClass::zeta0(a), k));
    CHECK(class_of(BinatePair{4, 2, 1, SingularPart::Zeta0}, a) == ProjClass::zeta0(a) * class_Q(a));
    CHECK_THROWS(class_of(BinatePair{2, 2, 1, SingularPart::None}, a));
}

TEST_CASE("binate class has two equal descriptions") {
    const Ambient a{3, 3};
    for (std::int64_t i = 1; i < a.dim(); ++i)
        for (std::int64_t pi = 0; pi <= a.p; ++pi)
            for (std::int64_t qi = 0; qi <= a.q; ++qi) {
                if (pi + qi > i || i - qi > a.p || i - pi > a.q) continue;
                const auto c = class_of(BinatePair{i, pi, qi, SingularPart::None}, a);
                CHECK(c == binate_class_product_form(a, i, pi, qi));
                CHECK(c == binate_class_codim(a, a.dim() - i, a.p - pi, a.q - qi));
            }
}

TEST_CASE("chi Q as two invariant pairs") {
    for (Ambient a : {Ambient{2, 2}, Ambient{1, 1}}) {
        const auto d = chiQ_class(a);
        REQUIRE(d.terms.size() == 2);
        CHECK(d.terms[0] == GeometricTerm{InvariantChain{a.p - 1, a.q, 1, 0, std::nullopt}});
        CHECK(d.terms[1] == GeometricTerm{InvariantChain{a.p, a.q - 1, 0, 1, std::nullopt}});
        CHECK(d.value == class_chiQ(a));
    }
    CHECK_THROWS(chiQ_class({0, 3}));
}

TEST_CASE("dimension zero example") {
    const auto inv = inv_of({2, 1}, "O(3),xO(1)");
    const auto e = simplify(bezout_expansion(inv));
    CHECK(e.to_text(Notation::Dim) == "3 [pt+]*");
    CHECK(expansion_class(e) == euler_product({{2, 1}, parse_bundles("O(3),xO(1)")}));
    CHECK(simplify(special_dim0(inv)).terms == e.terms);
}

TEST_CASE("codimension one, odd line bundle") {
    const Ambient a{3, 3};
    const auto e = simplify(bezout_expansion(inv_of(a, "O(3)")));
    CHECK(e.to_text(Notation::Codim) == "[Y_1(1,0)]* + 1 [S~_1(1,1); S~_2(2,1)]*");
    CHECK(expansion_class(e) == euler_line(a, LineBundleSpec::make(false, 3)));
}

TEST_CASE("codimension one, twisted even line bundle") {
    const Ambient a{3, 3};
    for (std::int64_t k = -3; k <= 3; ++k) {
        const auto L = LineBundleSpec::make(true, 2 * k);
        const auto sp = special_codim1(a, L);
        CHECK(expansion_class(sp) == euler_line(a, L));
        CHECK(count_of<InvariantChain>(sp) == 2);
    }
}

TEST_CASE("empty fixed sets leave a single free orbit") {
    const auto inv = inv_of({2, 2}, "O(3),O(2),xO(1)");
    REQUIRE(inv.m0 <= 0);
    REQUIRE(inv.m1 <= 0);
    const auto e = simplify(bezout_expansion(inv));
    REQUIRE(e.terms.size() == 1);
    CHECK(std::holds_alternative<FreeOrbit>(e.terms[0].term));
    CHECK(e.terms[0].coefficient() == std::pair<std::int64_t, std::int64_t>{inv.Delta / 2, 1});
}

TEST_CASE("expansion values") {
    CHECK(expansion_class(bezout_expansion(inv_of({3, 3}, "O(2)"))) == class_Q({3, 3}));
    CHECK(expansion_class(BezoutExpansion{{2, 2}, {}, std::nullopt}).is_zero());
}

TEST_CASE("dimension one middle cell") {
    const Ambient a{2, 4};
    const auto inv = inv_of(a, "O(4),O(4),xO(5),xO(5)");
    REQUIRE(inv.m == 2);
    const auto sp = special_dim1_table(inv);
    CHECK(simplify(sp).terms == simplify(bezout_expansion(inv)).terms);
    CHECK(expansion_class(sp) == euler_product({a, parse_bundles("O(4),O(4),xO(5),xO(5)")}));
}

TEST_CASE("dimension two, all fixed dimensions three") {
    const Ambient a{3, 4};
    const auto inv = inv_of(a, "xO(5),xO(4),xO(4),xO(4)");
    REQUIRE(std::tuple(inv.m, inv.m0, inv.m1, inv.ell) == std::tuple(3, 3, 3, 3));
    const auto e = simplify(special_dim2_examples(inv));
    std::int64_t free_coeff = 0;
    int unit_triples = 0;
    for (const auto& t : e.terms) {
        if (std::holds_alternative<FreeOrbit>(t.term)) free_coeff = t.coefficient().first;
        if (const auto* c = std::get_if<InvariantChain>(&t.term))
            if (c->i >= 1 && c->j >= 1 && t.coefficient() == std::pair<std::int64_t, std::int64_t>{1, 1}) ++unit_triples;
    }
    CHECK(free_coeff == (inv.Delta - inv.Delta0 - inv.Delta1 - 2) / 2);
    CHECK(unit_triples == 2);
    CHECK(expansion_class(e) == euler_product({a, parse_bundles("xO(5),xO(4),xO(4),xO(4)")}));
}

TEST_CASE("codimension data round trip") {
    const Ambient a{3, 3};
    const std::vector<GeometricTerm> terms{InvariantChain{2, 1, 1, 1, std::nullopt}, BinatePair{4, 2, 1, SingularPart::None},
                                           BinatePair{4, 2, 1, SingularPart::Zeta1}};
    for (const auto& t : terms) {
        CHECK(from_codim(to_codim(t, a), a) == t);
        CHECK(term_text(t, a, Notation::Dim) != term_text(t, a, Notation::Codim));
    }
}

TEST_CASE("integrality audit and JSON") {
    const auto inv = inv_of({3, 3}, "O(3),xO(3)");
    const auto e = bezout_expansion(inv);
    CHECK_NOTHROW(audit_integrality(e));
    BezoutExpansion bad{{3, 3}, {{1, InvariantChain{2, 2, 0, 0, std::nullopt}}}, std::nullopt};
    CHECK_THROWS_AS(audit_integrality(bad), NormalFormFailure);
    const auto j = to_json(simplify(e));
    REQUIRE(j.is_array());
    for (const auto& t : j) {
        CHECK(t.contains("coeff_num"));
        CHECK(t.contains("coeff_den"));
        CHECK(t["term"].contains("variant"));
    }
}

TEST_CASE("context is required") {
    CHECK_THROWS_AS(bezout_expansion(inv_of({1, 1}, "O(1),O(1)")), ContextViolation);
}
