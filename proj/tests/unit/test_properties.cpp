#include <doctest.h>

#include <algorithm>
#include <random>

#include "c2/euler.hpp"
#include "c2/verify.hpp"

using namespace c2;

TEST_CASE("euler product ignores bundle order") {
    std::mt19937_64 rng(3);
    const Ambient a{3, 3};
    const std::vector<std::string> pool{"O(1)", "O(3)", "O(2)", "O(-2)", "xO(1)", "xO(3)", "xO(2)", "xO(4)"};
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<LineBundleSpec> bundles;
        for (int i = 0; i < 4; ++i) bundles.push_back(parse_bundles(pool[rng() % pool.size()]).front());
        const auto base = euler_product({a, bundles});
        std::shuffle(bundles.begin(), bundles.end(), rng);
        CHECK(euler_product({a, bundles}) == base);
        CHECK(euler_product(BundleSum{a, bundles}.canonical()) == base);
    }
}

TEST_CASE("closed form depends only on the invariant tuple") {
    const Ambient a{3, 3};
    // Same (n, n0, n1, Delta, Delta0, Delta1) from different families and degrees.
    const auto i1 = bundle_invariants({a, parse_bundles("O(3),O(5)")});
    const auto i2 = bundle_invariants({a, parse_bundles("O(5),O(3)")});
    const auto i3 = bundle_invariants({a, parse_bundles("O(1),O(15)")});
    CHECK(i1.key() == i2.key());
    CHECK(i1.key() == i3.key());
    CHECK(euler_closed_form(i1) == euler_closed_form(i3));
    CHECK(euler_product({a, parse_bundles("O(3),O(5)")}) == euler_product({a, parse_bundles("O(1),O(15)")}));
}

TEST_CASE("sweep report is deterministic and round-trips") {
    SweepConfig cfg;
    cfg.p_max = 2;
    cfg.q_max = 2;
    cfg.dim_max = 3;
    cfg.lemma_p_max = 1;
    cfg.lemma_q_max = 1;
    cfg.max_bundles = 3;
    cfg.random_pairs = 20;
    cfg.point_range = 3;
    cfg.threads = 1;
    const auto r1 = run_verify(cfg);
    cfg.threads = 3;
    const auto r2 = run_verify(cfg);
    CHECK(r1.ok());
    CHECK(r1.records == r2.records);
    CHECK(r1.passed == r2.passed);
    CHECK(r1.skipped == r2.skipped);

    const auto back = VerifyReport::from_json(r1.to_json());
    CHECK(back.records == r1.records);
    CHECK(back.passed == r1.passed);
    CHECK(back.failed == r1.failed);
    CHECK(back.skipped == r1.skipped);
    CHECK(back.config.to_json() == r1.config.to_json());

    // Skipped records carry a reason.
    for (const auto& r : r1.records)
        if (r.status == Status::Skipped) CHECK_FALSE(r.reason.empty());
}

TEST_CASE("sweep config validation") {
    CHECK_NOTHROW(SweepConfig{}.validate());
    SweepConfig odd;
    odd.odd_degrees = {1, 2};
    CHECK_THROWS(odd.validate());
    SweepConfig even;
    even.even_degrees = {3};
    CHECK_THROWS(even.validate());
    SweepConfig neg;
    neg.p_max = -1;
    CHECK_THROWS(neg.validate());
    SweepConfig bad_suite;
    bad_suite.suites = {"nope"};
    CHECK_THROWS(bad_suite.validate());

    CHECK_THROWS(SweepConfig::from_json(json{{"p_maximum", 3}}));
    const auto c = SweepConfig::from_json(json{{"p_max", 3}, {"include_negative_degrees", true}});
    CHECK(c.p_max == 3);
    CHECK(c.include_negative_degrees);
    CHECK(c.q_max == SweepConfig{}.q_max);
    CHECK(SweepConfig::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("suite order") {
    CHECK(verify_suite_names() == std::vector<std::string>{"point_table", "ring", "freeness", "lemmas", "blocks",
                                                           "closed_forms", "dictionary", "bezout"});
}
