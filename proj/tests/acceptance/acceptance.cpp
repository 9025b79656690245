// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "c2/verify.hpp"

using namespace c2;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Timed {
    VerifyReport report;
    double seconds = 0;
};

Timed run_suites(std::vector<std::string> suites) {
    SweepConfig cfg;
    cfg.suites = std::move(suites);
    const auto t0 = std::chrono::steady_clock::now();
    Timed t{run_verify(cfg), 0};
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

std::map<std::string, std::int64_t> passes_by_identity(const VerifyReport& r) {
    std::map<std::string, std::int64_t> out;
    for (const auto& rec : r.records)
        if (rec.status == Status::Pass) out[rec.identity] += rec.cases;
    return out;
}

// No failures, and every listed identity passed at least min_cases times.
Outcome require(const Timed& t, const std::vector<std::pair<std::string, std::int64_t>>& needed, double max_seconds) {
    Outcome o;
    std::ostringstream d;
    d << t.report.passed << " passed, " << t.report.failed << " failed, " << t.report.skipped << " skipped, "
      << t.seconds << " s";
    if (t.report.failed != 0) {
        o.ok = false;
        for (const auto& rec : t.report.records)
            if (rec.status == Status::Fail) {
                d << "; first failure " << rec.suite << '/' << rec.identity << " [" << rec.params << "]";
                break;
            }
    }
    const auto got = passes_by_identity(t.report);
    for (const auto& [id, n] : needed) {
        const auto it = got.find(id);
        const std::int64_t have = it == got.end() ? 0 : it->second;
        if (have < n) {
            o.ok = false;
            d << "; " << id << " passed " << have << " < " << n;
        }
    }
    if (t.seconds > max_seconds) {
        o.ok = false;
        d << "; over the " << max_seconds << " s budget";
    }
    o.detail = d.str();
    return o;
}

std::vector<std::pair<std::string, std::int64_t>> at_least_one(std::initializer_list<const char*> ids) {
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (const char* id : ids) out.emplace_back(id, 1);
    return out;
}

Outcome perturbed_harness() {
    const std::string cmd = std::string("\"") + C2_PERTURBED_CLI_PATH + "\" verify --suite lemmas --format json 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    if (f == nullptr) return {false, "could not start the perturbed verifier"};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), f) != nullptr) out += buf.data();
    const int status = pclose(f);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    Outcome o;
    try {
        const auto rep = VerifyReport::from_json(json::parse(out));
        bool forms = true;
        for (const auto& r : rep.records)
            if (r.status == Status::Fail) forms = forms && !r.lhs.empty() && !r.rhs.empty();
        o.ok = code == 1 && rep.failed >= 1 && forms;
        o.detail = "exit " + std::to_string(code) + ", " + std::to_string(rep.failed) + " identities failed" +
                   (forms ? ", each with both normal forms" : ", some failures lack normal forms");
    } catch (const std::exception& e) {
        o = {false, "exit " + std::to_string(code) + ", unreadable report: " + e.what()};
    }
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, Outcome>> results;

    {
        const auto t = run_suites({"point_table"});
        results.emplace_back("point ring group structure for |a|,|b| <= 8", require(t, {{"group_structure", 17 * 17}}, 1.0));
    }
    {
        const auto t = run_suites({"lemmas"});
        results.emplace_back("lemma suite on p,q <= 5",
                             require(t,
                                     at_least_one({"tensor_relation", "Q_powers", "Q_powers_second_form", "Q_conversion_i",
                                                   "Q_conversion_ii", "Q_conversion_iii", "Q_conversion_iv", "xi_Q",
                                                   "simplification_zeta0", "simplification_zeta1", "chiQ_powers",
                                                   "Q_chiQ_powers"}),
                                     30.0));
    }
    {
        const auto t = run_suites({"blocks"});
        results.emplace_back("base-case line bundles and type blocks",
                             require(t,
                                     at_least_one({"base_case_i", "base_case_ii", "base_case_iii", "base_case_iv",
                                                   "type_block_I", "type_block_II", "type_block_III", "type_block_IV",
                                                   "type_block_I_library", "type_block_IV_binomial_form", "types_I_and_III"}),
                                     600.0));
    }
    {
        const auto t = run_suites({"closed_forms"});
        results.emplace_back("closed forms equal the product on the p+q <= 7 grid",
                             require(t, at_least_one({"closed_form_vs_product", "type_blocks_vs_product"}), 600.0));
    }
    {
        const auto t = run_suites({"bezout", "dictionary"});
        auto needed = at_least_one({"bezout_vs_product", "bezout_simplified_vs_product", "codim_notation_round_trip",
                                    "codim_notation_renders", "dim0_corollary", "dim0_corollary_class", "dim0_point_counts",
                                    "dim0_example", "codim1_I_class", "codim1_II_class", "codim1_III_class",
                                    "codim1_IV_class", "codim1_I", "codim1_II", "codim1_III", "codim1_IV",
                                    "dim2_correction_term", "Q_is_binate", "Q_powers_binate", "zeta0_Q_powers",
                                    "zeta1_Q_powers", "chiQ_pairs", "zeta0_powers", "zeta1_powers"});
        needed.emplace_back("dim1_cell", 9);
        needed.emplace_back("dim1_cell_class", 9);
        needed.emplace_back("dim2_scenario", 2);
        needed.emplace_back("dim2_scenario_class", 2);
        results.emplace_back("Bezout expansion in both notations with all corollaries", require(t, needed, 600.0));
    }
    {
        const auto t = run_suites({"freeness"});
        results.emplace_back("freeness of every coset basis for p+q <= 7",
                             require(t, at_least_one({"basis_size_and_closed_form", "basis_products_reconstruct"}), 600.0));
    }
    {
        const auto t = run_suites({"ring"});
        SweepConfig cfg;
        std::int64_t ambients = 0;
        for (std::int64_t s = 1; s <= cfg.dim_max; ++s)
            for (std::int64_t p = 0; p <= std::min(cfg.p_max, s); ++p) ambients += s - p <= cfg.q_max ? 1 : 0;
        const std::int64_t pairs = cfg.random_pairs * ambients;
        results.emplace_back("restriction, fixed points and Frobenius on seeded random pairs",
                             require(t,
                                     {{"restriction_multiplicative", pairs},
                                      {"fixed_points_multiplicative", pairs},
                                      {"frobenius", pairs}},
                                     600.0));
    }
    results.emplace_back("a perturbed rewrite rule makes the verifier fail", perturbed_harness());

    bool all = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, o] = results[i];
        all = all && o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail
                  << ")\n";
    }
    std::cout << (all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES PRESENT") << '\n';
    return all ? 0 : 1;
}
