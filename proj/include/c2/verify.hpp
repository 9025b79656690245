#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "c2/render_json.hpp"

namespace c2 {

struct SweepConfig {
    std::int64_t p_max = 7;
    std::int64_t q_max = 7;
    std::int64_t dim_max = 7;  // bound on p + q
    std::int64_t max_bundles_per_family = 3;
    std::int64_t max_bundles = 6;
    std::vector<std::int64_t> odd_degrees{1, 3, 5};
    std::vector<std::int64_t> even_degrees{2, 4};
    bool include_negative_degrees = false;
    std::uint64_t seed = 20240611;
    std::int64_t threads = 0;  // 0: hardware concurrency
    std::int64_t random_pairs = 200;
    std::int64_t point_range = 8;
    std::int64_t lemma_p_max = 5;
    std::int64_t lemma_q_max = 5;
    // Empty runs every suite.
    std::vector<std::string> suites;

    void validate() const;
    json to_json() const;
    // Missing keys keep their defaults; unknown keys are rejected.
    static SweepConfig from_json(const json& j);
};

enum class Status : std::uint8_t { Pass, Fail, Skipped };
std::string to_string(Status s);

struct VerifyRecord {
    std::string suite;
    std::string identity;
    std::string params;
    Status status = Status::Pass;
    std::int64_t cases = 1;  // passes are aggregated per work item
    std::string reason;  // skipped only
    std::string lhs;     // normal forms, filled on failure
    std::string rhs;

    bool operator==(const VerifyRecord&) const = default;
};

struct VerifyReport {
    SweepConfig config;
    std::vector<VerifyRecord> records;  // failures, then skips, then passes; canonical order within each
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t skipped = 0;
    double wall_seconds = 0;

    bool ok() const { return failed == 0; }
    json to_json() const;
    static VerifyReport from_json(const json& j);
    std::string summary_text() const;
};

// Suite names in run order.
const std::vector<std::string>& verify_suite_names();

VerifyReport run_verify(const SweepConfig& config);

}  // namespace c2
