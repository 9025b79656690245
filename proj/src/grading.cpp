#include "c2/grading.hpp"

#include <sstream>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

PiBDegree degree_add(const PiBDegree& a, const PiBDegree& b) {
    return {checked::add(a.total_rank, b.total_rank), checked::add(a.fixed_rank_0, b.fixed_rank_0),
            checked::add(a.fixed_rank_1, b.fixed_rank_1)};
}

PiBDegree degree_neg(const PiBDegree& a) {
    return {checked::sub(0, a.total_rank), checked::sub(0, a.fixed_rank_0), checked::sub(0, a.fixed_rank_1)};
}

PiBDegree degree_sub(const PiBDegree& a, const PiBDegree& b) { return degree_add(a, degree_neg(b)); }

PiBDegree degree_scale(std::int64_t k, const PiBDegree& a) {
    return {checked::mul(k, a.total_rank), checked::mul(k, a.fixed_rank_0), checked::mul(k, a.fixed_rank_1)};
}

ROC2Degree operator+(const ROC2Degree& a, const ROC2Degree& b) {
    return {checked::add(a.trivial_rank, b.trivial_rank), checked::add(a.sign_rank, b.sign_rank)};
}

const std::map<std::string, PiBDegree>& standard_degrees() {
    static const std::map<std::string, PiBDegree> table = [] {
        std::map<std::string, PiBDegree> t;
        const PiBDegree one{1, 1, 1};
        const PiBDegree sigma{1, 0, 0};
        const PiBDegree omega{2, 2, 0};
        const PiBDegree chi_omega{2, 0, 2};
        t["one"] = one;
        t["sigma"] = sigma;
        t["omega"] = omega;
        t["chi_omega"] = chi_omega;
        t["Omega0"] = chi_omega - 2 * one;
        t["Omega1"] = omega - 2 * one;
        t["zeta0"] = chi_omega - 2 * one;
        t["zeta1"] = omega - 2 * one;
        t["c_omega"] = omega;
        t["c_chi_omega"] = chi_omega;
        t["e"] = sigma;
        t["xi"] = 2 * sigma - 2 * one;
        return t;
    }();
    return table;
}

PiBDegree standard_degree(const std::string& name) {
    const auto& t = standard_degrees();
    auto it = t.find(name);
    if (it == t.end()) throw InvalidInput("unknown degree name '" + name + "'");
    return it->second;
}

bool is_roc2(const PiBDegree& d) { return d.fixed_rank_0 == d.fixed_rank_1; }

std::optional<ROC2Degree> to_roc2(const PiBDegree& d) {
    if (!is_roc2(d)) return std::nullopt;
    return ROC2Degree{d.fixed_rank_0, checked::sub(d.total_rank, d.fixed_rank_0)};
}

PiBDegree from_roc2(const ROC2Degree& d) {
    const auto a = d.trivial_rank;
    return {checked::add(a, d.sign_rank), a, a};
}

std::string to_string(const PiBDegree& d) {
    std::ostringstream os;
    os << '(' << d.total_rank << ',' << d.fixed_rank_0 << ',' << d.fixed_rank_1 << ')';
    return os.str();
}

std::string to_string(const ROC2Degree& d) {
    std::ostringstream os;
    os << d.trivial_rank;
    if (d.sign_rank >= 0) os << '+';
    os << d.sign_rank << "sigma";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PiBDegree& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const ROC2Degree& d) { return os << to_string(d); }

}  // namespace c2
