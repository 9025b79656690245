#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace c2 {

// a + b sigma
struct ROC2Degree {
    std::int64_t trivial_rank = 0;
    std::int64_t sign_rank = 0;

    auto operator<=>(const ROC2Degree&) const = default;
};

// Rank triple (|alpha|, |alpha_0^C2|, |alpha_1^C2|).
struct PiBDegree {
    std::int64_t total_rank = 0;
    std::int64_t fixed_rank_0 = 0;
    std::int64_t fixed_rank_1 = 0;

    auto operator<=>(const PiBDegree&) const = default;

    // Index m of the coset m*omega + RO(C2) containing this degree.
    std::int64_t coset() const { return (fixed_rank_0 - fixed_rank_1) / 2; }
    bool parity_ok() const { return ((fixed_rank_0 - fixed_rank_1) % 2) == 0; }
};

PiBDegree degree_add(const PiBDegree& a, const PiBDegree& b);
PiBDegree degree_neg(const PiBDegree& a);
PiBDegree degree_sub(const PiBDegree& a, const PiBDegree& b);
PiBDegree degree_scale(std::int64_t k, const PiBDegree& a);

inline PiBDegree operator+(const PiBDegree& a, const PiBDegree& b) { return degree_add(a, b); }
inline PiBDegree operator-(const PiBDegree& a, const PiBDegree& b) { return degree_sub(a, b); }
inline PiBDegree operator-(const PiBDegree& a) { return degree_neg(a); }
inline PiBDegree operator*(std::int64_t k, const PiBDegree& a) { return degree_scale(k, a); }

ROC2Degree operator+(const ROC2Degree& a, const ROC2Degree& b);

// Names: one, sigma, omega, chi_omega, Omega0, Omega1, zeta0, zeta1, c_omega, c_chi_omega, e, xi.
const std::map<std::string, PiBDegree>& standard_degrees();
PiBDegree standard_degree(const std::string& name);

bool is_roc2(const PiBDegree& d);
std::optional<ROC2Degree> to_roc2(const PiBDegree& d);
PiBDegree from_roc2(const ROC2Degree& d);

std::string to_string(const PiBDegree& d);
std::string to_string(const ROC2Degree& d);
std::ostream& operator<<(std::ostream& os, const PiBDegree& d);
std::ostream& operator<<(std::ostream& os, const ROC2Degree& d);

}  // namespace c2
