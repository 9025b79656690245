#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "c2/grading.hpp"

namespace c2 {

// iota^a zeta^b c^k
struct LaurentMonomial {
    std::int64_t iota = 0;
    std::int64_t zeta = 0;
    std::int64_t c = 0;

    auto operator<=>(const LaurentMonomial&) const = default;

    PiBDegree degree() const;
};

// Element of Z[iota^+-1] (no c bound, zeta and c exponents zero) or of
// Z[iota^+-1, zeta^+-1, c]/(c^bound). bound < 0 means untruncated.
class LaurentClass {
public:
    LaurentClass() = default;
    explicit LaurentClass(std::int64_t c_bound) : bound_(c_bound) {}
    static LaurentClass monomial(LaurentMonomial m, std::int64_t coeff = 1, std::int64_t c_bound = -1);
    // The unique monomial of the given degree, if one exists.
    static LaurentClass in_degree(const PiBDegree& d, std::int64_t coeff = 1, std::int64_t c_bound = -1);

    std::int64_t c_bound() const { return bound_; }
    const std::map<LaurentMonomial, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LaurentMonomial& m, std::int64_t coeff);
    LaurentClass& operator+=(const LaurentClass& o);
    LaurentClass& operator-=(const LaurentClass& o);
    LaurentClass operator+(const LaurentClass& o) const;
    LaurentClass operator-(const LaurentClass& o) const;
    LaurentClass operator*(const LaurentClass& o) const;
    LaurentClass scaled(std::int64_t k) const;
    LaurentClass with_bound(std::int64_t c_bound) const;

    bool operator==(const LaurentClass& o) const { return terms_ == o.terms_; }

    std::string to_text() const;
    std::string to_latex() const;

private:
    std::int64_t bound_ = -1;
    std::map<LaurentMonomial, std::int64_t> terms_;
};

// Exponents (a, b, k) of the unique monomial in degree (r, f0, f1); false when r is odd.
bool laurent_exponents_for(const PiBDegree& d, LaurentMonomial& out);

}  // namespace c2
