#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "c2/grading.hpp"
#include "c2/laurent.hpp"

namespace c2 {

enum class PointKind : std::uint8_t { One, G, E, Xi, EXi, EInvKappa, TauIotaNeg };

// Canonical basis symbol of the supported subring of H = H^{RO(C2)}(pt; A).
//   One, G          degree 0
//   E(a)            e^a,            a >= 1
//   Xi(a)           xi^a,           a >= 1
//   EXi(a, b)       e^a xi^b,       a, b >= 1, coefficient mod 2
//   EInvKappa(a)    e^-a kappa,     a >= 1
//   TauIotaNeg(a)   tau(iota^-2a),  a >= 1
struct PointSym {
    PointKind kind = PointKind::One;
    std::int32_t a = 0;
    std::int32_t b = 0;

    auto operator<=>(const PointSym&) const = default;

    static PointSym one() { return {PointKind::One, 0, 0}; }
    static PointSym g() { return {PointKind::G, 0, 0}; }
    static PointSym e(std::int64_t m);
    static PointSym xi(std::int64_t n);
    static PointSym exi(std::int64_t m, std::int64_t n);
    static PointSym e_inv_kappa(std::int64_t m);
    static PointSym tau_iota_neg(std::int64_t k);

    ROC2Degree degree() const;
    bool is_torsion() const { return kind == PointKind::EXi; }
};

class PointClass {
public:
    using Term = std::pair<PointSym, std::int64_t>;

    PointClass() = default;
    PointClass(std::int64_t n);  // NOLINT(google-explicit-constructor): integers embed as n*1
    PointClass(PointSym s, std::int64_t coeff = 1);

    static PointClass one() { return PointClass(1); }
    static PointClass g() { return PointClass(PointSym::g()); }
    static PointClass kappa();  // 2 - g
    static PointClass e(std::int64_t m);  // e^0 = 1
    static PointClass xi(std::int64_t n);  // xi^0 = 1
    static PointClass e_inv_kappa(std::int64_t m);  // m = 0 gives kappa
    static PointClass from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(const PointSym& s) const;

    PointClass& operator+=(const PointClass& o);
    PointClass& operator-=(const PointClass& o);
    PointClass operator+(const PointClass& o) const;
    PointClass operator-(const PointClass& o) const;
    PointClass operator-() const;
    PointClass scaled(std::int64_t k) const;

    bool operator==(const PointClass& o) const { return terms_ == o.terms_; }
    bool operator<(const PointClass& o) const { return terms_ < o.terms_; }

    // Degrees carried by the support, in increasing order.
    std::vector<ROC2Degree> degrees() const;

    std::string to_text() const;
    std::string to_latex() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

PointClass point_mul(const PointClass& a, const PointClass& b);
inline PointClass operator*(const PointClass& a, const PointClass& b) { return point_mul(a, b); }
PointClass point_pow(const PointClass& a, std::int64_t k);

// Nonequivariant restriction, landing in Z[iota^+-1].
LaurentClass point_rho(const PointClass& a);
// Transfer; defined on even powers of iota only.
PointClass point_tau(const LaurentClass& x);
// Fixed-point map; each symbol contributes in degree 0 only, so the result is one integer.
std::int64_t point_fixed(const PointClass& a);

// Additive structure of the group in degree a + b sigma inside the supported subring.
struct GroupStructure {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // orders of cyclic torsion summands
    bool burnside = false;  // the ring A(C2) with g^2 = 2g
    std::vector<PointSym> generators;
    std::string describe() const;
};
std::vector<PointSym> point_symbols_in_degree(const ROC2Degree& d);
GroupStructure point_group_structure(const ROC2Degree& d);

}  // namespace c2
