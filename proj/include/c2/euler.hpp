#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "c2/laurent.hpp"
#include "c2/projective_ring.hpp"

namespace c2 {

// I: O(odd), II: O(even), III: xO(odd), IV: xO(even).
enum class Family : std::uint8_t { I, II, III, IV };

std::string to_string(Family f);

struct LineBundleSpec {
    Family family = Family::I;
    std::int64_t degree = 1;

    auto operator<=>(const LineBundleSpec&) const = default;

    // Family inferred from the twist and the parity of d.
    static LineBundleSpec make(bool twisted, std::int64_t d);
    bool twisted() const { return family == Family::III || family == Family::IV; }
    void validate() const;
    std::string to_text() const;  // "O(3)", "xO(2)"
};

// Comma-separated "O(<int>)" / "xO(<int>)" tokens; whitespace between tokens is ignored.
std::vector<LineBundleSpec> parse_bundles(const std::string& text);
std::string bundles_to_text(const std::vector<LineBundleSpec>& bundles);

struct BundleSum {
    Ambient ambient;
    std::vector<LineBundleSpec> bundles;

    // Sorted by family, then degree.
    BundleSum canonical() const;
};

struct BundleInvariants {
    Ambient ambient;
    std::int64_t n = 0;
    std::int64_t n_I = 0, n_II = 0, n_III = 0, n_IV = 0;
    std::int64_t d_I = 1, d_II = 1, d_III = 1, d_IV = 1;
    std::int64_t n0 = 0, n1 = 0;
    std::int64_t Delta = 1, Delta0 = 1, Delta1 = 1;
    std::int64_t m = 0, m0 = 0, m1 = 0;
    std::int64_t ell = 0;
    std::int64_t k0 = 0, k1 = 0;
    std::int64_t eps = 0;
    std::int64_t DeltaMin = 0, DeltaMax = 0;

    // One entry per violated inequality, e.g. "n < p + q".
    std::vector<std::string> context_warnings;
    bool context_ok() const { return context_warnings.empty(); }

    // The tuple the closed forms depend on.
    auto key() const { return std::tuple(ambient.p, ambient.q, n, n0, n1, Delta, Delta0, Delta1); }
    std::string to_text() const;
};

BundleInvariants bundle_invariants(const BundleSum& sum);

ProjClass euler_line(Ambient amb, const LineBundleSpec& L);
ProjClass euler_product(const BundleSum& sum);
ProjClass euler_type_block(Ambient amb, Family family, std::int64_t count, std::int64_t degree_product);

// A term of a closed form: (num / 2^den_log2) times either
//   xi^xi zeta0^z0 zeta1^z1 c_w^cw c_xw^ccw Q^q_pow   (negative z0, z1 divide), or
//   tau(iota^a zeta^b c^k).
struct ClosedTerm {
    enum class Kind : std::uint8_t { Product, Transfer };
    Kind kind = Kind::Product;
    std::int64_t num = 0;
    std::int64_t den_log2 = 0;
    std::int64_t xi = 0, z0 = 0, z1 = 0, cw = 0, ccw = 0, q_pow = 0;
    LaurentMonomial tau;

    std::string factor_text() const;
    std::string factor_latex() const;
};

struct ClosedForm {
    std::string branch;  // "ell<=0", "ell<=0,m0<=0", "ell<=0,m1<=0", "ell<=0,m0,m1<=0", "ell>0"
    std::vector<ClosedTerm> terms;

    std::string to_text() const;
    std::string to_latex() const;
};

// Requires the context; throws ContextViolation naming the first violated inequality.
ClosedForm euler_closed_form_expr(const BundleInvariants& inv);
ProjClass evaluate(const ClosedForm& form, Ambient amb);
ProjClass euler_closed_form(const BundleInvariants& inv);

// Number of ones in the binary expansion, and the parity of a binomial coefficient.
std::int64_t binary_digit_sum(std::int64_t k);
bool binomial_is_odd(std::int64_t n, std::int64_t j);

}  // namespace c2
