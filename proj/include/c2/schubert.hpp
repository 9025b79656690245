#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "c2/euler.hpp"
#include "c2/grading.hpp"
#include "c2/projective_ring.hpp"

namespace c2 {

// C2 x (a nonequivariant Schubert variety) of affine dimension m. The class lives in an explicit
// degree because a free orbit can be read in any grading with the right underlying dimension.
struct FreeOrbit {
    std::int64_t affine_dim = 1;
    PiBDegree target;

    bool operator==(const FreeOrbit&) const = default;
};

// [X^{p',q'}; X^{p'-j,q'} U X^{p',q'-i}; X^{p'-j,q'-i}]*, with class zeta0^i zeta1^j c_w^(p-p') c_xw^(q-q').
// With i = j = 0 this is the plain variety X^{p',q'}. A target degree (allowed only when i = j = 0)
// reinterprets the dimension: the zeta exponents are then forced by the degree and may be negative.
struct InvariantChain {
    std::int64_t p_prime = 0;
    std::int64_t q_prime = 0;
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::optional<PiBDegree> target;

    bool operator==(const InvariantChain&) const = default;
};

enum class SingularPart : std::uint8_t { None, Zeta0, Zeta1 };

// The desingularized binate variety S~^(i)_{p_i,q_i}, optionally carrying a singular part:
//   Zeta0: [S~^(i)_{p_i,q_i}; S~^(i-1)_{p_i,q_i-1}]*, class zeta0 times the binate class
//   Zeta1: [S~^(i)_{p_i,q_i}; S~^(i-1)_{p_i-1,q_i}]*, class zeta1 times the binate class
// p_i and q_i keep their actual (possibly negative) values; the variety uses max(.,0) but the
// grading does not.
struct BinatePair {
    std::int64_t i = 0;
    std::int64_t p_i = 0;
    std::int64_t q_i = 0;
    SingularPart singular = SingularPart::None;

    bool operator==(const BinatePair&) const = default;
};

using GeometricTerm = std::variant<FreeOrbit, InvariantChain, BinatePair>;

void validate(const GeometricTerm& t, Ambient amb);
PiBDegree degree_of(const GeometricTerm& t, Ambient amb);
ProjClass class_of(const GeometricTerm& t, Ambient amb);

// The second expression for a binate class: c_w^(p-(i-q_i)) c_xw^(q-(i-p_i)) (tau(c^k) + e^-2k kappa c_w^k c_xw^k).
ProjClass binate_class_product_form(Ambient amb, std::int64_t i, std::int64_t p_i, std::int64_t q_i);

// Codimension data: Y_l(l+, l-) for invariant chains, S~_l(l+, l-) for binates, Fr^l for free orbits.
struct CodimTerm {
    enum class Kind : std::uint8_t { Free, Invariant, Binate };
    Kind kind = Kind::Free;
    std::int64_t lambda = 0;
    std::int64_t lambda_plus = 0;
    std::int64_t lambda_minus = 0;
    // Invariant only: the chain indices; Binate only: the singular part.
    std::int64_t i = 0;
    std::int64_t j = 0;
    SingularPart singular = SingularPart::None;
    std::optional<PiBDegree> target;

    bool operator==(const CodimTerm&) const = default;
};

CodimTerm to_codim(const GeometricTerm& t, Ambient amb);
GeometricTerm from_codim(const CodimTerm& c, Ambient amb);
// Binate class computed directly from codimension data (l = p+q-i, l+ = p-p_i, l- = q-q_i).
ProjClass binate_class_codim(Ambient amb, std::int64_t lambda, std::int64_t lambda_plus, std::int64_t lambda_minus);

enum class Notation : std::uint8_t { Dim, Codim };

std::string term_text(const GeometricTerm& t, Ambient amb, Notation n);
std::string term_latex(const GeometricTerm& t, Ambient amb, Notation n);

struct BezoutTerm {
    std::int64_t half_coeff = 0;  // the coefficient is half_coeff / 2
    GeometricTerm term;

    bool operator==(const BezoutTerm&) const = default;
    // Reduced fraction: (num, den) with den in {1, 2}.
    std::pair<std::int64_t, std::int64_t> coefficient() const;
};

struct BezoutExpansion {
    Ambient ambient;
    std::vector<BezoutTerm> terms;
    std::optional<BundleInvariants> invariants_used;

    std::string to_text(Notation n) const;
    std::string to_latex(Notation n) const;
};

// The theorem's expansion, term by term as stated (zero coefficients included).
BezoutExpansion bezout_expansion(const BundleInvariants& inv);
// Drops zero terms, turns a half-weighted binate with k = 0 into its invariant variety, and collapses
// invariant chains whose singular levels are all empty.
BezoutExpansion simplify(const BezoutExpansion& e);
ProjClass expansion_class(const BezoutExpansion& e);
// Throws NormalFormFailure when an odd half-coefficient sits on a class that is not divisible by 2.
void audit_integrality(const BezoutExpansion& e);

// chi Q as the sum of the two invariant pairs, with the identity checked on the way.
struct ChiQDecomposition {
    std::vector<GeometricTerm> terms;
    ProjClass value;
};
ChiQDecomposition chiQ_class(Ambient amb);

// The corollaries, built from their own statements rather than from bezout_expansion.
enum class SpecialCase : std::uint8_t { Codim1, Dim0, Dim1Table, Dim2Examples };
std::string to_string(SpecialCase k);
BezoutExpansion special_codim1(Ambient amb, const LineBundleSpec& L);
BezoutExpansion special_dim0(const BundleInvariants& inv);
BezoutExpansion special_dim1_table(const BundleInvariants& inv);
BezoutExpansion special_dim2_examples(const BundleInvariants& inv);
BezoutExpansion special_case(SpecialCase kind, const BundleSum& sum);

}  // namespace c2
