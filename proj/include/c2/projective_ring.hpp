#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "c2/grading.hpp"
#include "c2/laurent.hpp"
#include "c2/point_ring.hpp"

namespace c2 {

struct Ambient {
    std::int64_t p = 0;
    std::int64_t q = 0;

    auto operator<=>(const Ambient&) const = default;
    std::int64_t dim() const { return p + q; }
    void validate() const;
};

// zeta0^z0 zeta1^z1 c_w^cw c_xw^ccw; negative z0 only alongside cw >= p, negative z1 only alongside ccw >= q.
struct ProjMonomial {
    std::int64_t z0 = 0;
    std::int64_t z1 = 0;
    std::int64_t cw = 0;
    std::int64_t ccw = 0;

    bool operator==(const ProjMonomial&) const = default;
    // Ordered by c-degree first so renderings read bottom-up.
    bool operator<(const ProjMonomial& o) const;

    PiBDegree degree() const;
    std::int64_t coset() const { return -z0 + z1 + cw - ccw; }
    std::int64_t c_degree() const { return cw + ccw; }
    ProjMonomial operator*(const ProjMonomial& o) const { return {z0 + o.z0, z1 + o.z1, cw + o.cw, ccw + o.ccw}; }

    std::string to_text() const;
    std::string to_latex() const;
};

class RingContext;

// An H-linear combination of normal-form monomials. Every stored monomial is an element of the
// recursion basis of its coset, so the term map is the coordinate vector over that basis.
class ProjClass {
public:
    using TermMap = std::map<ProjMonomial, PointClass>;

    explicit ProjClass(Ambient amb);

    static ProjClass constant(Ambient amb, const PointClass& c);
    static ProjClass unit(Ambient amb) { return constant(amb, PointClass::one()); }
    // Reduces zeta0^z0 zeta1^z1 c_w^cw c_xw^ccw times coeff to normal form.
    static ProjClass monomial(Ambient amb, const ProjMonomial& m, const PointClass& coeff = PointClass::one());
    static ProjClass zeta0(Ambient amb) { return monomial(amb, {1, 0, 0, 0}); }
    static ProjClass zeta1(Ambient amb) { return monomial(amb, {0, 1, 0, 0}); }
    static ProjClass c_omega(Ambient amb) { return monomial(amb, {0, 0, 1, 0}); }
    static ProjClass c_chi_omega(Ambient amb) { return monomial(amb, {0, 0, 0, 1}); }
    // Divided class zeta0^-k c_w^p (resp. zeta1^-k c_xw^q).
    static ProjClass divided0(Ambient amb, std::int64_t k);
    static ProjClass divided1(Ambient amb, std::int64_t k);

    const Ambient& ambient() const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const RingContext& context() const { return *ctx_; }

    ProjClass& operator+=(const ProjClass& o);
    ProjClass& operator-=(const ProjClass& o);
    ProjClass operator+(const ProjClass& o) const;
    ProjClass operator-(const ProjClass& o) const;
    ProjClass operator-() const { return scaled(-1); }
    ProjClass scaled(std::int64_t k) const;
    ProjClass times(const PointClass& c) const;
    // Exact division of every coefficient; throws if some coefficient is not divisible.
    ProjClass divided_by(std::int64_t d) const;

    bool operator==(const ProjClass& o) const;

    // Total degrees of the terms (coefficient degree plus monomial degree).
    std::vector<PiBDegree> degrees() const;

    std::string to_text() const;
    std::string to_latex() const;

    // Internal: add an already-normal term.
    void add_normal(const ProjMonomial& m, const PointClass& c);

private:
    std::shared_ptr<const RingContext> ctx_;
    TermMap terms_;
};

ProjClass proj_mul(const ProjClass& a, const ProjClass& b);
inline ProjClass operator*(const ProjClass& a, const ProjClass& b) { return proj_mul(a, b); }
ProjClass proj_pow(const ProjClass& a, std::int64_t k);

LaurentClass proj_rho(const ProjClass& a);

struct FixedPair {
    std::vector<std::int64_t> on_b0;  // coefficients of c^0..c^(p-1)
    std::vector<std::int64_t> on_b1;  // coefficients of c^0..c^(q-1)

    bool operator==(const FixedPair&) const = default;
    FixedPair operator*(const FixedPair& o) const;
    FixedPair operator+(const FixedPair& o) const;
    std::string to_text() const;
};

FixedPair proj_fixed(const ProjClass& a);

// Transfer of a Laurent class, expressed on the basis via Frobenius.
ProjClass proj_tau(Ambient amb, const LaurentClass& x);
// Same, after checking that every monomial of x has the given degree.
ProjClass proj_tau(Ambient amb, const LaurentClass& x, const PiBDegree& target);
ProjClass proj_tau_monomial(Ambient amb, std::int64_t iota, std::int64_t zeta, std::int64_t c, std::int64_t coeff = 1);

// The unique class y with zeta0^r y = a, for a infinitely divisible by zeta0 (and symmetrically).
ProjClass divide_by_zeta0(const ProjClass& a, std::int64_t r);
ProjClass divide_by_zeta1(const ProjClass& a, std::int64_t r);

struct BasisSet {
    std::int64_t m = 0;
    std::vector<ProjMonomial> elements;  // index = c-degree
};

// Unrolls the recursion F_{p,q}(m) literally.
BasisSet basis_enumerate(Ambient amb, std::int64_t m);
// Closed description of the same basis: the c_w exponent is the balanced split clamped to the box.
ProjMonomial basis_element_closed(Ambient amb, std::int64_t m, std::int64_t k);

// Coordinates of a class homogeneous in one coset, keyed by basis element.
std::map<ProjMonomial, PointClass> reduce_to_basis(const ProjClass& a);
ProjClass reconstruct(Ambient amb, const std::map<ProjMonomial, PointClass>& coords);

// Euler classes of O(2) and chi O(2).
ProjClass class_Q(Ambient amb);
ProjClass class_chiQ(Ambient amb);

// Per-ambient caches: the basis of each coset and the normal form of each raw monomial.
class RingContext {
public:
    using Reduced = std::vector<std::pair<ProjMonomial, PointClass>>;

    explicit RingContext(Ambient amb);
    ~RingContext();
    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    const Ambient& ambient() const { return amb_; }
    const std::vector<ProjMonomial>& basis(std::int64_t m) const;
    std::shared_ptr<const Reduced> reduce(const ProjMonomial& raw) const;
    std::size_t cache_size() const;

private:
    struct Impl;
    Ambient amb_;
    std::unique_ptr<Impl> impl_;
    std::shared_ptr<const Reduced> compute(const ProjMonomial& raw) const;
};

std::shared_ptr<const RingContext> ring_context(Ambient amb);

}  // namespace c2
