#include "c2/laurent.hpp"

#include <sstream>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

PiBDegree LaurentMonomial::degree() const {
    // deg iota = (0,-1,-1), deg zeta = (0,0,-2), deg c = (2,2,2)
    const auto r = checked::mul(2, c);
    const auto f0 = checked::sub(r, iota);
    const auto f1 = checked::sub(f0, checked::mul(2, zeta));
    return {r, f0, f1};
}

bool laurent_exponents_for(const PiBDegree& d, LaurentMonomial& out) {
    if (d.total_rank % 2 != 0 || !d.parity_ok()) return false;
    out.c = d.total_rank / 2;
    out.iota = d.total_rank - d.fixed_rank_0;
    out.zeta = (d.fixed_rank_0 - d.fixed_rank_1) / 2;
    return true;
}

LaurentClass LaurentClass::monomial(LaurentMonomial m, std::int64_t coeff, std::int64_t c_bound) {
    LaurentClass r(c_bound);
    r.add_term(m, coeff);
    return r;
}

LaurentClass LaurentClass::in_degree(const PiBDegree& d, std::int64_t coeff, std::int64_t c_bound) {
    LaurentMonomial m;
    if (!laurent_exponents_for(d, m)) throw DegreeMismatch("no Laurent monomial in degree " + to_string(d));
    return monomial(m, coeff, c_bound);
}

void LaurentClass::add_term(const LaurentMonomial& m, std::int64_t coeff) {
    if (coeff == 0) return;
    if (m.c < 0) throw InvalidInput("negative c exponent in Laurent monomial");
    if (bound_ >= 0 && m.c >= bound_) return;
    auto [it, fresh] = terms_.try_emplace(m, coeff);
    if (!fresh) {
        it->second = checked::add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentClass& LaurentClass::operator+=(const LaurentClass& o) {
    for (const auto& [m, k] : o.terms_) add_term(m, k);
    return *this;
}

LaurentClass& LaurentClass::operator-=(const LaurentClass& o) {
    for (const auto& [m, k] : o.terms_) add_term(m, checked::sub(0, k));
    return *this;
}

LaurentClass LaurentClass::operator+(const LaurentClass& o) const {
    LaurentClass r = *this;
    r += o;
    return r;
}

LaurentClass LaurentClass::operator-(const LaurentClass& o) const {
    LaurentClass r = *this;
    r -= o;
    return r;
}

LaurentClass LaurentClass::operator*(const LaurentClass& o) const {
    std::int64_t b = bound_;
    if (b < 0 || (o.bound_ >= 0 && o.bound_ < b)) b = o.bound_;
    LaurentClass r(b);
    for (const auto& [m1, k1] : terms_)
        for (const auto& [m2, k2] : o.terms_)
            r.add_term({checked::add(m1.iota, m2.iota), checked::add(m1.zeta, m2.zeta), checked::add(m1.c, m2.c)},
                       checked::mul(k1, k2));
    return r;
}

LaurentClass LaurentClass::scaled(std::int64_t k) const {
    LaurentClass r(bound_);
    for (const auto& [m, c] : terms_) r.add_term(m, checked::mul(c, k));
    return r;
}

LaurentClass LaurentClass::with_bound(std::int64_t c_bound) const {
    LaurentClass r(c_bound);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

namespace {

void append_power(std::ostringstream& os, const char* name, std::int64_t e, bool latex, bool& first) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (e != 1) {
        if (latex && (e < 0 || e >= 10)) os << "^{" << e << '}';
        else os << '^' << e;
    }
}

std::string render(const std::map<LaurentMonomial, std::int64_t>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [m, k] : terms) {
        std::int64_t mag = k;
        if (lead) {
            if (k < 0) os << '-';
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        if (mag < 0) mag = -mag;
        lead = false;
        const bool unit = m.iota == 0 && m.zeta == 0 && m.c == 0;
        if (mag != 1 || unit) os << mag;
        if (unit) continue;
        if (mag != 1) os << ' ';
        bool first = true;
        append_power(os, latex ? "\\iota" : "iota", m.iota, latex, first);
        append_power(os, latex ? "\\zeta" : "zeta", m.zeta, latex, first);
        append_power(os, "c", m.c, latex, first);
    }
    return os.str();
}

}  // namespace

std::string LaurentClass::to_text() const { return render(terms_, false); }
std::string LaurentClass::to_latex() const { return render(terms_, true); }

}  // namespace c2
