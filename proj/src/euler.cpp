#include "c2/euler.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

std::string to_string(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    return "?";
}

namespace {

bool odd(std::int64_t d) { return d % 2 != 0; }

}  // namespace

LineBundleSpec LineBundleSpec::make(bool twisted, std::int64_t d) {
    if (twisted) return {odd(d) ? Family::III : Family::IV, d};
    return {odd(d) ? Family::I : Family::II, d};
}

void LineBundleSpec::validate() const {
    const bool want_odd = family == Family::I || family == Family::III;
    if (want_odd != odd(degree))
        throw InvalidInput("family " + to_string(family) + " does not allow degree " + std::to_string(degree));
}

std::string LineBundleSpec::to_text() const {
    return std::string(twisted() ? "xO(" : "O(") + std::to_string(degree) + ")";
}

std::vector<LineBundleSpec> parse_bundles(const std::string& text) {
    std::vector<LineBundleSpec> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char ch) {
        if (i >= text.size() || text[i] != ch)
            throw ParseError(std::string("expected '") + ch + "'", i);
        ++i;
    };
    skip_ws();
    if (i == text.size()) return out;
    while (true) {
        skip_ws();
        bool twisted = false;
        if (i < text.size() && text[i] == 'x') {
            twisted = true;
            ++i;
        }
        expect('O');
        expect('(');
        const std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        const std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError("expected an integer degree", i);
        std::int64_t d = 0;
        try {
            d = std::stoll(text.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw ParseError("degree out of range", start);
        }
        expect(')');
        out.push_back(LineBundleSpec::make(twisted, d));
        skip_ws();
        if (i == text.size()) break;
        expect(',');
    }
    return out;
}

std::string bundles_to_text(const std::vector<LineBundleSpec>& bundles) {
    std::string s;
    for (const auto& b : bundles) {
        if (!s.empty()) s += ',';
        s += b.to_text();
    }
    return s;
}

BundleSum BundleSum::canonical() const {
    BundleSum r = *this;
    std::sort(r.bundles.begin(), r.bundles.end());
    return r;
}

BundleInvariants bundle_invariants(const BundleSum& sum) {
    sum.ambient.validate();
    BundleInvariants v;
    v.ambient = sum.ambient;
    const auto p = sum.ambient.p;
    const auto q = sum.ambient.q;
    for (const auto& b : sum.bundles) {
        b.validate();
        switch (b.family) {
            case Family::I: ++v.n_I; v.d_I = checked::mul(v.d_I, b.degree); break;
            case Family::II: ++v.n_II; v.d_II = checked::mul(v.d_II, b.degree); break;
            case Family::III: ++v.n_III; v.d_III = checked::mul(v.d_III, b.degree); break;
            case Family::IV: ++v.n_IV; v.d_IV = checked::mul(v.d_IV, b.degree); break;
        }
    }
    v.n = v.n_I + v.n_II + v.n_III + v.n_IV;
    v.n0 = v.n_I + v.n_II;
    v.n1 = v.n_II + v.n_III;
    v.Delta = checked::mul(checked::mul(v.d_I, v.d_II), checked::mul(v.d_III, v.d_IV));
    v.Delta0 = v.n0 < p ? checked::mul(v.d_I, v.d_II) : 0;
    v.Delta1 = v.n1 < q ? checked::mul(v.d_II, v.d_III) : 0;
    v.m = p + q - v.n;
    v.m0 = p - v.n0;
    v.m1 = q - v.n1;
    v.ell = v.n - v.n0 - v.n1;
    v.k0 = q - (v.m - v.m0);
    v.k1 = p - (v.m - v.m1);
    v.eps = ((v.Delta0 % 2) + 2) % 2;
    v.DeltaMin = std::min(v.Delta0, v.Delta1);
    v.DeltaMax = std::max(v.Delta0, v.Delta1);

    if (!(v.n < p + q)) v.context_warnings.emplace_back("n < p + q");
    if (!(v.n - q <= v.n0)) v.context_warnings.emplace_back("n - q <= n0");
    if (!(v.n0 <= v.n)) v.context_warnings.emplace_back("n0 <= n");
    if (!(v.n - p <= v.n1)) v.context_warnings.emplace_back("n - p <= n1");
    if (!(v.n1 <= v.n)) v.context_warnings.emplace_back("n1 <= n");
    return v;
}

std::string BundleInvariants::to_text() const {
    std::ostringstream os;
    os << "n=" << n << " (I,II,III,IV)=(" << n_I << ',' << n_II << ',' << n_III << ',' << n_IV << ")"
       << " n0=" << n0 << " n1=" << n1 << " Delta=" << Delta << " Delta0=" << Delta0 << " Delta1=" << Delta1
       << " m=" << m << " m0=" << m0 << " m1=" << m1 << " ell=" << ell << " k0=" << k0 << " k1=" << k1
       << " eps=" << eps;
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

ProjClass c_powers(Ambient amb, std::int64_t cw, std::int64_t ccw) {
    if (cw < 0 || ccw < 0) throw InvalidInput("negative c exponent");
    return ProjClass::monomial(amb, {0, 0, cw, ccw});
}

// Q^j / 2^(j-1) = tau(c^j) + e^-2j kappa c_w^j c_xw^j, for j >= 1.
ProjClass q_power_reduced(Ambient amb, std::int64_t j) {
    return proj_tau_monomial(amb, 0, 0, j) + ProjClass::monomial(amb, {0, 0, j, j}, PointClass::e_inv_kappa(2 * j));
}

}  // namespace

ProjClass euler_line(Ambient amb, const LineBundleSpec& L) {
    L.validate();
    const auto Q = class_Q(amb);
    switch (L.family) {
        case Family::I: {
            const auto k = (L.degree - 1) / 2;
            return ProjClass::c_omega(amb) + (ProjClass::zeta1(amb) * Q).scaled(k);
        }
        case Family::II: return Q.scaled(L.degree / 2);
        case Family::III: {
            const auto k = (L.degree - 1) / 2;
            return ProjClass::c_chi_omega(amb) + (ProjClass::zeta0(amb) * Q).scaled(k);
        }
        case Family::IV: {
            const auto k = L.degree / 2;
            return class_chiQ(amb) + proj_tau_monomial(amb, 2, 0, 1, k - 1);
        }
    }
    throw InvalidInput("unknown family");
}

ProjClass euler_product(const BundleSum& sum) {
    ProjClass r = ProjClass::unit(sum.ambient);
    for (const auto& b : sum.bundles) r = r * euler_line(sum.ambient, b);
    return r;
}

ProjClass euler_type_block(Ambient amb, Family family, std::int64_t n, std::int64_t d) {
    if (n < 0) throw InvalidInput("negative block size");
    if (n == 0) {
        if (d != 1) throw InvalidInput("an empty block has degree product 1");
        return ProjClass::unit(amb);
    }
    const bool odd_family = family == Family::I || family == Family::III;
    if (odd_family && !odd(d)) throw InvalidInput("odd family needs an odd degree product");
    if (!odd_family && (n > 62 || d % checked::pow2(n) != 0))
        throw InvalidInput("even family needs a degree product divisible by 2^n");
    switch (family) {
        case Family::I:
            return c_powers(amb, n, 0) + (c_powers(amb, n - 1, 0) * ProjClass::zeta1(amb) * class_Q(amb)).scaled((d - 1) / 2);
        case Family::III:
            return c_powers(amb, 0, n) + (c_powers(amb, 0, n - 1) * ProjClass::zeta0(amb) * class_Q(amb)).scaled((d - 1) / 2);
        case Family::II:
            // (d / 2^n) Q^n = (d / 2) (Q^n / 2^(n-1))
            return q_power_reduced(amb, n).scaled(d / 2);
        case Family::IV:
            return proj_pow(class_chiQ(amb), n) +
                   proj_tau_monomial(amb, 2 * n, 0, n, (d - checked::pow2(n)) / 2);
    }
    throw InvalidInput("unknown family");
}

// ---------------------------------------------------------------------------
// closed forms

std::int64_t binary_digit_sum(std::int64_t k) {
    if (k < 0) throw InvalidInput("binary digit sum of a negative number");
    return checked::popcount(k);
}

bool binomial_is_odd(std::int64_t n, std::int64_t j) {
    if (j < 0 || j > n) return false;
    return (j & n) == j;  // Lucas
}

namespace {

void factor(std::ostringstream& os, bool& first, const std::string& name, std::int64_t e, bool latex) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (e == 1) return;
    if (latex && (e < 0 || e >= 10)) os << "^{" << e << '}';
    else os << '^' << e;
}

std::string product_text(const ClosedTerm& t, bool latex) {
    std::ostringstream os;
    bool first = true;
    factor(os, first, latex ? "\\xi" : "xi", t.xi, latex);
    factor(os, first, latex ? "\\zeta_0" : "zeta0", t.z0, latex);
    factor(os, first, latex ? "\\zeta_1" : "zeta1", t.z1, latex);
    factor(os, first, latex ? "\\widehat{c}_\\omega" : "c_w", t.cw, latex);
    factor(os, first, latex ? "\\widehat{c}_{\\chi\\omega}" : "c_xw", t.ccw, latex);
    factor(os, first, "Q", t.q_pow, latex);
    return first ? "1" : os.str();
}

std::string transfer_text(const LaurentMonomial& m, bool latex) {
    const auto inner = LaurentClass::monomial(m);
    return latex ? "\\tau(" + inner.to_latex() + ")" : "tau(" + inner.to_text() + ")";
}

std::string render_form(const ClosedForm& f, bool latex) {
    std::ostringstream os;
    bool lead = true;
    for (const auto& t : f.terms) {
        if (t.num == 0) continue;
        std::int64_t num = t.num;
        std::int64_t den = checked::pow2(t.den_log2);
        const auto g = std::gcd(num, den);
        num /= g;
        den /= g;
        const bool neg = num < 0;
        const auto mag = neg ? -num : num;
        if (lead) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        lead = false;
        std::string coeff;
        if (den == 1) coeff = mag == 1 ? "" : std::to_string(mag);
        else if (latex) coeff = "\\frac{" + std::to_string(mag) + "}{" + std::to_string(den) + "}";
        else coeff = std::to_string(mag) + "/" + std::to_string(den);
        const auto body = latex ? t.factor_latex() : t.factor_text();
        if (coeff.empty()) os << body;
        else if (body == "1") os << coeff;
        else os << coeff << ' ' << body;
    }
    return lead ? "0" : os.str();
}

ClosedTerm product(std::int64_t num, std::int64_t den_log2) {
    ClosedTerm t;
    t.kind = ClosedTerm::Kind::Product;
    t.num = num;
    t.den_log2 = den_log2;
    return t;
}

ClosedTerm transfer(std::int64_t num, const BundleInvariants& v) {
    ClosedTerm t;
    t.kind = ClosedTerm::Kind::Transfer;
    t.num = num;
    t.den_log2 = 1;
    t.tau = {2 * v.k0, v.k1 - v.k0, v.ambient.dim() - v.m};
    return t;
}

}  // namespace

std::string ClosedTerm::factor_text() const {
    return kind == Kind::Product ? product_text(*this, false) : transfer_text(tau, false);
}

std::string ClosedTerm::factor_latex() const {
    return kind == Kind::Product ? product_text(*this, true) : transfer_text(tau, true);
}

std::string ClosedForm::to_text() const { return render_form(*this, false); }
std::string ClosedForm::to_latex() const { return render_form(*this, true); }

ClosedForm euler_closed_form_expr(const BundleInvariants& v) {
    if (!v.context_ok()) throw ContextViolation(v.context_warnings.front());
    const auto p = v.ambient.p;
    const auto q = v.ambient.q;
    ClosedForm f;
    if (v.ell <= 0) {
        const auto L = -v.ell;
        if (v.m0 <= 0 && v.m1 <= 0) {
            f.branch = "ell<=0,m0,m1<=0";
            f.terms.push_back(transfer(v.Delta, v));
        } else if (v.m0 <= 0) {
            f.branch = "ell<=0,m0<=0";
            auto t = product(v.Delta1, v.m - v.m1);
            t.z0 = v.m0;
            t.cw = v.k1;
            t.ccw = q - v.m;
            t.q_pow = v.m - v.m1;
            f.terms.push_back(t);
            f.terms.push_back(transfer(v.Delta - v.Delta1, v));
        } else if (v.m1 <= 0) {
            f.branch = "ell<=0,m1<=0";
            auto t = product(v.Delta0, v.m - v.m0);
            t.z1 = v.m1;
            t.cw = p - v.m;
            t.ccw = v.k0;
            t.q_pow = v.m - v.m0;
            f.terms.push_back(t);
            f.terms.push_back(transfer(v.Delta - v.Delta0, v));
        } else {
            f.branch = "ell<=0";
            // With k1 = 0 (resp. k0 = 0) the pivot must be Delta0 (resp. Delta1) so that no
            // negative c exponent appears; for positive degrees this is the minimum anyway.
            const auto pivot = v.k1 == 0 ? v.Delta0 : v.k0 == 0 ? v.Delta1 : v.DeltaMin;
            const auto top = v.Delta0 + v.Delta1 - pivot;
            auto a = product(pivot, L);
            a.cw = v.k1;
            a.ccw = v.k0;
            a.q_pow = L;
            auto b = product(v.Delta0 - pivot, L + 1);
            b.cw = v.k1 - 1;
            b.ccw = v.k0;
            b.z1 = 1;
            b.q_pow = L + 1;
            auto c = product(v.Delta1 - pivot, L + 1);
            c.cw = v.k1;
            c.ccw = v.k0 - 1;
            c.z0 = 1;
            c.q_pow = L + 1;
            f.terms.insert(f.terms.end(), {a, b, c, transfer(v.Delta - top, v)});
        }
        return f;
    }

    f.branch = "ell>0";
    const auto ell = v.ell;
    if (v.eps != 0) {
        for (std::int64_t j = 1; j <= ell - 1; ++j) {
            if (!binomial_is_odd(ell, j)) continue;
            auto t = product(1, 0);
            t.xi = 1;
            t.cw = p - v.m0 + j;
            t.ccw = v.k0 - j;
            t.z0 = j - 1;
            t.z1 = ell - j - 1;
            f.terms.push_back(t);
        }
    }
    auto a = product(v.Delta0, 0);
    a.cw = p - v.m0;
    a.ccw = v.k0;
    a.z1 = ell;
    auto b = product(v.Delta1, 0);
    b.cw = v.k1;
    b.ccw = q - v.m1;
    b.z0 = ell;
    const auto correction = checked::mul(v.eps, checked::pow2(binary_digit_sum(ell)) - 2);
    f.terms.insert(f.terms.end(), {a, b, transfer(v.Delta - v.Delta0 - v.Delta1 - correction, v)});
    return f;
}

ProjClass evaluate(const ClosedForm& form, Ambient amb) {
    ProjClass total(amb);
    for (const auto& t : form.terms) {
        if (t.num == 0) continue;
        ProjClass base(amb);
        std::int64_t credit = 0;
        if (t.kind == ClosedTerm::Kind::Transfer) {
            base = proj_tau_monomial(amb, t.tau.iota, t.tau.zeta, t.tau.c);
        } else {
            base = ProjClass::monomial(amb, {std::max<std::int64_t>(t.z0, 0), std::max<std::int64_t>(t.z1, 0),
                                             t.cw, t.ccw},
                                       PointClass::xi(t.xi));
            if (t.cw < 0 || t.ccw < 0) throw InvalidInput("negative c exponent in closed form term");
            if (t.q_pow > 0) {
                base = base * q_power_reduced(amb, t.q_pow);
                credit = t.q_pow - 1;
            }
            if (t.z0 < 0) base = divide_by_zeta0(base, -t.z0);
            if (t.z1 < 0) base = divide_by_zeta1(base, -t.z1);
        }
        base = base.scaled(t.num);
        const auto net = t.den_log2 - credit;
        if (net > 0) base = base.divided_by(checked::pow2(net));
        else if (net < 0) base = base.scaled(checked::pow2(-net));
        total += base;
    }
    return total;
}

ProjClass euler_closed_form(const BundleInvariants& inv) { return evaluate(euler_closed_form_expr(inv), inv.ambient); }

}  // namespace c2
