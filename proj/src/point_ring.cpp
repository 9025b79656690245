#include "c2/point_ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

namespace {

std::int32_t narrow(std::int64_t v, const char* what) {
    if (v < 1 || v > std::numeric_limits<std::int32_t>::max()) throw InvalidInput(std::string("bad exponent for ") + what);
    return static_cast<std::int32_t>(v);
}

}  // namespace

PointSym PointSym::e(std::int64_t m) { return {PointKind::E, narrow(m, "e"), 0}; }
PointSym PointSym::xi(std::int64_t n) { return {PointKind::Xi, narrow(n, "xi"), 0}; }
PointSym PointSym::exi(std::int64_t m, std::int64_t n) { return {PointKind::EXi, narrow(m, "e xi"), narrow(n, "e xi")}; }
PointSym PointSym::e_inv_kappa(std::int64_t m) { return {PointKind::EInvKappa, narrow(m, "e^-m kappa"), 0}; }
PointSym PointSym::tau_iota_neg(std::int64_t k) { return {PointKind::TauIotaNeg, narrow(k, "tau(iota^-2k)"), 0}; }

ROC2Degree PointSym::degree() const {
    switch (kind) {
        case PointKind::One:
        case PointKind::G: return {0, 0};
        case PointKind::E: return {0, a};
        case PointKind::Xi: return {-2 * std::int64_t{a}, 2 * std::int64_t{a}};
        case PointKind::EXi: return {-2 * std::int64_t{b}, std::int64_t{a} + 2 * std::int64_t{b}};
        case PointKind::EInvKappa: return {0, -std::int64_t{a}};
        case PointKind::TauIotaNeg: return {2 * std::int64_t{a}, -2 * std::int64_t{a}};
    }
    return {};
}

PointClass::PointClass(std::int64_t n) {
    if (n != 0) terms_.emplace_back(PointSym::one(), n);
}

PointClass::PointClass(PointSym s, std::int64_t coeff) {
    terms_.emplace_back(s, coeff);
    normalize();
}

PointClass PointClass::kappa() { return PointClass(2) - g(); }

PointClass PointClass::e(std::int64_t m) {
    if (m < 0) throw UnsupportedSubring("negative power of e without kappa");
    return m == 0 ? one() : PointClass(PointSym::e(m));
}

PointClass PointClass::xi(std::int64_t n) {
    if (n < 0) throw UnsupportedSubring("negative power of xi");
    return n == 0 ? one() : PointClass(PointSym::xi(n));
}

PointClass PointClass::e_inv_kappa(std::int64_t m) {
    if (m < 0) throw InvalidInput("e^-m kappa needs m >= 0");
    return m == 0 ? kappa() : PointClass(PointSym::e_inv_kappa(m));
}

PointClass PointClass::from_terms(std::vector<Term> terms) {
    PointClass r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

void PointClass::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) out.back().second = checked::add(out.back().second, t.second);
        else out.push_back(t);
    }
    std::vector<Term> kept;
    kept.reserve(out.size());
    for (auto& t : out) {
        if (t.first.is_torsion()) t.second = ((t.second % 2) + 2) % 2;
        if (t.second != 0) kept.push_back(t);
    }
    terms_ = std::move(kept);
}

std::int64_t PointClass::coeff(const PointSym& s) const {
    for (const auto& [sym, k] : terms_)
        if (sym == s) return k;
    return 0;
}

PointClass& PointClass::operator+=(const PointClass& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

PointClass& PointClass::operator-=(const PointClass& o) { return *this += -o; }

PointClass PointClass::operator+(const PointClass& o) const {
    PointClass r = *this;
    r += o;
    return r;
}

PointClass PointClass::operator-(const PointClass& o) const {
    PointClass r = *this;
    r -= o;
    return r;
}

PointClass PointClass::operator-() const { return scaled(-1); }

PointClass PointClass::scaled(std::int64_t k) const {
    PointClass r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = checked::mul(t.second, k);
    r.normalize();
    return r;
}

std::vector<ROC2Degree> PointClass::degrees() const {
    std::vector<ROC2Degree> out;
    for (const auto& t : terms_) out.push_back(t.first.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// rho, tau, fixed points

LaurentClass point_rho(const PointClass& a) {
    LaurentClass r;
    for (const auto& [s, k] : a.terms()) {
        switch (s.kind) {
            case PointKind::One: r.add_term({0, 0, 0}, k); break;
            case PointKind::G: r.add_term({0, 0, 0}, checked::mul(2, k)); break;
            case PointKind::Xi: r.add_term({2 * std::int64_t{s.a}, 0, 0}, k); break;
            case PointKind::TauIotaNeg: r.add_term({-2 * std::int64_t{s.a}, 0, 0}, checked::mul(2, k)); break;
            case PointKind::E:
            case PointKind::EXi:
            case PointKind::EInvKappa: break;
        }
    }
    return r;
}

PointClass point_tau(const LaurentClass& x) {
    std::vector<PointClass::Term> out;
    for (const auto& [m, k] : x.terms()) {
        if (m.zeta != 0 || m.c != 0) throw InvalidInput("point transfer of a non-point Laurent monomial");
        if (m.iota % 2 != 0) throw UnsupportedSubring("tau(iota^" + std::to_string(m.iota) + ") has odd exponent");
        const auto h = m.iota / 2;
        if (h == 0) out.emplace_back(PointSym::g(), k);
        else if (h > 0) out.emplace_back(PointSym::xi(h), checked::mul(2, k));
        else out.emplace_back(PointSym::tau_iota_neg(-h), k);
    }
    return PointClass::from_terms(std::move(out));
}

std::int64_t point_fixed(const PointClass& a) {
    std::int64_t r = 0;
    for (const auto& [s, k] : a.terms()) {
        switch (s.kind) {
            case PointKind::One:
            case PointKind::E: r = checked::add(r, k); break;
            case PointKind::EInvKappa: r = checked::add(r, checked::mul(2, k)); break;
            case PointKind::G:
            case PointKind::Xi:
            case PointKind::EXi:
            case PointKind::TauIotaNeg: break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// multiplication

namespace {

std::int64_t transfer_iota(const PointSym& s) {
    return s.kind == PointKind::G ? 0 : -2 * std::int64_t{s.a};
}

bool is_transfer(const PointSym& s) { return s.kind == PointKind::G || s.kind == PointKind::TauIotaNeg; }

PointClass sym_mul(PointSym x, PointSym y);

// e^n * e^-m kappa
PointClass e_times_inv(std::int64_t n, std::int64_t m) {
    if (n < m) return PointClass(PointSym::e_inv_kappa(m - n));
    if (n == m) return PointClass::kappa();
    return PointClass(PointSym::e(n - m), 2);
}

PointClass sym_mul(PointSym x, PointSym y) {
    if (y < x) std::swap(x, y);
    if (x.kind == PointKind::One) return PointClass(y);
    // Anything times a transfer goes through Frobenius: y * tau(a) = tau(rho(y) a).
    if (is_transfer(x) || is_transfer(y)) {
        const PointSym t = is_transfer(x) ? x : y;
        const PointSym other = is_transfer(x) ? y : x;
        const LaurentClass a = LaurentClass::monomial({transfer_iota(t), 0, 0});
        return point_tau(point_rho(PointClass(other)) * a);
    }
    using K = PointKind;
    const std::int64_t xa = x.a, xb = x.b, ya = y.a, yb = y.b;
    switch (x.kind) {
        case K::E:
            switch (y.kind) {
                case K::E: return PointClass(PointSym::e(xa + ya));
                case K::Xi: return PointClass(PointSym::exi(xa, ya));
                case K::EXi: return PointClass(PointSym::exi(xa + ya, yb));
                case K::EInvKappa: return e_times_inv(xa, ya);
                default: break;
            }
            break;
        case K::Xi:
            switch (y.kind) {
                case K::Xi: return PointClass(PointSym::xi(xa + ya));
                case K::EXi: return PointClass(PointSym::exi(ya, xa + yb));
                case K::EInvKappa: return PointClass();
                default: break;
            }
            break;
        case K::EXi:
            switch (y.kind) {
                case K::EXi: return PointClass(PointSym::exi(xa + ya, xb + yb));
                case K::EInvKappa:
                    // xi^b (e^a e^-m kappa)
                    return PointClass(PointSym::xi(xb)) * e_times_inv(xa, ya);
                default: break;
            }
            break;
        case K::EInvKappa:
            if (y.kind == K::EInvKappa) return PointClass(PointSym::e_inv_kappa(xa + ya), 2);
            break;
        default: break;
    }
    throw NormalFormFailure("unhandled point product");
}

}  // namespace

PointClass point_mul(const PointClass& a, const PointClass& b) {
    std::vector<PointClass::Term> acc;
    for (const auto& [s1, k1] : a.terms())
        for (const auto& [s2, k2] : b.terms()) {
            const auto k = checked::mul(k1, k2);
            if (s1.kind == PointKind::One) {
                acc.emplace_back(s2, k);
                continue;
            }
            if (s2.kind == PointKind::One) {
                acc.emplace_back(s1, k);
                continue;
            }
            const auto prod = sym_mul(s1, s2);
            for (const auto& [s, c] : prod.terms()) acc.emplace_back(s, checked::mul(c, k));
        }
    return PointClass::from_terms(std::move(acc));
}

PointClass point_pow(const PointClass& a, std::int64_t k) {
    if (k < 0) throw InvalidInput("negative power in point ring");
    PointClass r = PointClass::one();
    for (std::int64_t i = 0; i < k; ++i) r = r * a;
    return r;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string sym_text(const PointSym& s, bool latex) {
    std::ostringstream os;
    auto pw = [&](const char* base, std::int64_t e) {
        os << base;
        if (e != 1) {
            if (latex && (e < 0 || e >= 10)) os << "^{" << e << '}';
            else os << '^' << e;
        }
    };
    switch (s.kind) {
        case PointKind::One: os << '1'; break;
        case PointKind::G: os << 'g'; break;
        case PointKind::E: pw("e", s.a); break;
        case PointKind::Xi: pw(latex ? "\\xi" : "xi", s.a); break;
        case PointKind::EXi:
            pw("e", s.a);
            os << (latex ? "" : " ");
            pw(latex ? "\\xi" : "xi", s.b);
            break;
        case PointKind::EInvKappa:
            if (latex) os << "e^{-" << s.a << "}\\kappa";
            else os << "e^-" << s.a << " kappa";
            break;
        case PointKind::TauIotaNeg:
            if (latex) os << "\\tau(\\iota^{-" << 2 * std::int64_t{s.a} << "})";
            else os << "tau(iota^-" << 2 * std::int64_t{s.a} << ')';
            break;
    }
    return os.str();
}

std::string render(const PointClass& a, bool latex) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<std::string, std::int64_t>> parts;
    std::int64_t one = a.coeff(PointSym::one());
    std::int64_t g = a.coeff(PointSym::g());
    // Show 2c - cg as c*kappa.
    if (g != 0 && one == -2 * g) {
        parts.emplace_back(latex ? "\\kappa" : "kappa", -g);
        one = 0;
        g = 0;
    }
    for (const auto& [s, k] : a.terms()) {
        if (s.kind == PointKind::One) {
            if (one != 0) parts.emplace_back("", one);
            continue;
        }
        if (s.kind == PointKind::G) {
            if (g != 0) parts.emplace_back("g", g);
            continue;
        }
        parts.emplace_back(sym_text(s, latex), k);
    }
    std::ostringstream os;
    bool lead = true;
    for (const auto& [name, k] : parts) {
        std::int64_t mag = k < 0 ? -k : k;
        if (lead) {
            if (k < 0) os << '-';
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        lead = false;
        if (name.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << (latex ? "" : " ");
            os << name;
        }
    }
    return os.str();
}

}  // namespace

std::string PointClass::to_text() const { return render(*this, false); }
std::string PointClass::to_latex() const { return render(*this, true); }

// ---------------------------------------------------------------------------
// group structure

std::vector<PointSym> point_symbols_in_degree(const ROC2Degree& d) {
    const auto a = d.trivial_rank;
    const auto b = d.sign_rank;
    std::vector<PointSym> out;
    if (a == 0) {
        if (b == 0) {
            out.push_back(PointSym::one());
            out.push_back(PointSym::g());
        } else if (b > 0) {
            out.push_back(PointSym::e(b));
        } else {
            out.push_back(PointSym::e_inv_kappa(-b));
        }
    } else if (a < 0 && a % 2 == 0) {
        const auto n = -a / 2;
        const auto m = b - 2 * n;
        if (m == 0) out.push_back(PointSym::xi(n));
        else if (m > 0) out.push_back(PointSym::exi(m, n));
    } else if (a > 0 && a % 2 == 0 && b == -a) {
        out.push_back(PointSym::tau_iota_neg(a / 2));
    }
    for (const auto& s : out)
        if (s.degree() != d) throw NormalFormFailure("symbol degree table inconsistent");
    return out;
}

GroupStructure point_group_structure(const ROC2Degree& d) {
    GroupStructure gs;
    gs.generators = point_symbols_in_degree(d);
    for (const auto& s : gs.generators) {
        if (PointClass(s).scaled(2).is_zero()) gs.torsion.push_back(2);
        else ++gs.free_rank;
    }
    if (gs.free_rank == 2 && gs.torsion.empty()) {
        const auto gg = PointClass::g() * PointClass::g();
        gs.burnside = gs.generators[0] == PointSym::one() && gg == PointClass::g().scaled(2);
    }
    return gs;
}

std::string GroupStructure::describe() const {
    if (burnside) return "A(C2)";
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << 'Z';
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (auto t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

}  // namespace c2
