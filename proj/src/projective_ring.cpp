#include "c2/projective_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

void Ambient::validate() const {
    if (p < 0 || q < 0 || p + q <= 0) throw InvalidInput("ambient needs p, q >= 0 and p + q > 0");
}

bool ProjMonomial::operator<(const ProjMonomial& o) const {
    return std::tuple(c_degree(), cw, z0, z1, ccw) < std::tuple(o.c_degree(), o.cw, o.z0, o.z1, o.ccw);
}

PiBDegree ProjMonomial::degree() const {
    const auto r = checked::mul(2, checked::add(cw, ccw));
    const auto f0 = checked::mul(2, checked::sub(cw, z0));
    const auto f1 = checked::mul(2, checked::sub(ccw, z1));
    return {r, f0, f1};
}

namespace {

void power(std::ostringstream& os, bool& first, const char* name, std::int64_t e, bool latex, bool thin) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (e == 1) return;
    if (latex && !thin && e >= 0 && e < 10) os << '^' << e;
    else if (latex) os << "^{" << (thin ? "\\;" : "") << e << '}';
    else os << '^' << e;
}

}  // namespace

std::string ProjMonomial::to_text() const {
    std::ostringstream os;
    bool first = true;
    power(os, first, "zeta0", z0, false, false);
    power(os, first, "zeta1", z1, false, false);
    power(os, first, "c_w", cw, false, false);
    power(os, first, "c_xw", ccw, false, false);
    return first ? "1" : os.str();
}

std::string ProjMonomial::to_latex() const {
    std::ostringstream os;
    bool first = true;
    power(os, first, "\\zeta_0", z0, true, false);
    power(os, first, "\\zeta_1", z1, true, false);
    power(os, first, "\\widehat{c}_\\omega", cw, true, true);
    power(os, first, "\\widehat{c}_{\\chi\\omega}", ccw, true, true);
    return first ? "1" : os.str();
}

// ---------------------------------------------------------------------------
// basis

namespace {

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

ProjMonomial basis_rec(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t k) {
    if (q == 0) return {0, m - k, k, 0};
    if (p == 0) return {-m - k, 0, 0, k};
    if (k == 0) return m >= 0 ? ProjMonomial{0, m, 0, 0} : ProjMonomial{-m, 0, 0, 0};
    if (m >= 0) {
        auto b = basis_rec(p - 1, q, m - 1, k - 1);
        ++b.cw;
        return b;
    }
    auto b = basis_rec(p, q - 1, m + 1, k - 1);
    ++b.ccw;
    return b;
}

}  // namespace

BasisSet basis_enumerate(Ambient amb, std::int64_t m) {
    amb.validate();
    BasisSet bs;
    bs.m = m;
    for (std::int64_t k = 0; k < amb.dim(); ++k) bs.elements.push_back(basis_rec(amb.p, amb.q, m, k));
    return bs;
}

ProjMonomial basis_element_closed(Ambient amb, std::int64_t m, std::int64_t k) {
    const auto lo = std::max<std::int64_t>(0, k - amb.q);
    const auto hi = std::min<std::int64_t>(amb.p, k);
    const auto i = std::clamp(floor_div2(k + m + 1), lo, hi);
    const auto j = k - i;
    const auto shift = m - i + j;  // z1 - z0
    if (i >= amb.p) return {-shift, 0, i, j};
    if (j >= amb.q) return {0, shift, i, j};
    return shift >= 0 ? ProjMonomial{0, shift, i, j} : ProjMonomial{-shift, 0, i, j};
}

// ---------------------------------------------------------------------------
// ring context

namespace {

struct MonoHash {
    std::size_t operator()(const ProjMonomial& m) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(m.z0);
        for (auto v : {m.z1, m.cw, m.ccw}) h = h * 1000003u ^ std::hash<std::int64_t>{}(v);
        return h;
    }
};

std::size_t cache_limit_from_env() {
    if (const char* s = std::getenv("C2_CACHE_LIMIT")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

}  // namespace

struct RingContext::Impl {
    mutable std::shared_mutex mu;
    std::map<std::int64_t, std::vector<ProjMonomial>> bases;
    std::unordered_map<ProjMonomial, std::shared_ptr<const Reduced>, MonoHash> cache;
    std::size_t limit = cache_limit_from_env();
};

RingContext::RingContext(Ambient amb) : amb_(amb), impl_(std::make_unique<Impl>()) { amb_.validate(); }
RingContext::~RingContext() = default;

const std::vector<ProjMonomial>& RingContext::basis(std::int64_t m) const {
    {
        std::shared_lock lock(impl_->mu);
        auto it = impl_->bases.find(m);
        if (it != impl_->bases.end()) return it->second;
    }
    auto elems = basis_enumerate(amb_, m).elements;
    std::unique_lock lock(impl_->mu);
    return impl_->bases.try_emplace(m, std::move(elems)).first->second;
}

std::size_t RingContext::cache_size() const {
    std::shared_lock lock(impl_->mu);
    return impl_->cache.size();
}

std::shared_ptr<const RingContext::Reduced> RingContext::reduce(const ProjMonomial& raw) const {
    {
        std::shared_lock lock(impl_->mu);
        auto it = impl_->cache.find(raw);
        if (it != impl_->cache.end()) return it->second;
    }
    auto value = compute(raw);
    std::unique_lock lock(impl_->mu);
    if (impl_->cache.size() >= impl_->limit) impl_->cache.clear();
    return impl_->cache.try_emplace(raw, std::move(value)).first->second;
}

namespace {

void check_degree(const ProjMonomial& raw, const RingContext::Reduced& out) {
    const auto want = raw.degree();
    for (const auto& [m, c] : out)
        for (const auto& [s, k] : c.terms())
            if (from_roc2(s.degree()) + m.degree() != want)
                throw NormalFormFailure("rewrite of " + raw.to_text() + " changed degree (term " + m.to_text() + ")");
}

}  // namespace

std::shared_ptr<const RingContext::Reduced> RingContext::compute(const ProjMonomial& raw) const {
    const auto p = amb_.p;
    const auto q = amb_.q;
    auto [a, b, i, j] = raw;
    auto out = std::make_shared<Reduced>();
    if (i < 0 || j < 0) throw NormalFormFailure("negative c exponent in " + raw.to_text());
    if (i >= p && j >= q) return out;

    // Pull common zeta0 zeta1 pairs into a xi coefficient.
    std::int64_t s = 0;
    if (i >= p) {
        if (b < 0) throw NormalFormFailure("zeta1 inverted outside its divided range: " + raw.to_text());
        s = b;
    } else if (j >= q) {
        if (a < 0) throw NormalFormFailure("zeta0 inverted outside its divided range: " + raw.to_text());
        s = a;
    } else {
        if (a < 0 || b < 0) throw NormalFormFailure("negative zeta power on a non-divided class: " + raw.to_text());
        s = std::min(a, b);
    }
    a -= s;
    b -= s;
    const PointClass lead = PointClass::xi(s);

    static const PointClass g_minus_1 = PointClass::g() - PointClass::one();
#ifdef C2_PERTURB_TENSOR_RELATION
    static const PointClass e_sq = -PointClass::e(2);
#else
    static const PointClass e_sq = PointClass::e(2);
#endif

    std::map<ProjMonomial, PointClass> acc;
    auto push = [&](const PointClass& coeff, const ProjMonomial& m) {
        const auto red = reduce(m);
        for (const auto& [mono, c] : *red) {
            auto t = coeff * c;
            if (t.is_zero()) continue;
            auto& slot = acc[mono];
            slot += t;
        }
    };

    if (i > p) {
        // zeta0 c_w = (g-1) zeta1 c_xw + e^2, applied to lower the c_w exponent into the box.
        push(g_minus_1, {a - 1, 1, i - 1, j + 1});
        push(PointClass::e(2), {a - 1, 0, i - 1, j});
    } else if (j > q) {
        push(g_minus_1, {1, b - 1, i + 1, j - 1});
        push(PointClass::e(2), {0, b - 1, i, j - 1});
    } else {
        const auto k = i + j;
        const auto m = -a + b + i - j;
        const auto& target = basis(m).at(static_cast<std::size_t>(k));
        if (i == target.cw) {
            if (a != target.z0 || b != target.z1)
                throw NormalFormFailure(raw.to_text() + " does not match basis element " + target.to_text());
            acc[target] = PointClass::one();
        } else if (i < target.cw) {
            // zeta1 c_xw = (g-1) zeta0 c_w + e^2
            push(g_minus_1, {a + 1, b - 1, i + 1, j - 1});
            push(e_sq, {a, b - 1, i, j - 1});
        } else {
            push(g_minus_1, {a - 1, b + 1, i - 1, j + 1});
            push(PointClass::e(2), {a - 1, b, i - 1, j});
        }
    }

    for (auto& [mono, c] : acc) {
        auto t = lead * c;
        if (!t.is_zero()) out->emplace_back(mono, std::move(t));
    }
    check_degree(raw, *out);
    return out;
}

std::shared_ptr<const RingContext> ring_context(Ambient amb) {
    static std::shared_mutex mu;
    static std::map<Ambient, std::shared_ptr<const RingContext>> registry;
    {
        std::shared_lock lock(mu);
        auto it = registry.find(amb);
        if (it != registry.end()) return it->second;
    }
    auto ctx = std::make_shared<const RingContext>(amb);
    std::unique_lock lock(mu);
    return registry.try_emplace(amb, std::move(ctx)).first->second;
}

// ---------------------------------------------------------------------------
// ProjClass

ProjClass::ProjClass(Ambient amb) : ctx_(ring_context(amb)) {}

const Ambient& ProjClass::ambient() const { return ctx_->ambient(); }

ProjClass ProjClass::constant(Ambient amb, const PointClass& c) { return monomial(amb, {0, 0, 0, 0}, c); }

ProjClass ProjClass::monomial(Ambient amb, const ProjMonomial& m, const PointClass& coeff) {
    ProjClass r(amb);
    if (coeff.is_zero()) return r;
    const auto red = r.ctx_->reduce(m);
    for (const auto& [mono, c] : *red) r.add_normal(mono, coeff * c);
    return r;
}

ProjClass ProjClass::divided0(Ambient amb, std::int64_t k) {
    if (k < 1) throw InvalidInput("divided class needs k >= 1");
    return monomial(amb, {-k, 0, amb.p, 0});
}

ProjClass ProjClass::divided1(Ambient amb, std::int64_t k) {
    if (k < 1) throw InvalidInput("divided class needs k >= 1");
    return monomial(amb, {0, -k, 0, amb.q});
}

void ProjClass::add_normal(const ProjMonomial& m, const PointClass& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ProjClass& ProjClass::operator+=(const ProjClass& o) {
    if (o.ambient() != ambient()) throw InvalidInput("ambient mismatch");
    for (const auto& [m, c] : o.terms_) add_normal(m, c);
    return *this;
}

ProjClass& ProjClass::operator-=(const ProjClass& o) {
    if (o.ambient() != ambient()) throw InvalidInput("ambient mismatch");
    for (const auto& [m, c] : o.terms_) add_normal(m, -c);
    return *this;
}

ProjClass ProjClass::operator+(const ProjClass& o) const {
    ProjClass r = *this;
    r += o;
    return r;
}

ProjClass ProjClass::operator-(const ProjClass& o) const {
    ProjClass r = *this;
    r -= o;
    return r;
}

ProjClass ProjClass::scaled(std::int64_t k) const {
    ProjClass r(ambient());
    for (const auto& [m, c] : terms_) r.add_normal(m, c.scaled(k));
    return r;
}

ProjClass ProjClass::times(const PointClass& k) const {
    ProjClass r(ambient());
    for (const auto& [m, c] : terms_) r.add_normal(m, k * c);
    return r;
}

ProjClass ProjClass::divided_by(std::int64_t d) const {
    ProjClass r(ambient());
    for (const auto& [m, c] : terms_) {
        std::vector<PointClass::Term> t;
        for (const auto& [s, k] : c.terms()) {
            if (s.is_torsion()) {
                // e^a xi^b has order 2: divisible by odd d only.
                if (d % 2 == 0) throw NormalFormFailure("halving a 2-torsion coefficient");
                t.emplace_back(s, k);
            } else {
                t.emplace_back(s, checked::exact_div(k, d, "ProjClass::divided_by"));
            }
        }
        r.add_normal(m, PointClass::from_terms(std::move(t)));
    }
    return r;
}

bool ProjClass::operator==(const ProjClass& o) const { return ambient() == o.ambient() && terms_ == o.terms_; }

std::vector<PiBDegree> ProjClass::degrees() const {
    std::vector<PiBDegree> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, k] : c.terms()) out.push_back(from_roc2(s.degree()) + m.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::string render(const ProjClass& a, bool latex) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [m, c] : a.terms()) {
        const bool unit = m == ProjMonomial{};
        const auto mono = latex ? m.to_latex() : m.to_text();
        std::string coeff;
        bool negative = false;
        if (c.terms().size() == 1) {
            auto [s, k] = c.terms().front();
            negative = k < 0;
            const auto mag = PointClass(s, negative ? -k : k);
            coeff = latex ? mag.to_latex() : mag.to_text();
        } else {
            coeff = latex ? c.to_latex() : c.to_text();
            coeff = "(" + coeff + ")";
        }
        if (lead) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        lead = false;
        if (unit) os << coeff;
        else if (coeff == "1") os << mono;
        else os << coeff << ' ' << mono;
    }
    return os.str();
}

}  // namespace

std::string ProjClass::to_text() const { return render(*this, false); }
std::string ProjClass::to_latex() const { return render(*this, true); }

ProjClass proj_mul(const ProjClass& a, const ProjClass& b) {
    if (a.ambient() != b.ambient()) throw InvalidInput("ambient mismatch in product");
    ProjClass r(a.ambient());
    const auto& ctx = a.context();
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) {
            const auto c = c1 * c2;
            if (c.is_zero()) continue;
            const auto red = ctx.reduce(m1 * m2);
            for (const auto& [mono, k] : *red) r.add_normal(mono, c * k);
        }
    return r;
}

ProjClass proj_pow(const ProjClass& a, std::int64_t k) {
    if (k < 0) throw InvalidInput("negative power of a class");
    ProjClass r = ProjClass::unit(a.ambient());
    for (std::int64_t i = 0; i < k; ++i) r = r * a;
    return r;
}

// ---------------------------------------------------------------------------
// shadows

namespace {

LaurentMonomial rho_monomial(const ProjMonomial& m) {
    return {2 * m.z0 + 2 * m.ccw, -m.z0 + m.z1 + m.cw - m.ccw, m.cw + m.ccw};
}

}  // namespace

LaurentClass proj_rho(const ProjClass& a) {
    const auto bound = a.ambient().dim();
    LaurentClass r(bound);
    for (const auto& [m, c] : a.terms()) {
        if (m.c_degree() >= bound) continue;
        r += point_rho(c) * LaurentClass::monomial(rho_monomial(m), 1, bound);
    }
    return r;
}

FixedPair FixedPair::operator*(const FixedPair& o) const {
    auto conv = [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        std::vector<std::int64_t> r(x.size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; i + j < x.size() && j < y.size(); ++j)
                r[i + j] = checked::add(r[i + j], checked::mul(x[i], y[j]));
        return r;
    };
    return {conv(on_b0, o.on_b0), conv(on_b1, o.on_b1)};
}

FixedPair FixedPair::operator+(const FixedPair& o) const {
    FixedPair r = *this;
    for (std::size_t i = 0; i < r.on_b0.size(); ++i) r.on_b0[i] = checked::add(r.on_b0[i], o.on_b0[i]);
    for (std::size_t i = 0; i < r.on_b1.size(); ++i) r.on_b1[i] = checked::add(r.on_b1[i], o.on_b1[i]);
    return r;
}

std::string FixedPair::to_text() const {
    auto poly = [](const std::vector<std::int64_t>& v) {
        LaurentClass l;
        for (std::size_t i = 0; i < v.size(); ++i) l.add_term({0, 0, static_cast<std::int64_t>(i)}, v[i]);
        return l.to_text();
    };
    return "(" + poly(on_b0) + ", " + poly(on_b1) + ")";
}

FixedPair proj_fixed(const ProjClass& a) {
    const auto& amb = a.ambient();
    FixedPair r{std::vector<std::int64_t>(static_cast<std::size_t>(amb.p), 0),
                std::vector<std::int64_t>(static_cast<std::size_t>(amb.q), 0)};
    for (const auto& [m, c] : a.terms()) {
        const auto f = point_fixed(c);
        if (f == 0) continue;
        if (m.z0 == 0 && m.cw < amb.p) r.on_b0[m.cw] = checked::add(r.on_b0[m.cw], f);
        if (m.z1 == 0 && m.ccw < amb.q) r.on_b1[m.ccw] = checked::add(r.on_b1[m.ccw], f);
    }
    return r;
}

// ---------------------------------------------------------------------------
// transfer

ProjClass proj_tau(Ambient amb, const LaurentClass& x) {
    ProjClass r(amb);
    const auto& ctx = r.context();
    for (const auto& [lm, k] : x.terms()) {
        if (lm.c < 0) throw InvalidInput("negative c exponent under transfer");
        if (lm.c >= amb.dim()) continue;
        const auto& b = ctx.basis(lm.zeta).at(static_cast<std::size_t>(lm.c));
        const auto rest = lm.iota - rho_monomial(b).iota;
        const auto coeff = point_tau(LaurentClass::monomial({rest, 0, 0}, k));
        r.add_normal(b, coeff);
    }
    return r;
}

ProjClass proj_tau(Ambient amb, const LaurentClass& x, const PiBDegree& target) {
    for (const auto& [lm, k] : x.terms())
        if (lm.degree() != target)
            throw DegreeMismatch("transfer target " + to_string(target) + " but Laurent term has " +
                                 to_string(lm.degree()));
    return proj_tau(amb, x);
}

ProjClass proj_tau_monomial(Ambient amb, std::int64_t iota, std::int64_t zeta, std::int64_t c, std::int64_t coeff) {
    return proj_tau(amb, LaurentClass::monomial({iota, zeta, c}, coeff));
}

namespace {

// side 0 divides by zeta0, side 1 by zeta1.
ProjClass divide_by_zeta(const ProjClass& a, std::int64_t r, int side) {
    if (r < 0) throw InvalidInput("negative divisor exponent");
    const auto& amb = a.ambient();
    ProjClass out(amb);
    if (r == 0) return a;
    // rho(zeta0) = iota^2 zeta^-1, rho(zeta1) = zeta
    const LaurentMonomial inv = side == 0 ? LaurentMonomial{-2 * r, r, 0} : LaurentMonomial{0, -r, 0};
    for (const auto& [m, c] : a.terms()) {
        const bool divided = side == 0 ? m.cw >= amb.p : m.ccw >= amb.q;
        const std::int64_t own = side == 0 ? m.z0 : m.z1;
        auto lowered = [&](std::int64_t extra) {
            ProjMonomial t = m;
            t.z0 += extra;
            t.z1 += extra;
            (side == 0 ? t.z0 : t.z1) -= r;
            return t;
        };
        auto via_transfer = [&](std::int64_t iota, std::int64_t k) {
            LaurentClass x = LaurentClass::monomial({iota, 0, 0}, k, amb.dim()) *
                             LaurentClass::monomial(rho_monomial(m), 1, amb.dim()) *
                             LaurentClass::monomial(inv, 1, amb.dim());
            out += proj_tau(amb, x);
        };
        for (const auto& [s, k] : c.terms()) {
            if (divided) {
                out += ProjClass::monomial(amb, lowered(0), PointClass(s, k));
                continue;
            }
            switch (s.kind) {
                case PointKind::G: via_transfer(0, k); continue;
                case PointKind::TauIotaNeg: via_transfer(-2 * std::int64_t{s.a}, k); continue;
                case PointKind::Xi:
                case PointKind::EXi: {
                    const std::int64_t t = s.kind == PointKind::Xi ? s.a : s.b;
                    if (own + t >= r) {
                        const auto rest = s.kind == PointKind::Xi ? PointClass(k) : PointClass(PointSym::e(s.a), k);
                        out += ProjClass::monomial(amb, lowered(t), rest);
                    } else if (s.kind == PointKind::Xi && k % 2 == 0) {
                        via_transfer(2 * t, k / 2);  // 2 xi^t = tau(iota^2t)
                    } else {
                        throw InvalidInput("class is not divisible by zeta" + std::to_string(side));
                    }
                    continue;
                }
                default:
                    if (own < r) throw InvalidInput("class is not divisible by zeta" + std::to_string(side));
                    out += ProjClass::monomial(amb, lowered(0), PointClass(s, k));
            }
        }
    }
    return out;
}

}  // namespace

ProjClass divide_by_zeta0(const ProjClass& a, std::int64_t r) { return divide_by_zeta(a, r, 0); }
ProjClass divide_by_zeta1(const ProjClass& a, std::int64_t r) { return divide_by_zeta(a, r, 1); }

// ---------------------------------------------------------------------------
// coordinates

std::map<ProjMonomial, PointClass> reduce_to_basis(const ProjClass& a) {
    std::map<ProjMonomial, PointClass> out;
    if (a.is_zero()) return out;
    const auto m = a.terms().begin()->first.coset();
    const auto& basis = a.context().basis(m);
    for (const auto& [mono, c] : a.terms()) {
        if (mono.coset() != m) throw DegreeMismatch("class is not homogeneous in one coset");
        const auto k = mono.c_degree();
        if (k < 0 || k >= a.ambient().dim() || basis[static_cast<std::size_t>(k)] != mono)
            throw NormalFormFailure("term " + mono.to_text() + " is not a basis element");
        out.emplace(mono, c);
    }
    return out;
}

ProjClass reconstruct(Ambient amb, const std::map<ProjMonomial, PointClass>& coords) {
    ProjClass r(amb);
    for (const auto& [m, c] : coords) r += ProjClass::monomial(amb, m, c);
    return r;
}

ProjClass class_Q(Ambient amb) {
    return proj_tau_monomial(amb, 0, 0, 1) + ProjClass::monomial(amb, {0, 0, 1, 1}, PointClass::e_inv_kappa(2));
}

ProjClass class_chiQ(Ambient amb) {
    return ProjClass::monomial(amb, {1, 0, 1, 0}) + ProjClass::monomial(amb, {0, 1, 0, 1});
}

}  // namespace c2
