#include "c2/schubert.hpp"

#include <sstream>

#include "c2/checked.hpp"
#include "c2/errors.hpp"

namespace c2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// e^-m kappa, read as kappa for m = 0 and as e^|m| kappa = 2 e^|m| for m < 0.
PointClass e_pow_kappa(std::int64_t m) {
    if (m >= 0) return PointClass::e_inv_kappa(m);
    return PointClass::e(-m).scaled(2);
}

// zeta0^a zeta1^b c_w^cw c_xw^ccw with negative zeta exponents read as divided classes.
ProjClass zeta_monomial(Ambient amb, std::int64_t a, std::int64_t b, std::int64_t cw, std::int64_t ccw,
                        const PointClass& coeff = PointClass::one()) {
    if (cw < 0 || ccw < 0) throw InvalidInput("negative c exponent");
    ProjClass r = ProjClass::monomial(amb, {std::max<std::int64_t>(a, 0), std::max<std::int64_t>(b, 0), cw, ccw}, coeff);
    if (a < 0) r = divide_by_zeta0(r, -a);
    if (b < 0) r = divide_by_zeta1(r, -b);
    return r;
}

PiBDegree natural_invariant_degree(Ambient amb, const InvariantChain& c) {
    return ProjMonomial{c.i, c.j, amb.p - c.p_prime, amb.q - c.q_prime}.degree();
}

PiBDegree binate_degree(Ambient amb, const BinatePair& b) {
    const PiBDegree base{2 * (amb.dim() - b.i), 2 * (amb.p - b.p_i), 2 * (amb.q - b.q_i)};
    switch (b.singular) {
        case SingularPart::None: return base;
        case SingularPart::Zeta0: return base + standard_degree("zeta0");
        case SingularPart::Zeta1: return base + standard_degree("zeta1");
    }
    return base;
}

// Exponents of zeta0, zeta1 forced by a target degree on c_w^(p-p') c_xw^(q-q').
std::pair<std::int64_t, std::int64_t> forced_zeta_exponents(Ambient amb, const InvariantChain& c, const PiBDegree& d) {
    const auto cw = amb.p - c.p_prime;
    const auto ccw = amb.q - c.q_prime;
    if (d.total_rank != 2 * (cw + ccw) || d.fixed_rank_0 % 2 != 0 || d.fixed_rank_1 % 2 != 0)
        throw DegreeMismatch("invariant variety X^{" + std::to_string(c.p_prime) + "," + std::to_string(c.q_prime) +
                             "} cannot sit in degree " + to_string(d));
    return {cw - d.fixed_rank_0 / 2, ccw - d.fixed_rank_1 / 2};
}

// The plain variety X^{p',q'} read in degree d; the target is recorded only when it changes the grading.
InvariantChain invariant_in_degree(Ambient amb, std::int64_t pp, std::int64_t qq, const PiBDegree& d) {
    InvariantChain c{pp, qq, 0, 0, std::nullopt};
    if (natural_invariant_degree(amb, c) != d) c.target = d;
    return c;
}

bool empty_space(std::int64_t a, std::int64_t b) { return a <= 0 && b <= 0; }

std::string space_text(std::int64_t a, std::int64_t b, bool latex) {
    if (a == 1 && b == 0) return latex ? "\\mathrm{pt}^+" : "pt+";
    if (a == 0 && b == 1) return latex ? "\\mathrm{pt}^-" : "pt-";
    return "X^{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string y_text(std::int64_t l, std::int64_t lp, std::int64_t lm, bool latex) {
    std::ostringstream os;
    if (latex) os << "Y_{" << l << "}(" << lp << "," << lm << ")";
    else os << "Y_" << l << "(" << lp << "," << lm << ")";
    return os.str();
}

std::string s_dim_text(std::int64_t i, std::int64_t pi, std::int64_t qi, bool latex) {
    std::ostringstream os;
    if (latex) os << "\\widetilde{S}^{(" << i << ")}_{" << pi << "," << qi << "}";
    else os << "S~^(" << i << ")_{" << pi << "," << qi << "}";
    return os.str();
}

std::string s_codim_text(std::int64_t l, std::int64_t lp, std::int64_t lm, bool latex) {
    std::ostringstream os;
    if (latex) os << "\\widetilde{S}_{" << l << "}(" << lp << "," << lm << ")";
    else os << "S~_" << l << "(" << lp << "," << lm << ")";
    return os.str();
}

std::string bracket(const std::vector<std::string>& levels, bool latex) {
    std::string s = "[";
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (k) s += "; ";
        s += levels[k];
    }
    return s + (latex ? "]^*" : "]*");
}

std::string join_union(const std::vector<std::string>& parts, bool latex) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += latex ? " \\cup " : " U ";
        s += p;
    }
    return s;
}

std::string render_term(const GeometricTerm& t, Ambient amb, Notation n, bool latex) {
    const auto p = amb.p;
    const auto q = amb.q;
    return std::visit(
        overloaded{
            [&](const FreeOrbit& f) -> std::string {
                const auto k = n == Notation::Dim ? f.affine_dim : amb.dim() - f.affine_dim;
                const std::string fr = latex ? "\\mathrm{Fr}" : "Fr";
                const std::string idx = latex ? "{" + std::to_string(k) + "}" : std::to_string(k);
                return bracket({fr + (n == Notation::Dim ? "_" : "^") + idx}, latex);
            },
            [&](const InvariantChain& c) -> std::string {
                // Levels are listed top-down; empty spaces are left out of the dimension form.
                std::vector<std::string> levels;
                if (n == Notation::Dim) {
                    levels.push_back(space_text(c.p_prime, c.q_prime, latex));
                    std::vector<std::string> mid;
                    if (c.j > 0 && !empty_space(c.p_prime - c.j, c.q_prime))
                        mid.push_back(space_text(c.p_prime - c.j, c.q_prime, latex));
                    if (c.i > 0 && !empty_space(c.p_prime, c.q_prime - c.i))
                        mid.push_back(space_text(c.p_prime, c.q_prime - c.i, latex));
                    if (!mid.empty()) levels.push_back(join_union(mid, latex));
                    if (c.i > 0 && c.j > 0 && !empty_space(c.p_prime - c.j, c.q_prime - c.i))
                        levels.push_back(space_text(c.p_prime - c.j, c.q_prime - c.i, latex));
                } else {
                    const auto lp = p - c.p_prime;
                    const auto lm = q - c.q_prime;
                    const auto l = lp + lm;
                    levels.push_back(y_text(l, lp, lm, latex));
                    std::vector<std::string> mid;
                    if (c.j > 0 && !empty_space(c.p_prime - c.j, c.q_prime))
                        mid.push_back(y_text(l + c.j, lp + c.j, lm, latex));
                    if (c.i > 0 && !empty_space(c.p_prime, c.q_prime - c.i))
                        mid.push_back(y_text(l + c.i, lp, lm + c.i, latex));
                    if (!mid.empty()) levels.push_back(join_union(mid, latex));
                    if (c.i > 0 && c.j > 0 && !empty_space(c.p_prime - c.j, c.q_prime - c.i))
                        levels.push_back(y_text(l + c.i + c.j, lp + c.j, lm + c.i, latex));
                }
                return bracket(levels, latex);
            },
            [&](const BinatePair& b) -> std::string {
                std::vector<std::string> levels;
                if (n == Notation::Dim) {
                    levels.push_back(s_dim_text(b.i, b.p_i, b.q_i, latex));
                    if (b.singular == SingularPart::Zeta0) levels.push_back(s_dim_text(b.i - 1, b.p_i, b.q_i - 1, latex));
                    if (b.singular == SingularPart::Zeta1) levels.push_back(s_dim_text(b.i - 1, b.p_i - 1, b.q_i, latex));
                } else {
                    const auto l = amb.dim() - b.i;
                    const auto lp = p - b.p_i;
                    const auto lm = q - b.q_i;
                    levels.push_back(s_codim_text(l, lp, lm, latex));
                    if (b.singular == SingularPart::Zeta0) levels.push_back(s_codim_text(l + 1, lp, lm + 1, latex));
                    if (b.singular == SingularPart::Zeta1) levels.push_back(s_codim_text(l + 1, lp + 1, lm, latex));
                }
                return bracket(levels, latex);
            },
        },
        t);
}

std::string render_expansion(const BezoutExpansion& e, Notation n, bool latex) {
    std::string s;
    for (const auto& bt : e.terms) {
        auto [num, den] = bt.coefficient();
        if (num == 0) continue;
        const bool negative = num < 0;
        if (negative) num = -num;
        if (s.empty()) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        const bool invariant = std::holds_alternative<InvariantChain>(bt.term);
        if (!(invariant && num == 1 && den == 1)) {
            if (den == 1) s += std::to_string(num);
            else if (latex) s += "\\frac{" + std::to_string(num) + "}{" + std::to_string(den) + "}";
            else s += std::to_string(num) + "/" + std::to_string(den);
            s += " ";
        }
        s += render_term(bt.term, e.ambient, n, latex);
    }
    return s.empty() ? "0" : s;
}

FreeOrbit free_orbit(const BundleInvariants& v) {
    return FreeOrbit{v.m, PiBDegree{2 * v.n, 2 * v.n0, 2 * v.n1}};
}

PiBDegree euler_degree(const BundleInvariants& v) { return {2 * v.n, 2 * v.n0, 2 * v.n1}; }

void require_context(const BundleInvariants& v) {
    if (!v.context_ok()) throw ContextViolation(v.context_warnings.front());
}

}  // namespace

// ---------------------------------------------------------------------------

void validate(const GeometricTerm& t, Ambient amb) {
    amb.validate();
    const auto p = amb.p;
    const auto q = amb.q;
    std::visit(overloaded{
                   [&](const FreeOrbit& f) {
                       if (f.affine_dim < 1 || f.affine_dim > amb.dim())
                           throw InvalidInput("free orbit of affine dimension " + std::to_string(f.affine_dim));
                       LaurentMonomial lm;
                       if (!laurent_exponents_for(f.target, lm) || lm.c != amb.dim() - f.affine_dim)
                           throw DegreeMismatch("free orbit Fr_" + std::to_string(f.affine_dim) + " in degree " +
                                                to_string(f.target));
                   },
                   [&](const InvariantChain& c) {
                       if (c.p_prime < 0 || c.p_prime > p || c.q_prime < 0 || c.q_prime > q)
                           throw InvalidInput("invariant variety outside the ambient");
                       if (c.i < 0 || c.j < 0 || c.i > c.q_prime || c.j > c.p_prime)
                           throw InvalidInput("invariant chain indices out of range");
                       if (c.target) {
                           if (c.i != 0 || c.j != 0) throw InvalidInput("a target degree needs a plain invariant variety");
                           forced_zeta_exponents(amb, c, *c.target);
                       }
                   },
                   [&](const BinatePair& b) {
                       if (b.i < 0 || b.p_i + b.q_i > b.i || b.i - b.q_i > p || b.i - b.p_i > q)
                           throw InvalidInput("infeasible binate indices (" + std::to_string(b.i) + "," +
                                              std::to_string(b.p_i) + "," + std::to_string(b.q_i) + ")");
                       if (b.singular != SingularPart::None && b.i < 1)
                           throw InvalidInput("binate singular part needs i >= 1");
                   },
               },
               t);
}

PiBDegree degree_of(const GeometricTerm& t, Ambient amb) {
    return std::visit(overloaded{
                          [&](const FreeOrbit& f) { return f.target; },
                          [&](const InvariantChain& c) { return c.target ? *c.target : natural_invariant_degree(amb, c); },
                          [&](const BinatePair& b) { return binate_degree(amb, b); },
                      },
                      t);
}

ProjClass class_of(const GeometricTerm& t, Ambient amb) {
    validate(t, amb);
    const auto p = amb.p;
    const auto q = amb.q;
    return std::visit(
        overloaded{
            [&](const FreeOrbit& f) {
                LaurentMonomial lm;
                laurent_exponents_for(f.target, lm);
                return proj_tau_monomial(amb, lm.iota, lm.zeta, lm.c);
            },
            [&](const InvariantChain& c) {
                auto [a, b] = c.target ? forced_zeta_exponents(amb, c, *c.target) : std::pair{c.i, c.j};
                return zeta_monomial(amb, a, b, p - c.p_prime, q - c.q_prime);
            },
            [&](const BinatePair& b) {
                const auto i = b.i;
                const auto pi = b.p_i;
                const auto qi = b.q_i;
                ProjClass r = proj_tau_monomial(amb, 2 * (q - i + pi), p - pi - q + qi, amb.dim() - i);
                if (pi >= 0 && qi >= 0) {
                    r += ProjClass::monomial(amb, {0, 0, p - pi, q - qi}, e_pow_kappa(2 * (i - pi - qi)));
                } else if (pi < 0 && qi >= 0) {
                    r += zeta_monomial(amb, pi, 0, p, q - qi, e_pow_kappa(2 * (i - qi)));
                } else if (pi >= 0 && qi < 0) {
                    r += zeta_monomial(amb, 0, qi, p - pi, q, e_pow_kappa(2 * (i - pi)));
                }
                if (b.singular == SingularPart::Zeta0) r = ProjClass::zeta0(amb) * r;
                if (b.singular == SingularPart::Zeta1) r = ProjClass::zeta1(amb) * r;
                return r;
            },
        },
        t);
}

ProjClass binate_class_product_form(Ambient amb, std::int64_t i, std::int64_t p_i, std::int64_t q_i) {
    validate(BinatePair{i, p_i, q_i, SingularPart::None}, amb);
    const auto k = i - p_i - q_i;
    const auto outer = ProjClass::monomial(amb, {0, 0, amb.p - (i - q_i), amb.q - (i - p_i)});
    const auto inner =
        proj_tau_monomial(amb, 0, 0, k) + ProjClass::monomial(amb, {0, 0, k, k}, PointClass::e_inv_kappa(2 * k));
    return outer * inner;
}

ProjClass binate_class_codim(Ambient amb, std::int64_t l, std::int64_t lp, std::int64_t lm) {
    const auto p = amb.p;
    const auto q = amb.q;
    ProjClass r = proj_tau_monomial(amb, 2 * (l - lp), lp - lm, l);
    if (p >= lp && q >= lm) {
        r += ProjClass::monomial(amb, {0, 0, lp, lm}, e_pow_kappa(2 * (lp + lm - l)));
    } else if (p < lp && q >= lm) {
        r += zeta_monomial(amb, p - lp, 0, p, lm, e_pow_kappa(2 * (p + lm - l)));
    } else if (p >= lp && q < lm) {
        r += zeta_monomial(amb, 0, q - lm, lp, q, e_pow_kappa(2 * (q + lp - l)));
    }
    return r;
}

CodimTerm to_codim(const GeometricTerm& t, Ambient amb) {
    return std::visit(overloaded{
                          [&](const FreeOrbit& f) {
                              CodimTerm c;
                              c.kind = CodimTerm::Kind::Free;
                              c.lambda = amb.dim() - f.affine_dim;
                              c.target = f.target;
                              return c;
                          },
                          [&](const InvariantChain& ch) {
                              CodimTerm c;
                              c.kind = CodimTerm::Kind::Invariant;
                              c.lambda_plus = amb.p - ch.p_prime;
                              c.lambda_minus = amb.q - ch.q_prime;
                              c.lambda = c.lambda_plus + c.lambda_minus;
                              c.i = ch.i;
                              c.j = ch.j;
                              c.target = ch.target;
                              return c;
                          },
                          [&](const BinatePair& b) {
                              CodimTerm c;
                              c.kind = CodimTerm::Kind::Binate;
                              c.lambda = amb.dim() - b.i;
                              c.lambda_plus = amb.p - b.p_i;
                              c.lambda_minus = amb.q - b.q_i;
                              c.singular = b.singular;
                              return c;
                          },
                      },
                      t);
}

GeometricTerm from_codim(const CodimTerm& c, Ambient amb) {
    switch (c.kind) {
        case CodimTerm::Kind::Free:
            if (!c.target) throw InvalidInput("a free orbit needs a target degree");
            return FreeOrbit{amb.dim() - c.lambda, *c.target};
        case CodimTerm::Kind::Invariant:
            if (c.lambda != c.lambda_plus + c.lambda_minus) throw InvalidInput("invariant codimensions do not add up");
            return InvariantChain{amb.p - c.lambda_plus, amb.q - c.lambda_minus, c.i, c.j, c.target};
        case CodimTerm::Kind::Binate:
            return BinatePair{amb.dim() - c.lambda, amb.p - c.lambda_plus, amb.q - c.lambda_minus, c.singular};
    }
    throw InvalidInput("unknown codimension term");
}

std::string term_text(const GeometricTerm& t, Ambient amb, Notation n) { return render_term(t, amb, n, false); }
std::string term_latex(const GeometricTerm& t, Ambient amb, Notation n) { return render_term(t, amb, n, true); }

std::pair<std::int64_t, std::int64_t> BezoutTerm::coefficient() const {
    if (half_coeff % 2 == 0) return {half_coeff / 2, 1};
    return {half_coeff, 2};
}

std::string BezoutExpansion::to_text(Notation n) const { return render_expansion(*this, n, false); }
std::string BezoutExpansion::to_latex(Notation n) const { return render_expansion(*this, n, true); }

// ---------------------------------------------------------------------------

BezoutExpansion bezout_expansion(const BundleInvariants& v) {
    require_context(v);
    BezoutExpansion e;
    e.ambient = v.ambient;
    e.invariants_used = v;
    auto add = [&](std::int64_t half, GeometricTerm t) { e.terms.push_back({half, std::move(t)}); };

    if (v.ell <= 0) {
        if (v.m0 <= 0 && v.m1 <= 0) {
            add(v.Delta, free_orbit(v));
        } else if (v.m0 <= 0) {
            add(v.Delta1, BinatePair{v.m, v.m0, v.m1, SingularPart::None});
            add(checked::sub(v.Delta, v.Delta1), free_orbit(v));
        } else if (v.m1 <= 0) {
            add(v.Delta0, BinatePair{v.m, v.m0, v.m1, SingularPart::None});
            add(checked::sub(v.Delta, v.Delta0), free_orbit(v));
        } else {
            // Same pivot as the closed form: with k1 = 0 (k0 = 0) the zeta1 (zeta0) pair is infeasible.
            const auto pivot = v.k1 == 0 ? v.Delta0 : v.k0 == 0 ? v.Delta1 : v.DeltaMin;
            const auto top = v.Delta0 + v.Delta1 - pivot;
            add(pivot, BinatePair{v.m, v.m0, v.m1, SingularPart::None});
            add(v.Delta0 - pivot, BinatePair{v.m, v.m0, v.m1 - 1, SingularPart::Zeta1});
            add(v.Delta1 - pivot, BinatePair{v.m, v.m0 - 1, v.m1, SingularPart::Zeta0});
            add(checked::sub(v.Delta, top), free_orbit(v));
        }
        return e;
    }

    const auto ell = v.ell;
    for (std::int64_t j = 1; j <= ell - 1; ++j) {
        if (!binomial_is_odd(ell, j)) continue;
        add(2 * v.eps, InvariantChain{v.m0 - j, v.m - v.m0 + j, j, ell - j, std::nullopt});
    }
    add(checked::mul(2, v.Delta0), InvariantChain{v.m0, v.m - v.m0, 0, ell, std::nullopt});
    add(checked::mul(2, v.Delta1), InvariantChain{v.m - v.m1, v.m1, ell, 0, std::nullopt});
    const auto correction = checked::mul(v.eps, checked::pow2(binary_digit_sum(ell)) - 2);
    add(v.Delta - v.Delta0 - v.Delta1 - correction, free_orbit(v));
    return e;
}

BezoutExpansion simplify(const BezoutExpansion& e) {
    BezoutExpansion out;
    out.ambient = e.ambient;
    out.invariants_used = e.invariants_used;
    const auto amb = e.ambient;
    for (const auto& bt : e.terms) {
        if (bt.half_coeff == 0) continue;
        BezoutTerm t = bt;
        if (const auto* b = std::get_if<BinatePair>(&bt.term)) {
            const auto pp = std::max<std::int64_t>(b->p_i, 0);
            const auto qq = std::max<std::int64_t>(b->q_i, 0);
            const bool both_negative = b->p_i < 0 && b->q_i < 0;
            if (b->singular == SingularPart::None && !both_negative && b->i - pp - qq == 0) {
                // [S~]* = 2 [X^{p_i,q_i}]*
                t.half_coeff = checked::mul(2, bt.half_coeff);
                t.term = invariant_in_degree(amb, pp, qq, binate_degree(amb, *b));
            }
        } else if (const auto* c = std::get_if<InvariantChain>(&bt.term)) {
            const bool has_singular = c->i > 0 || c->j > 0;
            const bool all_empty = (c->j == 0 || empty_space(c->p_prime - c->j, c->q_prime)) &&
                                   (c->i == 0 || empty_space(c->p_prime, c->q_prime - c->i));
            if (has_singular && all_empty)
                t.term = invariant_in_degree(amb, c->p_prime, c->q_prime, natural_invariant_degree(amb, *c));
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

ProjClass expansion_class(const BezoutExpansion& e) {
    ProjClass total(e.ambient);
    for (const auto& bt : e.terms) {
        if (bt.half_coeff == 0) continue;
        const auto cls = class_of(bt.term, e.ambient);
        if (bt.half_coeff % 2 == 0) total += cls.scaled(bt.half_coeff / 2);
        else total += cls.divided_by(2).scaled(bt.half_coeff);
    }
    return total;
}

void audit_integrality(const BezoutExpansion& e) {
    for (const auto& bt : e.terms) {
        if (bt.half_coeff % 2 == 0) continue;
        try {
            (void)class_of(bt.term, e.ambient).divided_by(2);
        } catch (const NormalFormFailure&) {
            throw NormalFormFailure("half coefficient on a class not divisible by 2: " +
                                    term_text(bt.term, e.ambient, Notation::Dim));
        }
    }
}

ChiQDecomposition chiQ_class(Ambient amb) {
    amb.validate();
    if (amb.p < 1 || amb.q < 1) throw InvalidInput("chi Q decomposition needs p >= 1 and q >= 1");
    ChiQDecomposition d{{InvariantChain{amb.p - 1, amb.q, 1, 0, std::nullopt},
                         InvariantChain{amb.p, amb.q - 1, 0, 1, std::nullopt}},
                        ProjClass(amb)};
    for (const auto& t : d.terms) d.value += class_of(t, amb);
    if (!(d.value == class_chiQ(amb)))
        throw NormalFormFailure("chi Q decomposition gives " + d.value.to_text() + ", expected " +
                                class_chiQ(amb).to_text());
    return d;
}

// ---------------------------------------------------------------------------

std::string to_string(SpecialCase k) {
    switch (k) {
        case SpecialCase::Codim1: return "codim1";
        case SpecialCase::Dim0: return "dim0";
        case SpecialCase::Dim1Table: return "dim1_table";
        case SpecialCase::Dim2Examples: return "dim2_examples";
    }
    return "?";
}

BezoutExpansion special_codim1(Ambient amb, const LineBundleSpec& L) {
    amb.validate();
    L.validate();
    if (amb.p < 1 || amb.q < 1) throw InvalidInput("the codimension-one statements need p >= 1 and q >= 1");
    BezoutExpansion e;
    e.ambient = amb;
    auto add = [&](std::int64_t half, const CodimTerm& c) { e.terms.push_back({half, from_codim(c, amb)}); };
    auto y = [](std::int64_t lp, std::int64_t lm, std::int64_t i, std::int64_t j) {
        return CodimTerm{CodimTerm::Kind::Invariant, lp + lm, lp, lm, i, j, SingularPart::None, std::nullopt};
    };
    auto s = [](SingularPart sp) { return CodimTerm{CodimTerm::Kind::Binate, 1, 1, 1, 0, 0, sp, std::nullopt}; };
    switch (L.family) {
        case Family::I: {
            const auto k = (L.degree - 1) / 2;
            add(2, y(1, 0, 0, 0));
            add(2 * k, s(SingularPart::Zeta1));  // singular part S~_2(2,1)
            break;
        }
        case Family::II:
            add(L.degree, s(SingularPart::None));
            break;
        case Family::III: {
            const auto k = (L.degree - 1) / 2;
            add(2, y(0, 1, 0, 0));
            add(2 * k, s(SingularPart::Zeta0));  // singular part S~_2(1,2)
            break;
        }
        case Family::IV: {
            const auto k = L.degree / 2;
            add(2, y(0, 1, 0, 1));  // [Y_1(0,1); Y_2(1,1)]
            add(2, y(1, 0, 1, 0));  // [Y_1(1,0); Y_2(1,1)]
            add(2 * (k - 1), CodimTerm{CodimTerm::Kind::Free, 1, 0, 0, 0, 0, SingularPart::None, PiBDegree{2, 0, 0}});
            break;
        }
    }
    e.invariants_used = bundle_invariants(BundleSum{amb, {L}});
    return e;
}

BezoutExpansion special_dim0(const BundleInvariants& v) {
    require_context(v);
    if (v.m != 1) throw InvalidInput("dimension-zero statement needs n = p + q - 1");
    const auto amb = v.ambient;
    const auto d = euler_degree(v);
    BezoutExpansion e;
    e.ambient = amb;
    e.invariants_used = v;
    e.terms.push_back({2 * v.Delta0, invariant_in_degree(amb, 1, 0, d)});
    e.terms.push_back({2 * v.Delta1, invariant_in_degree(amb, 0, 1, d)});
    e.terms.push_back({v.Delta - v.Delta0 - v.Delta1, free_orbit(v)});
    return e;
}

BezoutExpansion special_dim1_table(const BundleInvariants& v) {
    require_context(v);
    if (v.m != 2) throw InvalidInput("dimension-one table needs n = p + q - 2");
    const auto amb = v.ambient;
    const auto d = euler_degree(v);
    BezoutExpansion e;
    e.ambient = amb;
    e.invariants_used = v;
    auto add = [&](std::int64_t half, GeometricTerm t) { e.terms.push_back({half, std::move(t)}); };
    auto chain = [](std::int64_t pp, std::int64_t qq, std::int64_t i, std::int64_t j) {
        return InvariantChain{pp, qq, i, j, std::nullopt};
    };
    const auto D = v.Delta;
    const auto D0 = v.Delta0;
    const auto D1 = v.Delta1;
    const auto row = std::min<std::int64_t>(v.m0, 2);
    const auto col = std::min<std::int64_t>(v.m1, 2);
    if (row == 2 && col == 2) {
        add(2 * D0, invariant_in_degree(amb, 2, 0, d));
        add(2 * D1, invariant_in_degree(amb, 0, 2, d));
        add(D - D0 - D1, free_orbit(v));
    } else if (row == 2 && col == 1) {
        add(2 * D0, chain(2, 0, 0, 1));
        add(2 * D1, chain(1, 1, 1, 0));
        add(D - D0 - D1, free_orbit(v));
    } else if (row == 1 && col == 2) {
        add(2 * D0, chain(1, 1, 0, 1));
        add(2 * D1, chain(0, 2, 1, 0));
        add(D - D0 - D1, free_orbit(v));
    } else if (row == 2) {
        add(2 * D0, invariant_in_degree(amb, 2, 0, d));
        add(D - D0, free_orbit(v));
    } else if (col == 2 && row <= 0) {
        add(2 * D1, invariant_in_degree(amb, 0, 2, d));
        add(D - D1, free_orbit(v));
    } else if (row == 1 && col == 1) {
        add(2 * v.DeltaMin, invariant_in_degree(amb, 1, 1, d));
        add(D0 - v.DeltaMin, BinatePair{2, 1, 0, SingularPart::Zeta1});
        add(D1 - v.DeltaMin, BinatePair{2, 0, 1, SingularPart::Zeta0});
        add(D - v.DeltaMax, free_orbit(v));
    } else if (row == 1) {
        add(D0, BinatePair{2, 1, v.m1, SingularPart::None});
        add(D - D0, free_orbit(v));
    } else if (col == 1) {
        add(D1, BinatePair{2, v.m0, 1, SingularPart::None});
        add(D - D1, free_orbit(v));
    } else {
        add(D, free_orbit(v));
    }
    return e;
}

BezoutExpansion special_dim2_examples(const BundleInvariants& v) {
    require_context(v);
    const auto amb = v.ambient;
    const auto d = euler_degree(v);
    BezoutExpansion e;
    e.ambient = amb;
    e.invariants_used = v;
    auto add = [&](std::int64_t half, GeometricTerm t) { e.terms.push_back({half, std::move(t)}); };
    if (v.m == 3 && v.m0 == 3 && v.m1 == 3) {
        if (v.eps != 1) throw InvalidInput("the m = m0 = m1 = 3 scenario has Delta0 odd");
        add(2, InvariantChain{2, 1, 1, 2, std::nullopt});  // [X^{2,1}; pt- U X^{2,0}]
        add(2, InvariantChain{1, 2, 2, 1, std::nullopt});  // [X^{1,2}; X^{0,2} U pt+]
        add(2 * v.Delta0, invariant_in_degree(amb, 3, 0, d));
        add(2 * v.Delta1, invariant_in_degree(amb, 0, 3, d));
        add(v.Delta - v.Delta0 - v.Delta1 - 2, free_orbit(v));
    } else if (v.m == 3 && v.m0 == 2 && v.m1 == 1) {
        add(v.DeltaMin, BinatePair{3, 2, 1, SingularPart::None});
        add(v.Delta0 - v.DeltaMin, BinatePair{3, 2, 0, SingularPart::Zeta1});
        add(v.Delta1 - v.DeltaMin, BinatePair{3, 1, 1, SingularPart::Zeta0});
        add(v.Delta - v.DeltaMax, free_orbit(v));
    } else {
        throw InvalidInput("not one of the two dimension-two scenarios (m = m0 = m1 = 3, or m = 3, m0 = 2, m1 = 1)");
    }
    return e;
}

BezoutExpansion special_case(SpecialCase kind, const BundleSum& sum) {
    switch (kind) {
        case SpecialCase::Codim1:
            if (sum.bundles.size() != 1) throw InvalidInput("the codimension-one statements take one line bundle");
            return special_codim1(sum.ambient, sum.bundles.front());
        case SpecialCase::Dim0: return special_dim0(bundle_invariants(sum.canonical()));
        case SpecialCase::Dim1Table: return special_dim1_table(bundle_invariants(sum.canonical()));
        case SpecialCase::Dim2Examples: return special_dim2_examples(bundle_invariants(sum.canonical()));
    }
    throw InvalidInput("unknown special case");
}

}  // namespace c2
