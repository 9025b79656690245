#include "c2/render_json.hpp"

#include <variant>

#include "c2/errors.hpp"

namespace c2 {

namespace {

const char* symbol_name(PointKind k) {
    switch (k) {
        case PointKind::One: return "1";
        case PointKind::G: return "g";
        case PointKind::E: return "e";
        case PointKind::Xi: return "xi";
        case PointKind::EXi: return "e xi";
        case PointKind::EInvKappa: return "e^-m kappa";
        case PointKind::TauIotaNeg: return "tau(iota^-2k)";
    }
    return "?";
}

json sym_params(const PointSym& s) {
    switch (s.kind) {
        case PointKind::One:
        case PointKind::G: return json::array();
        case PointKind::EXi: return json::array({s.a, s.b});
        default: return json::array({s.a});
    }
}

const char* singular_name(SingularPart s) {
    switch (s) {
        case SingularPart::None: return "none";
        case SingularPart::Zeta0: return "zeta0";
        case SingularPart::Zeta1: return "zeta1";
    }
    return "?";
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

json to_json(const PiBDegree& d) { return json::array({d.total_rank, d.fixed_rank_0, d.fixed_rank_1}); }

PiBDegree degree_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw InvalidInput("degree must be a 3-element array");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

json to_json(const ROC2Degree& d) { return json::array({d.trivial_rank, d.sign_rank}); }

json to_json(const PointClass& c) {
    json out = json::array();
    for (const auto& [s, k] : c.terms())
        out.push_back({{"symbol", symbol_name(s.kind)}, {"params", sym_params(s)}, {"coeff", k}});
    return out;
}

json to_json(const LaurentClass& c) {
    json out = json::array();
    for (const auto& [m, k] : c.terms())
        out.push_back({{"iota", m.iota}, {"zeta", m.zeta}, {"c", m.c}, {"coeff", k}});
    return out;
}

json to_json(const ProjClass& c) {
    json out = json::array();
    for (const auto& [m, coeff] : c.terms()) {
        json degs = json::array();
        for (const auto& r : coeff.degrees()) degs.push_back(to_json(degree_add(from_roc2(r), m.degree())));
        out.push_back({{"monomial", m.to_text()},
                       {"exponents", {{"zeta0", m.z0}, {"zeta1", m.z1}, {"c_w", m.cw}, {"c_xw", m.ccw}}},
                       {"coefficient", to_json(coeff)},
                       {"degrees", degs}});
    }
    return out;
}

json to_json(const BasisSet& b, Ambient amb) {
    json elems = json::array();
    for (const auto& e : b.elements)
        elems.push_back({{"monomial", e.to_text()}, {"degree", to_json(e.degree())}});
    return {{"p", amb.p}, {"q", amb.q}, {"m", b.m}, {"elements", elems}};
}

json to_json(const GroupStructure& g) {
    json gens = json::array();
    for (const auto& s : g.generators) gens.push_back({{"symbol", symbol_name(s.kind)}, {"params", sym_params(s)}});
    return {{"free_rank", g.free_rank},
            {"torsion", g.torsion},
            {"burnside", g.burnside},
            {"generators", gens},
            {"describe", g.describe()}};
}

json to_json(const BundleInvariants& inv) {
    json warn = inv.context_warnings;
    return {{"p", inv.ambient.p},   {"q", inv.ambient.q},   {"n", inv.n},         {"n_I", inv.n_I},
            {"n_II", inv.n_II},     {"n_III", inv.n_III},   {"n_IV", inv.n_IV},   {"d_I", inv.d_I},
            {"d_II", inv.d_II},     {"d_III", inv.d_III},   {"d_IV", inv.d_IV},   {"n0", inv.n0},
            {"n1", inv.n1},         {"Delta", inv.Delta},   {"Delta0", inv.Delta0}, {"Delta1", inv.Delta1},
            {"m", inv.m},           {"m0", inv.m0},         {"m1", inv.m1},       {"ell", inv.ell},
            {"k0", inv.k0},         {"k1", inv.k1},         {"eps", inv.eps},     {"context_warnings", warn}};
}

json to_json(const ClosedForm& f) {
    json terms = json::array();
    for (const auto& t : f.terms) {
        json jt = {{"num", t.num}, {"den_log2", t.den_log2}};
        if (t.kind == ClosedTerm::Kind::Product) {
            jt["kind"] = "product";
            jt["factor"] = {{"xi", t.xi}, {"zeta0", t.z0}, {"zeta1", t.z1}, {"c_w", t.cw}, {"c_xw", t.ccw}, {"Q", t.q_pow}};
        } else {
            jt["kind"] = "transfer";
            jt["factor"] = {{"iota", t.tau.iota}, {"zeta", t.tau.zeta}, {"c", t.tau.c}};
        }
        jt["text"] = t.factor_text();
        terms.push_back(jt);
    }
    return {{"branch", f.branch}, {"terms", terms}};
}

json to_json(const GeometricTerm& t) {
    return std::visit(
        overloaded{
            [](const FreeOrbit& f) -> json {
                return {{"variant", "free"}, {"indices", {{"m", f.affine_dim}, {"degree", to_json(f.target)}}}};
            },
            [](const InvariantChain& c) -> json {
                json idx = {{"p'", c.p_prime}, {"q'", c.q_prime}, {"i", c.i}, {"j", c.j}};
                if (c.target) idx["degree"] = to_json(*c.target);
                return {{"variant", "invariant"}, {"indices", idx}};
            },
            [](const BinatePair& b) -> json {
                return {{"variant", "binate"},
                        {"indices", {{"i", b.i}, {"p_i", b.p_i}, {"q_i", b.q_i}, {"singular", singular_name(b.singular)}}}};
            },
        },
        t);
}

json to_json(const BezoutExpansion& e) {
    json out = json::array();
    for (const auto& bt : e.terms) {
        auto [num, den] = bt.coefficient();
        out.push_back({{"coeff_num", num}, {"coeff_den", den}, {"term", to_json(bt.term)}});
    }
    return out;
}

}  // namespace c2
