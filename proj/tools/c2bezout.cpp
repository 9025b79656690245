// Command-line front end: Euler classes, Bezout expansions, bases, the point table and the
// verification sweep. Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "c2/errors.hpp"
#include "c2/euler.hpp"
#include "c2/render_json.hpp"
#include "c2/schubert.hpp"
#include "c2/verify.hpp"

using namespace c2;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

enum class Format { Text, Latex, Json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "latex") return Format::Latex;
    return Format::Json;
}

std::string render(const ProjClass& c, Format f) { return f == Format::Latex ? c.to_latex() : c.to_text(); }

int cmd_euler(Ambient amb, const std::string& bundles, Format fmt) {
    amb.validate();
    const BundleSum sum{amb, parse_bundles(bundles)};
    const auto inv = bundle_invariants(sum);
    const auto prod = euler_product(sum);
    std::optional<ClosedForm> form;
    std::optional<ProjClass> value;
    if (inv.context_ok()) {
        form = euler_closed_form_expr(inv);
        value = evaluate(*form, amb);
    }
    const bool agrees = !value || *value == prod;

    if (fmt == Format::Json) {
        json out = {{"p", amb.p}, {"q", amb.q}, {"bundles", bundles_to_text(sum.bundles)}, {"product", to_json(prod)}};
        out["invariants"] = to_json(inv);
        if (form) {
            out["closed_form"] = to_json(*form);
            out["closed_form_value"] = to_json(*value);
            out["agrees"] = agrees;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "product: " << render(prod, fmt) << '\n';
        if (form) {
            std::cout << "closed form (" << form->branch
                      << "): " << (fmt == Format::Latex ? form->to_latex() : form->to_text()) << '\n'
                      << "value: " << render(*value, fmt) << '\n'
                      << (agrees ? "AGREES with product" : "DISAGREES with product") << '\n';
        } else {
            for (const auto& w : inv.context_warnings) std::cout << "context warning: " << w << " fails\n";
            std::cout << "closed form not available outside the context\n";
        }
    }
    return agrees ? kOk : kVerifyFailed;
}

int cmd_bezout(Ambient amb, const std::string& bundles, Format fmt, Notation notation, const std::string& special) {
    amb.validate();
    const BundleSum sum{amb, parse_bundles(bundles)};
    const auto inv = bundle_invariants(sum);
    if (!inv.context_ok()) throw ContextViolation(inv.context_warnings.front());
    BezoutExpansion e = simplify(bezout_expansion(inv));
    if (!special.empty()) {
        static const std::map<std::string, SpecialCase> kinds{{"codim1", SpecialCase::Codim1},
                                                              {"dim0", SpecialCase::Dim0},
                                                              {"dim1", SpecialCase::Dim1Table},
                                                              {"dim2", SpecialCase::Dim2Examples}};
        e = simplify(special_case(kinds.at(special), sum));
    }
    audit_integrality(e);
    const ProjClass value = expansion_class(e);
    const ProjClass prod = euler_product(sum);
    const bool agrees = value == prod;

    if (fmt == Format::Json) {
        json out = {{"p", amb.p},
                    {"q", amb.q},
                    {"bundles", bundles_to_text(sum.bundles)},
                    {"notation", notation == Notation::Dim ? "dim" : "codim"},
                    {"expansion", to_json(e)},
                    {"value", to_json(value)},
                    {"agrees", agrees}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (fmt == Format::Latex ? e.to_latex(notation) : e.to_text(notation)) << '\n'
                  << "value: " << render(value, fmt) << '\n'
                  << (agrees ? "AGREES with product" : "DISAGREES with product") << '\n';
    }
    return agrees ? kOk : kVerifyFailed;
}

std::string basis_diagram(Ambient amb, const BasisSet& b) {
    // Rows: c_xw exponent from the top; columns: c_w exponent. Each basis element is a dot.
    std::int64_t max_cw = 0, max_ccw = 0;
    for (const auto& e : b.elements) max_cw = std::max(max_cw, e.cw), max_ccw = std::max(max_ccw, e.ccw);
    std::ostringstream os;
    for (std::int64_t y = max_ccw; y >= 0; --y) {
        os << (y < 10 ? " " : "") << y << " |";
        for (std::int64_t x = 0; x <= max_cw; ++x) {
            bool hit = false;
            for (const auto& e : b.elements) hit = hit || (e.cw == x && e.ccw == y);
            os << (hit ? " *" : " .");
        }
        os << '\n';
    }
    os << "    " << std::string(static_cast<std::size_t>(2 * (max_cw + 1)), '-') << "  c_w ->  (p=" << amb.p
       << ", q=" << amb.q << ")\n";
    return os.str();
}

int cmd_basis(Ambient amb, std::int64_t m, Format fmt, bool diagram) {
    amb.validate();
    if (amb.dim() <= 0) throw InvalidInput("basis needs p + q > 0");
    const auto b = basis_enumerate(amb, m);
    if (fmt == Format::Json) {
        std::cout << to_json(b, amb).dump(2) << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        std::cout << (i ? ", " : "") << (fmt == Format::Latex ? b.elements[i].to_latex() : b.elements[i].to_text());
    std::cout << '\n';
    if (diagram) std::cout << basis_diagram(amb, b);
    return kOk;
}

int cmd_point_table(std::int64_t range, Format fmt) {
    if (fmt == Format::Json) {
        json out = json::array();
        for (std::int64_t a = -range; a <= range; ++a)
            for (std::int64_t b = -range; b <= range; ++b)
                out.push_back({{"degree", to_json(ROC2Degree{a, b})}, {"group", to_json(point_group_structure({a, b}))}});
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    // Columns a (trivial part), rows b (sign part), largest b on top.
    std::cout << "  b\\a";
    for (std::int64_t a = -range; a <= range; ++a) std::cout << std::setw(6) << a;
    std::cout << '\n';
    for (std::int64_t b = range; b >= -range; --b) {
        std::cout << std::setw(5) << b;
        for (std::int64_t a = -range; a <= range; ++a) {
            const auto g = point_group_structure({a, b});
            std::string cell = g.burnside ? "A" : g.free_rank ? "Z" : !g.torsion.empty() ? "Z/2" : ".";
            std::cout << std::setw(6) << cell;
        }
        std::cout << '\n';
    }
    std::cout << "A = Burnside ring A(C2), Z = integers, Z/2 = torsion, . = 0\n";
    return kOk;
}

int cmd_verify(const std::string& config_path, std::optional<std::uint64_t> seed, bool negative,
               std::optional<std::int64_t> threads, const std::vector<std::string>& suites, Format fmt,
               const std::string& report_path) {
    SweepConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw InvalidInput("cannot open sweep config '" + config_path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("sweep config is not valid JSON: ") + e.what(), e.byte);
        }
        cfg = SweepConfig::from_json(j);
    }
    if (seed) cfg.seed = *seed;
    if (negative) cfg.include_negative_degrees = true;
    if (threads) cfg.threads = *threads;
    if (!suites.empty()) cfg.suites = suites;
    cfg.validate();

    const auto rep = run_verify(cfg);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << rep.to_json().dump(1) << '\n';
    }
    if (fmt == Format::Json) std::cout << rep.to_json().dump(1) << '\n';
    else std::cout << rep.summary_text();
    return rep.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Euler classes of line bundle sums over C2-projective spaces, with Schubert expansions"};
    app.require_subcommand(1);
    app.footer("Environment: C2_CACHE_LIMIT caps the per-ambient normal-form cache (entries).");

    std::int64_t p = 0, q = 0, m = 0, range = 8;
    std::string bundles, format = "text", notation = "dim", special, config_path, report_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> threads;
    std::vector<std::string> suites;
    bool negative = false, diagram = false;
    const std::vector<std::string> formats{"text", "latex", "json"};

    auto add_ambient = [&](CLI::App* sub) {
        sub->add_option("--p", p, "number of trivial coordinates")->required();
        sub->add_option("--q", q, "number of sign coordinates")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, latex or json")->check(CLI::IsMember(formats));
    };

    auto* euler = app.add_subcommand("euler", "Euler class as a product and as a closed form");
    add_ambient(euler);
    euler->add_option("--bundles", bundles, "comma-separated O(d) / xO(d)")->required();
    add_format(euler);

    auto* bezout = app.add_subcommand("bezout", "Euler class as a combination of Schubert varieties");
    add_ambient(bezout);
    bezout->add_option("--bundles", bundles, "comma-separated O(d) / xO(d)")->required();
    add_format(bezout);
    bezout->add_option("--notation", notation, "dim or codim")->check(CLI::IsMember({"dim", "codim"}));
    bezout->add_option("--special", special, "use a corollary: codim1, dim0, dim1 or dim2")
        ->check(CLI::IsMember({"codim1", "dim0", "dim1", "dim2"}));

    auto* verify = app.add_subcommand("verify", "run the verification sweep");
    verify->add_option("--sweep-config", config_path, "JSON sweep configuration");
    verify->add_option("--seed", seed, "seed for the randomized ring checks");
    verify->add_flag("--include-negative-degrees", negative, "add the negatives of every listed degree");
    verify->add_option("--threads", threads, "worker threads (0: all cores)");
    verify->add_option("--suite", suites, "restrict to the named suites");
    verify->add_option("--report", report_path, "write the JSON report to this file");
    add_format(verify);

    auto* basis = app.add_subcommand("basis", "basis of one coset");
    add_ambient(basis);
    basis->add_option("--m", m, "coset index")->required();
    basis->add_flag("--diagram", diagram, "draw the basis as dots in the (c_w, c_xw) exponent plane");
    add_format(basis);

    auto* points = app.add_subcommand("point-table", "additive structure of the point ring by degree");
    points->add_option("--range", range, "bound on |a| and |b|")->check(CLI::Range(0, 64));
    add_format(points);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (*euler) return cmd_euler({p, q}, bundles, fmt);
        if (*bezout) return cmd_bezout({p, q}, bundles, fmt, notation == "dim" ? Notation::Dim : Notation::Codim, special);
        if (*verify) return cmd_verify(config_path, seed, negative, threads, suites, fmt, report_path);
        if (*basis) return cmd_basis({p, q}, m, fmt, diagram);
        if (*points) return cmd_point_table(range, fmt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContextViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
