/*
 * sktrop_cli.cpp
 * --------------
 * Command-line front-end for the supertropical library. One verb per
 * invocation; results are JSON documents on standard output (or SVG for the
 * drawing verbs). Exit codes: 0 success, 1 domain error with a
 * machine-readable error object, 2 usage error. Output is deterministic:
 * identical command lines produce byte-identical bytes.
 *
 * Verbs:
 *   eval skel corn hat phici ci regular member kop decompose wedge
 *   classify dim chain polar render
 *
 * Expression arguments accept the "hat:" and "phici:" prefixes, which apply
 * the corresponding construction before the verb runs.
 */
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <sktrop/dimension.hpp>
#include <sktrop/parser.hpp>
#include <sktrop/render.hpp>

using json = nlohmann::ordered_json;
using namespace sktrop;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trimmed(std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

bool unit_denominator(const RationalExpr& e) {
    return e.den.ms.size() == 1 && e.den.ms[0].coeff == t(0) &&
           std::all_of(e.den.ms[0].exps.begin(), e.den.ms[0].exps.end(),
                       [](long long x) { return x == 0; });
}

// expression argument with optional "hat:" / "phici:" construction prefix
RationalExpr parse_arg(const std::string& raw, int n, int budget) {
    std::string s = trimmed(raw);
    if (s.rfind("hat:", 0) == 0) {
        RationalExpr e = parse(s.substr(4), n, budget);
        if (!unit_denominator(e)) throw DomainError("hat: requires a polynomial, not a fraction");
        return hat(e.num, budget);
    }
    if (s.rfind("phici:", 0) == 0) return phi_ci(parse(s.substr(6), n, budget), budget);
    return parse(s, n, budget);
}

// polynomial argument: fractions are rejected
Polynomial poly_arg(const std::string& raw, int n, int budget, const char* verb) {
    RationalExpr e = parse_arg(raw, n, budget);
    if (!unit_denominator(e))
        throw DomainError(std::string(verb) + ": requires a polynomial, not a fraction");
    return e.num;
}

Scalar scalar_from_string(const std::string& raw) {
    std::string s = trimmed(raw);
    if ((s.rfind("t(", 0) == 0 || s.rfind("g(", 0) == 0) && s.back() == ')') {
        Rat m = rat_from_string(s.substr(2, s.size() - 3));
        return s[0] == 't' ? t(m) : g(m);
    }
    return t(rat_from_string(s));
}

std::vector<Scalar> parse_point(const std::string& raw, int n) {
    std::vector<Scalar> x;
    size_t start = 0;
    while (start <= raw.size()) {
        size_t comma = raw.find(',', start);
        std::string tok = raw.substr(start, comma == std::string::npos ? comma : comma - start);
        x.push_back(scalar_from_string(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(x.size()) != n)
        throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(n));
    return x;
}

json mono_to_json(const Monomial& m) {
    json j;
    j["constant"] = rat_to_string(m.coeff.magnitude);
    j["exponents"] = m.exps;
    return j;
}

json monos_to_json(const std::vector<Monomial>& ms) {
    json a = json::array();
    for (const Monomial& m : ms) a.push_back(mono_to_json(m));
    return a;
}

json cell_to_json(const Cell& c) {
    json jc;
    jc["eq"] = json::array();
    for (const Aff& f : c.eq) jc["eq"].push_back(aff_to_json(f));
    jc["ge"] = json::array();
    for (const Aff& f : c.ge) jc["ge"].push_back(aff_to_json(f));
    return jc;
}

void emit_complex(const CellComplex& k, const std::string& format) {
    if (format == "svg")
        std::cout << render_svg(k);
    else
        std::cout << complex_to_json(k).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact supertropical algebra toolkit"};
    app.get_formatter()->column_width(28);

    std::string verb;
    std::vector<std::string> args;
    int n = -1;
    std::string at, format = "json", alpha_str = "1";
    int budget = kDefaultBudget;

    app.add_option("verb", verb,
                   "eval|skel|corn|hat|phici|ci|regular|member|kop|decompose|wedge|"
                   "classify|dim|chain|polar|render")
        ->required();
    app.add_option("args", args, "expression arguments");
    app.add_option("-n", n, "number of variables")->required();
    app.add_option("--at", at, "evaluation point, e.g. \"t(2),t(2)\"");
    app.add_option("--format", format, "json|svg")->check(CLI::IsMember({"json", "svg"}));
    CLI::Option* budget_opt = app.add_option("--budget", budget, "monomial budget");
    app.add_option("--alpha", alpha_str, "bounding constant for <F>, a rational");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!*budget_opt) {
        if (const char* env = std::getenv("SKL_BUDGET")) {
            try {
                budget = std::stoi(env);
            } catch (const std::exception&) {
                std::cerr << "usage error: SKL_BUDGET is not an integer\n";
                return 2;
            }
        }
    }

    try {
        if (n < 0) throw UsageError("-n must be nonnegative");
        Scalar alpha = t(rat_from_string(alpha_str));
        (void)alpha;  // the <F> cap; accepted uniformly, used by kernel verbs

        auto need = [&](size_t k) {
            if (args.size() != k)
                throw UsageError(verb + " takes " + std::to_string(k) + " argument(s)");
        };
        auto expr = [&](size_t i) { return parse_arg(args.at(i), n, budget); };

        if (verb == "eval") {
            need(1);
            if (at.empty()) throw UsageError("eval requires --at");
            json out;
            out["value"] = to_string(evaluate(expr(0), parse_point(at, n)));
            std::cout << out.dump() << "\n";
        } else if (verb == "skel") {
            need(1);
            emit_complex(skel_complex(expr(0), budget), format);
        } else if (verb == "corn") {
            need(1);
            emit_complex(corn_complex(poly_arg(args[0], n, budget, "corn"), budget), format);
        } else if (verb == "hat") {
            need(1);
            json out;
            out["expr"] = to_string(hat(poly_arg(args[0], n, budget, "hat"), budget));
            std::cout << out.dump() << "\n";
        } else if (verb == "phici") {
            need(1);
            json out;
            out["expr"] = to_string(phi_ci(expr(0), budget));
            std::cout << out.dump() << "\n";
        } else if (verb == "ci") {
            need(1);
            json out;
            out["corner_internal"] = corner_internal(expr(0), budget);
            std::cout << out.dump() << "\n";
        } else if (verb == "regular") {
            need(1);
            json out;
            out["regular"] = regular(expr(0), budget);
            std::cout << out.dump() << "\n";
        } else if (verb == "member") {
            need(2);
            MemberResult r = member(expr(0), expr(1), budget);
            json out;
            out["member"] = r.member;
            if (r.member)
                out["witness_k"] = r.witness_k;
            else if (r.bad_cell)
                out["bad_cell"] = cell_to_json(*r.bad_cell);
            std::cout << out.dump() << "\n";
        } else if (verb == "kop") {
            if (args.empty()) throw UsageError("kop takes an operation and expressions");
            std::string op = args.front();
            args.erase(args.begin());
            json out;
            if (op == "product") {
                need(2);
                out["expr"] = to_string(kernel_product(expr(0), expr(1), budget));
            } else if (op == "intersection") {
                need(2);
                out["expr"] = to_string(kernel_intersection(expr(0), expr(1), budget));
            } else if (op == "omega") {
                need(1);
                out["expr"] = to_string(omega(expr(0), budget));
            } else {
                throw UsageError("kop operation must be product, intersection or omega");
            }
            std::cout << out.dump() << "\n";
        } else if (verb == "decompose") {
            need(1);
            json out;
            out["components"] = json::array();
            for (const HOComponent& c : ho_decompose(expr(0), budget)) {
                json jc;
                jc["kind"] =
                    c.kind == HOKind::hs_region ? "HSxRegion" : "BoundedBelowxRegion";
                jc["hs"] = monos_to_json(c.hs);
                jc["region"] = monos_to_json(c.region);
                jc["generator"] = to_string(c.generator);
                jc["full_pattern"] = c.full_pattern;
                if (c.skeleton_piece) jc["skeleton_piece"] = cell_to_json(*c.skeleton_piece);
                out["components"].push_back(std::move(jc));
            }
            std::cout << out.dump() << "\n";
        } else if (verb == "wedge") {
            need(1);
            json out;
            out["terms"] = json::array();
            for (const RationalExpr& u : wedge_decompose(expr(0), budget))
                out["terms"].push_back(to_string(u));
            std::cout << out.dump() << "\n";
        } else if (verb == "classify") {
            need(1);
            json out;
            out["kind"] = kind_name(classify(expr(0), budget));
            std::cout << out.dump() << "\n";
        } else if (verb == "dim") {
            json out;
            if (args.empty())
                out["condeg"] = condeg(n);
            else if (args.size() == 1)
                out["condeg"] = condeg(expr(0), budget);
            else if (args.size() == 2)
                out["quotient_condeg"] = quotient_condeg(expr(0), expr(1), budget);
            else
                throw UsageError("dim takes at most 2 arguments");
            std::cout << out.dump() << "\n";
        } else if (verb == "chain") {
            json out;
            std::vector<RationalExpr> chain;
            if (args.empty()) {
                out["hdim"] = hdim(n);
                chain = hdim_chain(n, budget);
            } else {
                need(1);
                chain = jh_chain(expr(0), budget);
            }
            out["length"] = chain.size();
            out["generators"] = json::array();
            for (const RationalExpr& g : chain) out["generators"].push_back(to_string(g));
            std::cout << out.dump() << "\n";
        } else if (verb == "polar") {
            need(2);
            json out;
            out["in_double_polar"] = in_double_polar(expr(0), expr(1), budget);
            out["orthogonal"] = orthogonal(expr(0), expr(1), budget);
            std::cout << out.dump() << "\n";
        } else if (verb == "render") {
            need(1);
            std::cout << render_svg(skel_complex(expr(0), budget));
        } else {
            throw UsageError("unknown verb '" + verb + "'");
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        json err;
        err["error"]["type"] = "parse";
        err["error"]["message"] = e.what();
        err["error"]["position"] = e.pos;
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        json err;
        err["error"]["type"] = "budget";
        err["error"]["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const DomainError& e) {
        json err;
        err["error"]["type"] = "domain";
        err["error"]["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}
