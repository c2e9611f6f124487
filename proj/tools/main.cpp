// Command-line surface for the symmetric-polynomial toolkit.
//
// Exit codes: 0 success, 1 domain errors (asymmetric input, guard limits,
// negative verdicts of the boolean queries), 2 usage or syntax errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sympoly/sympoly.hpp"

using nlohmann::json;
using namespace sympoly;

namespace {

std::string slurp_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

// "-" means: read the expression from stdin.
std::string resolve_expr(const std::string& arg) { return arg == "-" ? slurp_stdin() : arg; }

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw SyntaxError(0, "empty entry in list");
        out.push_back(Rational::from_string(item.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw SyntaxError(0, "expected a comma-separated list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SyntaxError(0, "expected a comma-separated list of integers");
        }
    }
    if (out.empty()) throw SyntaxError(0, "expected a comma-separated list of integers");
    return out;
}

json metric_to_json(const StepMetric& metric) {
    if (const auto* m = std::get_if<Monomial>(&metric)) return print_monomial(*m);
    const auto& s = std::get<SpreadinessState>(metric);
    return json::array({s.max_spreadiness, s.count_at_max});
}

json trace_to_json(const DecompositionTrace& trace) {
    json steps = json::array();
    for (const TraceStep& step : trace.steps) {
        json j;
        j["selected"] = print_monomial(step.selected);
        j["coefficient"] = step.coefficient.str();
        j["sigma_exponent"] = step.sigma_exponent.exponents();
        j["metric_before"] = metric_to_json(step.metric_before);
        j["metric_after"] = step.metric_after ? metric_to_json(*step.metric_after) : json(nullptr);
        steps.push_back(std::move(j));
    }
    return steps;
}

std::string metric_to_text(const StepMetric& metric) {
    if (const auto* m = std::get_if<Monomial>(&metric)) return print_monomial(*m);
    const auto& s = std::get<SpreadinessState>(metric);
    return "(" + std::to_string(s.max_spreadiness) + ", " + std::to_string(s.count_at_max) + ")";
}

void print_trace_text(const DecompositionTrace& trace) {
    int i = 0;
    for (const TraceStep& step : trace.steps) {
        std::cout << "  step " << ++i << " [degree " << step.degree << "]: selected "
                  << step.coefficient.str() << " * " << print_monomial(step.selected)
                  << ", sigma exponent " << json(step.sigma_exponent.exponents()).dump()
                  << ", metric " << metric_to_text(step.metric_before) << " -> "
                  << (step.metric_after ? metric_to_text(*step.metric_after) : "done") << "\n";
    }
}

struct DecomposeArgs {
    std::string expr;
    std::optional<int> n;
    std::string algo = "lex";
    bool trace = false;
    bool json_out = false;
};

int run_decompose(const DecomposeArgs& args) {
    const std::string text = resolve_expr(args.expr);
    const Polynomial f = parse_poly(ExprSource{text, args.n});
    const int n = f.ambient_n();

    std::vector<std::pair<std::string, std::pair<SigmaPolynomial, DecompositionTrace>>> runs;
    if (args.algo == "lex" || args.algo == "both")
        runs.emplace_back("lex", decompose_lex(f));
    if (args.algo == "spread" || args.algo == "both")
        runs.emplace_back("spread", decompose_spreadiness(f));

    json out = json::array();
    for (const auto& [name, run] : runs) {
        const auto& [result, trace] = run;
        if (args.json_out) {
            json j;
            j["input"] = text;
            j["n"] = n;
            j["algorithm"] = name;
            j["result"] = print_sigma(result);
            j["trace"] = trace_to_json(trace);
            out.push_back(std::move(j));
        } else {
            if (args.trace) print_trace_text(trace);
            std::cout << print_sigma(result) << "\n";
        }
    }
    if (args.json_out) std::cout << (out.size() == 1 ? out[0].dump() : out.dump()) << "\n";

    if (runs.size() == 2 && !(runs[0].second.first == runs[1].second.first)) {
        std::cerr << "error: decompose.uniqueness: the two algorithms disagree\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric polynomial decomposition into elementary symmetric polynomials"};
    app.require_subcommand(1);

    // check-sym
    std::string cs_expr;
    std::optional<int> cs_n;
    auto* check_sym = app.add_subcommand("check-sym", "Test whether a polynomial is symmetric");
    check_sym->add_option("expr", cs_expr, "polynomial expression ('-' reads stdin)")->required();
    check_sym->add_option("-n,--vars", cs_n, "ambient variable count (default: inferred)");

    // decompose
    DecomposeArgs dec;
    auto* decompose = app.add_subcommand(
        "decompose", "Express a symmetric polynomial as a polynomial in s1..sn");
    decompose->add_option("expr", dec.expr, "polynomial expression ('-' reads stdin)")->required();
    decompose->add_option("-n,--vars", dec.n, "ambient variable count (default: inferred)");
    decompose->add_option("--algo", dec.algo, "algorithm: lex (default), spread, or both")
        ->check(CLI::IsMember({"lex", "spread", "both"}));
    decompose->add_flag("--trace", dec.trace, "show the per-step cancellation record");
    decompose->add_flag("--json", dec.json_out, "emit JSON (includes the full trace)");

    // expand
    std::string ex_expr;
    std::optional<int> ex_n;
    auto* expand = app.add_subcommand("expand", "Expand a polynomial in s1..sn back into x1..xn");
    expand->add_option("sigma-expr", ex_expr, "sigma expression ('-' reads stdin)")->required();
    expand->add_option("-n,--vars", ex_n, "ambient variable count (default: inferred)");

    // vieta
    std::optional<int> vi_n;
    std::string vi_roots;
    auto* vieta = app.add_subcommand(
        "vieta", "Monic polynomial with given roots, symbolically (-n) or numerically (--roots)");
    vieta->add_option("-n,--vars", vi_n, "print z^n - s1*z^(n-1) + ... symbolically");
    vieta->add_option("--roots", vi_roots, "comma-separated rational roots");

    // power-roots
    std::string pr_coeffs;
    int pr_m = 1;
    auto* power_roots = app.add_subcommand(
        "power-roots", "Monic polynomial whose roots are the m-th powers of the input's roots");
    power_roots
        ->add_option("--coeffs", pr_coeffs,
                     "coefficients after the implicit leading 1, degree-descending")
        ->required();
    power_roots->add_option("-m", pr_m, "power to raise the roots to")->required();

    // common-root
    std::string cr_f, cr_g;
    bool cr_value = false;
    auto* common = app.add_subcommand(
        "common-root", "Decide whether two polynomials share a root, without finding roots");
    common
        ->add_option("--f", cr_f, "monic polynomial: coefficients after the implicit leading 1")
        ->required();
    common->add_option("--g", cr_g, "second polynomial: full coefficient list")->required();
    common->add_flag("--value", cr_value, "also print the product of g over f's roots");

    // rational-decompose
    std::vector<std::string> rd_parts;
    std::optional<int> rd_n;
    auto* rational = app.add_subcommand(
        "rational-decompose", "Express a symmetric rational function as a quotient in s1..sn");
    rational->add_option("exprs", rd_parts, "numerator and denominator expressions (P / Q)")
        ->expected(2, 3);
    rational->add_option("-n,--vars", rd_n, "ambient variable count (default: inferred)");

    // lemma-check
    std::string lc_partition;
    int lc_guard = kDefaultLemmaDegreeGuard;
    auto* lemma = app.add_subcommand(
        "lemma-check",
        "Verify by full expansion that the maximum-spreadiness terms of the sigma-product "
        "of a partition are exactly the partition's conjugates");
    lemma->add_option("--partition", lc_partition, "weakly decreasing exponents, e.g. 5,2,2,1,0")
        ->required();
    lemma->add_option("--max-degree", lc_guard, "degree guard for the full expansion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check_sym->parsed()) {
            const Polynomial f = parse_poly(ExprSource{resolve_expr(cs_expr), cs_n});
            if (auto witness = find_asymmetry_witness(f)) {
                std::cout << "not symmetric\n"
                          << "witness: transposition (x" << witness->transposition << " x"
                          << witness->transposition + 1 << "), monomial "
                          << print_monomial(witness->monomial) << "\n";
                return 1;
            }
            std::cout << "symmetric\n";
            return 0;
        }
        if (decompose->parsed()) return run_decompose(dec);
        if (expand->parsed()) {
            const SigmaPolynomial g = parse_sigma(ExprSource{resolve_expr(ex_expr), ex_n});
            std::cout << print_poly(expand_sigma(g)) << "\n";
            return 0;
        }
        if (vieta->parsed()) {
            if (vi_n.has_value() == !vi_roots.empty()) {
                std::cerr << "error: cli.usage: vieta needs exactly one of -n or --roots\n";
                return 2;
            }
            if (vi_n) {
                const int n = *vi_n;
                if (n < 1) throw OutOfRangeError("vieta needs n >= 1");
                std::string line = n == 1 ? "z" : "z^" + std::to_string(n);
                for (const auto& [sign, e] : vieta_coefficients(n)) {
                    int k = 0;
                    while (e[k] == 0) ++k;
                    line += sign < 0 ? " - " : " + ";
                    line += "s" + std::to_string(k + 1);
                    const int zpow = n - (k + 1);
                    if (zpow >= 1) line += "*z";
                    if (zpow > 1) line += "^" + std::to_string(zpow);
                }
                std::cout << line << "\n";
            } else {
                std::cout << print_univariate(monic_from_roots(parse_rational_list(vi_roots)))
                          << "\n";
            }
            return 0;
        }
        if (power_roots->parsed()) {
            const MonicPoly f(parse_rational_list(pr_coeffs));
            const MonicPoly g = power_roots_transform(f, pr_m);
            std::cout << print_univariate(g.full_coefficients()) << "\n";
            return 0;
        }
        if (common->parsed()) {
            const MonicPoly f(parse_rational_list(cr_f));
            const std::vector<Rational> g = parse_rational_list(cr_g);
            const Rational r = resultant_vs_roots(f, g);
            if (cr_value) std::cout << "resultant: " << r.str() << "\n";
            std::cout << (r.is_zero() ? "common root: yes" : "common root: no") << "\n";
            return r.is_zero() ? 0 : 1;
        }
        if (rational->parsed()) {
            std::vector<std::string> parts = rd_parts;
            if (parts.size() == 3) {
                if (parts[1] != "/") {
                    std::cerr << "error: cli.usage: expected '<P> / <Q>'\n";
                    return 2;
                }
                parts.erase(parts.begin() + 1);
            }
            if (parts.size() != 2) {
                std::cerr << "error: cli.usage: expected numerator and denominator expressions\n";
                return 2;
            }
            // One shared ambient: the declared count, or the max inferred over
            // both parts.
            std::optional<int> n = rd_n;
            if (!n) {
                const Polynomial p0 = parse_poly(resolve_expr(parts[0]));
                const Polynomial q0 = parse_poly(resolve_expr(parts[1]));
                n = std::max(p0.ambient_n(), q0.ambient_n());
            }
            const Polynomial p = parse_poly(ExprSource{resolve_expr(parts[0]), n});
            const Polynomial q = parse_poly(ExprSource{resolve_expr(parts[1]), n});
            const SigmaRationalFunction result = decompose_rational(RationalFunction(p, q));
            std::cout << "(" << print_sigma(result.numerator()) << ") / ("
                      << print_sigma(result.denominator()) << ")\n";
            return 0;
        }
        if (lemma->parsed()) {
            const std::vector<int> partition = parse_int_list(lc_partition);
            if (verify_spreadiness_lemma(partition, lc_guard)) {
                std::cout << "lemma holds: maximum-spreadiness terms are exactly the "
                          << monomial_orbit(Monomial(partition)).size() << " conjugates of "
                          << print_monomial(Monomial(partition)) << "\n";
                return 0;
            }
            std::cout << "lemma VIOLATED for this partition\n";
            return 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.code() << " at offset " << e.offset() << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
