#include "dirichlet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirichlet/csc_expansion.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/exact.hpp"
#include "dirichlet/periodic_fn.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/reduction.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr const char* kSignNote =
    "c_{2,1} = -2/3: the lattice-sum identity for n = 2 is csc^4 - (2/3) csc^2; the variant "
    "printed with +2/3 contradicts int_0^inf sin^4(x)/x^4 dx = pi/3";

struct Settings {
    bool json = false;
    int digits = 15;
};

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

bool mentions_x(const FnExpr::Node& n) {
    if (n.op == Op::Var) return true;
    if (n.lhs && mentions_x(*n.lhs)) return true;
    return n.rhs && mentions_x(*n.rhs);
}

// Real-valued flag that may be written as an expression in pi, e.g. "pi/3".
double constant_arg(const std::string& name, const std::string& text) {
    FnExpr e = [&] {
        try {
            return parse(text);
        } catch (const ParseError& ex) {
            throw UsageError("--" + name + ": " + ex.what());
        }
    }();
    if (mentions_x(e.root())) throw UsageError("--" + name + " must be a constant expression");
    return eval(e, 0.0);
}

FnExpr weight_arg(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& ex) {
        throw UsageError(std::string("--f: ") + ex.what());
    }
}

json reduced_json(const ReducedForm& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"j", t.j}, {"weight", t.weight.to_string()}});
    return terms;
}

std::string reduced_text(const ReducedForm& r) {
    std::string s;
    for (const auto& t : r.terms) {
        if (!s.empty()) s += t.weight.sign() < 0 ? " - " : " + ";
        else if (t.weight.sign() < 0) s += "-";
        s += "(" + t.weight.abs().to_string() + ") W" + std::to_string(t.j);
    }
    return s + "   where Wj = int_0^{pi/2} sin^{2j}(t) f(t) dt";
}

void emit(std::ostream& out, const Settings& s, const std::string& command, const json& inputs,
          const json& result, const std::vector<std::string>& warnings,
          const std::function<void(std::ostream&)>& human) {
    if (s.json) {
        json env;
        env["command"] = command;
        env["inputs"] = inputs;
        env["result"] = result;
        env["warnings"] = warnings;
        out << env.dump(2) << "\n";
        return;
    }
    human(out);
    for (const auto& w : warnings) out << "note: " << w << "\n";
}

// --- subcommands -----------------------------------------------------------

void cmd_coeffs(std::ostream& out, const Settings& s, int n) {
    const CscExpansion& e = expand(n);
    json coeffs = json::array();
    for (int k = 1; k <= e.n; ++k) coeffs.push_back({{"k", k}, {"c", e.coeff(k).to_string()}});
    std::vector<std::string> warnings;
    if (n == 2) warnings.emplace_back(kSignNote);
    emit(out, s, "coeffs", {{"n", n}}, {{"n", n}, {"coeffs", coeffs}}, warnings, [&](std::ostream& os) {
        os << "sum_m 1/(a + m pi)^" << 2 * n << " = sum_k c_k csc^{2k}(a), n = " << n << "\n";
        for (int k = 1; k <= e.n; ++k) os << "  k = " << k << "  c = " << e.coeff(k) << "\n";
    });
}

void cmd_wallis(std::ostream& out, const Settings& s, int j) {
    const PiValue w = wallis_integral(j);
    const std::string dec = pi_value_to_decimal(w, s.digits);
    emit(out, s, "wallis", {{"j", j}},
         {{"j", j}, {"exact", w.to_string()}, {"value", w.to_double()}, {"decimal", dec}}, {},
         [&](std::ostream& os) {
             os << "int_0^{pi/2} sin^" << 2 * j << "(t) dt = " << w << "\n";
             os << "                      ~= " << dec << "\n";
         });
}

struct IntegralArgs {
    std::optional<int> power;
    std::optional<int> odd_power;
    std::string f;
    bool numeric = false;
    bool unchecked = false;
    double tol = 1e-10;
};

int resolve_power(const IntegralArgs& a) {
    if (a.power && a.odd_power) throw UsageError("give either --power or --odd-power, not both");
    if (!a.power && !a.odd_power) throw UsageError("--power is required");
    if (a.odd_power) {
        if (*a.odd_power < 1 || *a.odd_power % 2 == 0)
            throw UsageError("--odd-power must be an odd positive integer 2n+1");
        return *a.odd_power;
    }
    if (*a.power < 1)
        throw UsageError(
            "--power must be a positive integer: supported are sin^{2n}(x)/x^{2n} (even) and "
            "sin^{2n+1}(x)/x (odd)");
    return *a.power;
}

void cmd_integral(std::ostream& out, const Settings& s, const IntegralArgs& a) {
    const int power = resolve_power(a);
    const FnExpr f = weight_arg(a.f);
    IntegralOptions opts;
    opts.tol = a.tol;
    opts.force_numeric = a.numeric;
    opts.check_hypotheses = !a.unchecked;
    const IntegralResult r = integrate(power, f, opts);

    std::vector<std::string> warnings;
    if (power == 4) warnings.emplace_back(kSignNote);
    if (a.unchecked) warnings.emplace_back("symmetry hypotheses on f were not checked (--unchecked)");

    const bool even = power % 2 == 0;
    const std::string integrand = even ? "sin^" + std::to_string(power) + "(x)/x^" + std::to_string(power)
                                       : "sin^" + std::to_string(power) + "(x)/x";
    const std::string decimal =
        r.exact ? pi_value_to_decimal(*r.exact, s.digits) : fixed(r.value, s.digits);

    json inputs = {{"power", power}, {"f", a.f}, {"numeric", a.numeric}, {"tol", a.tol}};
    json result = {{"exact", r.exact ? json(r.exact->to_string()) : json(nullptr)},
                   {"value", r.value},
                   {"error_estimate", r.error_estimate},
                   {"path", to_string(r.path)},
                   {"reduced_form", reduced_json(r.reduced)},
                   {"decimal", decimal}};
    emit(out, s, "integral", inputs, result, warnings, [&](std::ostream& os) {
        os << "int_0^inf " << integrand << " * f(x) dx,  f(x) = " << f.to_string() << "\n";
        if (r.exact) os << "  = " << r.exact->to_string() << "\n";
        os << "  ~= " << decimal;
        if (!r.exact) os << "  (+/- " << sci(r.error_estimate) << ")";
        os << "\n";
        os << "path: " << to_string(r.path) << "\n";
        os << "reduced: " << reduced_text(r.reduced) << "\n";
    });
}

void cmd_table(std::ostream& out, const Settings& s, int max_n) {
    if (max_n < 1 || max_n > kMaxExpansionOrder)
        throw UsageError("--max-n must lie in [1, " + std::to_string(kMaxExpansionOrder) + "]");
    json rows = json::array();
    std::vector<std::pair<PiValue, std::string>> values;
    for (int n = 1; n <= max_n; ++n) {
        const PiValue v = integrate_even_exact(n, {Rational(1)});
        const std::string dec = pi_value_to_decimal(v, s.digits);
        rows.push_back({{"n", n}, {"power", 2 * n}, {"exact", v.to_string()}, {"decimal", dec}});
        values.emplace_back(v, dec);
    }
    emit(out, s, "table", {{"max_n", max_n}}, {{"rows", rows}}, {}, [&](std::ostream& os) {
        os << "int_0^inf sin^{2n}(x)/x^{2n} dx\n";
        for (int n = 1; n <= max_n; ++n) {
            const auto& [v, dec] = values[static_cast<std::size_t>(n - 1)];
            os << std::setw(4) << n << "  " << dec << "  " << v << "\n";
        }
    });
}

struct SeriesArgs {
    std::string kind;
    std::string alpha;
    std::optional<std::string> x;
    long terms = 0;
};

void cmd_series(std::ostream& out, const Settings& s, const SeriesArgs& a) {
    const double alpha = constant_arg("alpha", a.alpha);
    TruncationReport r;
    double reference = 0.0;
    if (a.kind == "product") {
        if (!a.x) throw UsageError("series product needs --x");
        const double x = constant_arg("x", *a.x);
        r = sine_deficiency_product(x, alpha, a.terms);
        reference = 1.0 - std::sin(x) / std::sin(alpha);
    } else {
        if (a.x) throw UsageError("--x only applies to 'series product'");
        r = a.kind == "csc" ? csc_partial_fraction(alpha, a.terms) : csc_four_term_series(alpha, a.terms);
        reference = 1.0 / std::sin(alpha);
    }
    json inputs = {{"kind", a.kind}, {"alpha", alpha}, {"terms", a.terms}};
    if (a.x) inputs["x"] = constant_arg("x", *a.x);
    json result = {{"value", r.value},
                   {"terms_used", r.terms_used},
                   {"tail_bound", r.tail_bound},
                   {"closed_form", reference},
                   {"difference", std::abs(r.value - reference)}};
    std::vector<std::string> warnings;
    if (a.kind == "product") warnings.emplace_back("product tail_bound is a heuristic estimate");
    emit(out, s, "series", inputs, result, warnings, [&](std::ostream& os) {
        os << "value:       " << fixed(r.value, s.digits) << "\n";
        os << "terms_used:  " << r.terms_used << "\n";
        os << "tail_bound:  " << sci(r.tail_bound) << "\n";
        os << "closed form: " << fixed(reference, s.digits) << "  (difference " << sci(std::abs(r.value - reference))
           << ")\n";
    });
}

struct VerifyArgs {
    int power = 0;
    std::string f;
    long periods = 1000;
    long pairs = 10000;
    double tol = 1e-10;
};

// Returns false when a consistency check fails.
bool cmd_verify(std::ostream& out, const Settings& s, const VerifyArgs& a) {
    if (a.power < 2 || a.power % 2 != 0)
        throw UsageError("verify supports even powers 2n only (sin^{2n}(x)/x^{2n})");
    const int n = a.power / 2;
    const FnExpr f = weight_arg(a.f);
    const SymmetryReport sym = check_symmetry(f);
    if (!sym.ok()) {
        std::ostringstream msg;
        msg << "f = " << f.to_string() << " fails the symmetry hypotheses (max violation "
            << sym.max_violation << ")";
        throw SymmetryError(msg.str());
    }

    const auto poly = as_sin_squared_polynomial(f);
    std::optional<PiValue> exact;
    if (poly) exact = integrate_even_exact(n, *poly);
    const NumericResult reduced = integrate_even_numeric(n, f, a.tol, false);
    const NumericResult direct = direct_oscillatory(n, f, a.periods, std::max(a.tol, 1e-8));

    struct Check {
        std::string name;
        double difference;
        double allowed;
        bool pass() const { return difference <= allowed; }
    };
    std::vector<Check> checks;
    const double reference = exact ? exact->to_double() : reduced.value;
    const double ref_err = exact ? 0.0 : reduced.error_estimate;
    if (exact)
        checks.push_back({"reduction numeric vs exact", std::abs(reduced.value - reference), 2 * a.tol});
    checks.push_back({std::string("direct truncation vs ") + (exact ? "exact" : "reduction numeric"),
                      std::abs(direct.value - reference), direct.error_estimate + ref_err});

    std::optional<NumericResult> conditional;
    if (n == 1) {
        conditional = dirichlet_conditional(f, a.pairs);
        checks.push_back({"paired sin(x)/x partial sums vs reference", std::abs(conditional->value - reference),
                          conditional->error_estimate + ref_err});
    }
    const bool consistent = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });

    auto numeric_json = [](const NumericResult& r) {
        return json{{"value", r.value},
                    {"error_estimate", r.error_estimate},
                    {"evaluations", r.evaluations},
                    {"certified", r.certified}};
    };
    json result;
    result["exact"] = exact ? json(exact->to_string()) : json(nullptr);
    result["reduction_numeric"] = numeric_json(reduced);
    result["direct"] = numeric_json(direct);
    result["direct"]["periods"] = a.periods;
    if (conditional) {
        result["dirichlet_conditional"] = numeric_json(*conditional);
        result["dirichlet_conditional"]["pairs"] = a.pairs;
    }
    json jchecks = json::array();
    for (const auto& c : checks)
        jchecks.push_back({{"name", c.name}, {"difference", c.difference}, {"allowed", c.allowed}, {"pass", c.pass()}});
    result["checks"] = jchecks;
    result["consistent"] = consistent;

    std::vector<std::string> warnings;
    if (a.power == 4) warnings.emplace_back(kSignNote);
    json inputs = {{"power", a.power}, {"f", a.f}, {"periods", a.periods}, {"tol", a.tol}};
    emit(out, s, "verify", inputs, result, warnings, [&](std::ostream& os) {
        os << "f(x) = " << f.to_string() << ", power " << a.power << "\n";
        if (exact) os << "exact:              " << *exact << " = " << pi_value_to_decimal(*exact, s.digits) << "\n";
        os << "reduction numeric:  " << fixed(reduced.value, s.digits) << "  (+/- " << sci(reduced.error_estimate)
           << ")\n";
        os << "direct (" << a.periods << " periods): " << fixed(direct.value, s.digits) << "  (+/- "
           << sci(direct.error_estimate) << ", certified)\n";
        if (conditional)
            os << "paired sin(x)/x:    " << fixed(conditional->value, s.digits) << "  (+/- "
               << sci(conditional->error_estimate) << ")\n";
        for (const auto& c : checks)
            os << (c.pass() ? "  [ok]   " : "  [FAIL] ") << c.name << ": |diff| = " << sci(c.difference)
               << " <= " << sci(c.allowed) << "\n";
        os << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    });
    return consistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Dirichlet-Lobachevsky integral calculator", "dirichlet"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_flag("--json", settings.json, "Emit a single JSON object");
    app.add_option("--digits", settings.digits, "Decimal digits after the point")
        ->check(CLI::Range(1, kMaxDecimalDigits));

    std::function<int()> action;

    auto* coeffs = app.add_subcommand("coeffs", "Cosecant-power coefficients c_{n,k}");
    int coeffs_n = 0;
    coeffs->add_option("n", coeffs_n, "Order n (half the power)")->required();
    coeffs->callback([&] { action = [&] { cmd_coeffs(out, settings, coeffs_n); return kExitOk; }; });

    auto* wallis = app.add_subcommand("wallis", "int_0^{pi/2} sin^{2j}(t) dt");
    int wallis_j = 0;
    wallis->add_option("j", wallis_j, "Index j >= 0")->required()->check(CLI::NonNegativeNumber);
    wallis->callback([&] { action = [&] { cmd_wallis(out, settings, wallis_j); return kExitOk; }; });

    auto* integral = app.add_subcommand("integral", "Evaluate int_0^inf sin^p(x)/x^q f(x) dx");
    IntegralArgs iargs;
    integral->add_option("--power", iargs.power, "Literal exponent of sin (even 2n or odd 2n+1)");
    integral->add_option("--odd-power", iargs.odd_power, "Odd exponent 2n+1 of sin^{2n+1}(x)/x");
    integral->add_option("--f", iargs.f, "Weight function f(x)")->required();
    integral->add_flag("--numeric", iargs.numeric, "Force the numeric path");
    integral->add_flag("--unchecked", iargs.unchecked, "Skip the symmetry check on f");
    integral->add_option("--tol", iargs.tol, "Absolute tolerance of the numeric path")
        ->check(CLI::Range(kMinTol, kMaxTol));
    integral->callback([&] { action = [&] { cmd_integral(out, settings, iargs); return kExitOk; }; });

    auto* table = app.add_subcommand("table", "Exact values of int_0^inf sin^{2n}(x)/x^{2n} dx");
    int max_n = 5;
    table->add_option("--max-n", max_n, "Largest n");
    table->callback([&] { action = [&] { cmd_table(out, settings, max_n); return kExitOk; }; });

    auto* series = app.add_subcommand("series", "Truncated csc series and sine product");
    SeriesArgs sargs;
    series->add_option("kind", sargs.kind, "csc | csc4 | product")
        ->required()
        ->check(CLI::IsMember({"csc", "csc4", "product"}));
    series->add_option("--alpha", sargs.alpha, "alpha in (0, pi); constants like pi/3 allowed")->required();
    series->add_option("--x", sargs.x, "x for the product");
    series->add_option("--terms", sargs.terms, "Number of terms M")->required()->check(CLI::PositiveNumber);
    series->callback([&] { action = [&] { cmd_series(out, settings, sargs); return kExitOk; }; });

    auto* verify = app.add_subcommand("verify", "Cross-check exact, reduction and direct evaluations");
    VerifyArgs vargs;
    verify->add_option("--power", vargs.power, "Even exponent 2n")->required();
    verify->add_option("--f", vargs.f, "Weight function f(x)")->required();
    verify->add_option("--periods", vargs.periods, "Periods for direct truncation")->check(CLI::Range(2L, 10000000L));
    verify->add_option("--pairs", vargs.pairs, "Half-period pairs (power 2 only)")->check(CLI::Range(10L, 10000000L));
    verify->add_option("--tol", vargs.tol, "Quadrature tolerance")->check(CLI::Range(kMinTol, kMaxTol));
    verify->callback([&] {
        action = [&] { return cmd_verify(out, settings, vargs) ? kExitOk : kExitCompute; };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    auto report = [&](const std::string& kind, const std::string& msg) {
        err << "error: " << msg << "\n";
        if (settings.json) {
            json env;
            env["command"] = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
            env["result"] = nullptr;
            env["error"] = {{"kind", kind}, {"message", msg}};
            out << env.dump(2) << "\n";
        }
    };
    try {
        return action ? action() : kExitUsage;
    } catch (const std::invalid_argument& e) {
        report("usage", e.what());
        return kExitUsage;
    } catch (const SymmetryError& e) {
        report("symmetry", e.what());
        return kExitCompute;
    } catch (const std::exception& e) {
        report("computation", e.what());
        return kExitCompute;
    }
}

}  // namespace dirichlet::cli
