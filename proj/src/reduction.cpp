#include "dirichlet/reduction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dirichlet/csc_expansion.hpp"
#include "dirichlet/errors.hpp"

namespace dirichlet {

PiValue wallis_integral(int j) {
    if (j < 0) throw std::domain_error("domain: Wallis index must be >= 0");
    return PiValue(Rational(double_factorial(2L * j - 1), 2 * double_factorial(2L * j)));
}

ReducedForm reduce_even(int n) {
    const CscExpansion& e = expand(n);
    ReducedForm out;
    out.n = n;
    // Ascending j = n - k, i.e. descending k.
    for (int k = n; k >= 1; --k) out.terms.push_back({n - k, e.coeff(k)});
    return out;
}

namespace {

void require_symmetric(const FnExpr& f) {
    const SymmetryReport r = check_symmetry(f);
    if (r.ok()) return;
    std::ostringstream msg;
    msg << "f = " << f.to_string() << " violates "
        << (!r.periodic_ok ? "f(x + pi) = f(x)" : "f(pi - x) = f(x)")
        << " (max violation " << r.max_violation << " over " << r.samples << " samples)";
    throw SymmetryError(msg.str());
}

void require_tol(double tol) {
    if (!(tol >= kMinTol && tol <= kMaxTol))
        throw std::invalid_argument("tol must lie in [1e-12, 1e-3]");
}

// int_0^{pi/2} sin^{2j} t f(t) dt
NumericResult sin_power_moment(int j, const FnExpr& f, double tol) {
    const Integrand g = [&](double t) {
        const double s = std::sin(t);
        double p = 1.0;
        for (int i = 0; i < j; ++i) p *= s * s;
        return p * eval(f, t);
    };
    return detail::adaptive_gk(g, 0.0, std::numbers::pi / 2, tol);
}

}  // namespace

PiValue integrate_even_exact(int n, const std::vector<Rational>& poly) {
    const ReducedForm form = reduce_even(n);
    PiValue total;
    for (const auto& term : form.terms) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i].is_zero()) continue;
            total += (term.weight * poly[i]) * wallis_integral(term.j + static_cast<int>(i));
        }
    }
    return total;
}

NumericResult integrate_even_numeric(int n, const FnExpr& f, double tol, bool check_hypotheses) {
    require_tol(tol);
    const ReducedForm form = reduce_even(n);
    if (check_hypotheses) require_symmetric(f);
    NumericResult out;
    for (const auto& term : form.terms) {
        const double w = term.weight.to_double();
        const double budget = tol / (static_cast<double>(form.terms.size()) * std::abs(w));
        const NumericResult r = sin_power_moment(term.j, f, budget);
        out.value += w * r.value;
        out.error_estimate += std::abs(w) * r.error_estimate;
        out.evaluations += r.evaluations;
    }
    return out;
}

PiValue integrate_odd_exact(int n, const std::vector<Rational>& poly) {
    if (n < 0) throw std::domain_error("domain: odd-power index must be >= 0");
    PiValue total;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (!poly[i].is_zero()) total += poly[i] * wallis_integral(n + static_cast<int>(i));
    return total;
}

NumericResult integrate_odd_numeric(int n, const FnExpr& f, double tol, bool check_hypotheses) {
    if (n < 0) throw std::domain_error("domain: odd-power index must be >= 0");
    require_tol(tol);
    if (check_hypotheses) require_symmetric(f);
    return sin_power_moment(n, f, tol);
}

IntegralResult integrate(int power, const FnExpr& f, const IntegralOptions& opts) {
    if (power < 1) throw std::invalid_argument("power must be a positive integer");
    require_tol(opts.tol);
    const bool even = power % 2 == 0;
    const int n = even ? power / 2 : (power - 1) / 2;

    IntegralResult out;
    if (even) {
        out.reduced = reduce_even(n);
    } else {
        out.reduced.n = n;
        out.reduced.terms.push_back({n, Rational(1)});
    }

    if (opts.check_hypotheses) require_symmetric(f);

    const auto poly = opts.force_numeric ? std::nullopt : as_sin_squared_polynomial(f);
    if (poly) {
        out.exact = even ? integrate_even_exact(n, *poly) : integrate_odd_exact(n, *poly);
        out.value = out.exact->to_double();
        out.error_estimate = 0.0;
        out.path = Path::Exact;
        return out;
    }
    const NumericResult r = even ? integrate_even_numeric(n, f, opts.tol, false)
                                 : integrate_odd_numeric(n, f, opts.tol, false);
    out.value = r.value;
    out.error_estimate = r.error_estimate;
    out.path = Path::Numeric;
    return out;
}

}  // namespace dirichlet
