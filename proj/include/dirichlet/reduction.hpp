#pragma once

/**
 * @file reduction.hpp
 * @brief Reduction of the infinite oscillatory integrals to finite ones.
 *
 * For f with f(x + pi) = f(x) and f(pi - x) = f(x), folding the half line
 * onto [0, pi/2] turns
 *
 *     int_0^inf (sin x / x)^{2n} f(x) dx  into  sum_{k=1}^{n} c_{n,k} int_0^{pi/2} sin^{2(n-k)} t f(t) dt
 *
 * with c_{n,k} the cosecant-power coefficients of the lattice sum, and
 *
 *     int_0^inf sin^{2n+1} x / x f(x) dx  into  int_0^{pi/2} sin^{2n} t f(t) dt.
 *
 * When f is a polynomial in sin^2 everything closes in Wallis integrals and
 * the result is an exact rational multiple of pi.
 */

#include <optional>
#include <string>
#include <vector>

#include "dirichlet/exact.hpp"
#include "dirichlet/periodic_fn.hpp"
#include "dirichlet/quadrature.hpp"

namespace dirichlet {

struct ReducedTerm {
    int j = 0;  // power of sin^2 t
    Rational weight;
};

// sum weight * int_0^{pi/2} sin^{2j} t f(t) dt, terms in ascending j.
struct ReducedForm {
    int n = 0;
    std::vector<ReducedTerm> terms;
};

// int_0^{pi/2} sin^{2j} t dt = (2j-1)!!/(2j)!! * pi/2.
PiValue wallis_integral(int j);

ReducedForm reduce_even(int n);

// Exact value of int_0^inf (sin x / x)^{2n} f(x) dx for f = sum_j poly[j] sin^{2j} x.
PiValue integrate_even_exact(int n, const std::vector<Rational>& poly);

// Numeric path: each reduced term is integrated with budget tol / (n |weight|),
// so the combined estimate is at most tol. tol must lie in [1e-12, 1e-3].
// Throws SymmetryError when f fails check_symmetry and check_hypotheses is set.
NumericResult integrate_even_numeric(int n, const FnExpr& f, double tol, bool check_hypotheses = true);

// int_0^inf sin^{2n+1} x / x * f(x) dx, n >= 0.
PiValue integrate_odd_exact(int n, const std::vector<Rational>& poly);
NumericResult integrate_odd_numeric(int n, const FnExpr& f, double tol, bool check_hypotheses = true);

enum class Path { Exact, Numeric };

inline const char* to_string(Path p) { return p == Path::Exact ? "exact" : "numeric"; }

struct IntegralResult {
    std::optional<PiValue> exact;
    double value = 0.0;
    double error_estimate = 0.0;
    Path path = Path::Numeric;
    ReducedForm reduced;
};

struct IntegralOptions {
    double tol = 1e-10;
    bool force_numeric = false;
    bool check_hypotheses = true;
};

// Picks the exact path whenever f is recognised as a sin^2 polynomial.
// power is the literal exponent of sin: even 2n gives the (sin x / x)^{2n}
// family, odd 2n+1 the sin^{2n+1} x / x family.
IntegralResult integrate(int power, const FnExpr& f, const IntegralOptions& opts = {});

}  // namespace dirichlet
