#pragma once

/**
 * @file quadrature.hpp
 * @brief Adaptive Gauss-Kronrod quadrature and the two direct oracles for the
 *        oscillatory integrals: truncation after whole periods with a tail
 *        bound, and paired half-period partial sums for int (sin x / x) f(x) dx.
 */

#include <functional>
#include <vector>

#include "dirichlet/periodic_fn.hpp"

namespace dirichlet {

struct NumericResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    // True when error_estimate adds a rigorous tail bound to the quadrature estimate.
    bool certified = false;
};

using Integrand = std::function<double(double)>;

inline constexpr double kMinTol = 1e-12;
inline constexpr double kMaxTol = 1e-3;
inline constexpr int kMaxQuadDepth = 40;

// Globally adaptive G7/K15 bisection on [a, b]. Stops when the summed panel
// estimates |K15 - G7| are <= tol; throws NonConvergence if a panel that
// still needs splitting sits at depth 40. tol must lie in [1e-12, 1e-3].
NumericResult finite_quad(const Integrand& g, double a, double b, double tol);

namespace detail {
// Same as finite_quad without the tolerance range check (for internally
// apportioned budgets that may fall below 1e-12).
NumericResult adaptive_gk(const Integrand& g, double a, double b, double tol);
}  // namespace detail

// sin(x)/x with the removable singularity filled in.
double sinc(double x);

// int_0^{periods pi} (sin x / x)^{2n} f(x) dx, one adaptive run per period,
// plus the tail bound B (periods pi)^{1-2n} / (2n-1), B = max |f| on a
// 4096-point grid over [0, pi).
NumericResult direct_oscillatory(int n, const FnExpr& f, long periods, double tol);

// Contributions of the paired half-period intervals around mu pi, mu = 1..pairs:
//   int_{(mu-1/2)pi}^{(mu+1/2)pi} (sin x / x) f(x) dx.
// Entry 0 is the leading interval [0, pi/2].
struct DirichletTerms {
    std::vector<double> terms;
    double quad_error = 0.0;
    long evaluations = 0;
};
DirichletTerms dirichlet_pair_terms(const FnExpr& f, long pairs);

// Partial sum of dirichlet_pair_terms; error_estimate = |last pair| plus
// summed quadrature estimates. Not certified.
NumericResult dirichlet_conditional(const FnExpr& f, long pairs);

}  // namespace dirichlet
