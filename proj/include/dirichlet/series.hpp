#pragma once

// Truncated evaluators for the partial-fraction series of csc and the
// product factorization of 1 - sin x / sin alpha.

namespace dirichlet {

struct TruncationReport {
    double value = 0.0;
    long terms_used = 1;
    double tail_bound = 0.0;  // absolute
};

// 1/alpha + sum_{m=1}^{M} (-1)^m (1/(alpha - m pi) + 1/(alpha + m pi)).
// tail_bound is the alternating-series remainder |t_{M+1}|.
TruncationReport csc_partial_fraction(double alpha, long M);

// 1/alpha + sum_{m=1}^{M} [1/((2m-1)pi - alpha) - 1/((2m-1)pi + alpha)
//                         + 1/(2m pi + alpha) - 1/(2m pi - alpha)].
TruncationReport csc_four_term_series(double alpha, long M);

// (1 - x/alpha) prod_{m=1}^{M} (1 - x/((2m-1)pi - alpha)) (1 + x/((2m-1)pi + alpha))
//                              (1 - x/(2m pi + alpha)) (1 + x/(2m pi - alpha)).
// The tail bound is a heuristic estimate, not a guarantee.
TruncationReport sine_deficiency_product(double x, double alpha, long M);

}  // namespace dirichlet
