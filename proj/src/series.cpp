#include "dirichlet/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dirichlet/csc_expansion.hpp"
#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

constexpr double pi = std::numbers::pi;

void check_terms(long M) {
    if (M < 1) throw std::invalid_argument("series needs at least one term (M >= 1)");
}

// Grouped term t_m = (-1)^m * 2 alpha / (alpha^2 - m^2 pi^2) of the csc series.
double csc_term(double alpha, long m) {
    const double mp = static_cast<double>(m) * pi;
    const double mag = 2.0 * alpha / ((mp - alpha) * (mp + alpha));
    return (m % 2 == 1) ? mag : -mag;
}

}  // namespace

TruncationReport csc_partial_fraction(double alpha, long M) {
    check_terms(M);
    detail::guard_open_period(alpha);
    double sum = 1.0 / alpha;
    for (long m = 1; m <= M; ++m) sum += csc_term(alpha, m);
    return {sum, M, std::abs(csc_term(alpha, M + 1))};
}

TruncationReport csc_four_term_series(double alpha, long M) {
    check_terms(M);
    detail::guard_open_period(alpha);
    double sum = 1.0 / alpha;
    for (long m = 1; m <= M; ++m) {
        const double odd = static_cast<double>(2 * m - 1) * pi;
        const double even = static_cast<double>(2 * m) * pi;
        sum += 1.0 / (odd - alpha) - 1.0 / (odd + alpha) + 1.0 / (even + alpha) - 1.0 / (even - alpha);
    }
    // Each group is two consecutive terms of the alternating series, so the
    // remainder after M groups is bounded by the next single term.
    return {sum, M, std::abs(csc_term(alpha, 2 * M + 1))};
}

TruncationReport sine_deficiency_product(double x, double alpha, long M) {
    check_terms(M);
    auto factor = [&](double denom) {
        if (std::abs(denom) <= kPoleGuard)
            throw PoleError("product factor denominator within 1e-9 of zero");
        return 1.0 - x / denom;
    };
    double value = factor(alpha);
    double last_group = 1.0;
    for (long m = 1; m <= M; ++m) {
        const double odd = static_cast<double>(2 * m - 1) * pi;
        const double even = static_cast<double>(2 * m) * pi;
        last_group = factor(odd - alpha) * factor(-(odd + alpha)) * factor(even + alpha) *
                     factor(-(even - alpha));
        value *= last_group;
    }
    // Group deviations decay like 1/m^2, so the neglected tail is roughly M times the last one.
    const double md = static_cast<double>(M);
    const double tail = 2.0 * md * std::abs(last_group - 1.0) * std::abs(value) +
                        4.0 * md * std::numeric_limits<double>::epsilon() * std::abs(value);
    return {value, M, tail};
}

}  // namespace dirichlet
