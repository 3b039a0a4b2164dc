#pragma once

/**
 * @file csc_expansion.hpp
 * @brief Cosecant-power expansion of the two-sided lattice sum
 *
 *     S_n(a) = sum_{m in Z} 1 / (a + m pi)^{2n} = sum_{k=1}^{n} c_{n,k} csc^{2k}(a).
 *
 * The coefficients come from S_{n+1} = S_n'' / (2n (2n + 1)) and
 *
 *     d^2/da^2 csc^{2k} a = 2k (2k + 1) csc^{2k+2} a - (2k)^2 csc^{2k} a,
 *
 * starting from S_1 = csc^2. The evaluators are templates on the scalar type
 * so the same code runs in double and in multiprecision.
 */

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/exact.hpp"

namespace dirichlet {

inline constexpr int kMaxExpansionOrder = 64;
inline constexpr double kPoleGuard = 1e-9;

struct CscExpansion {
    int n = 0;
    // coeffs[k - 1] multiplies csc^{2k}; coeffs.back() is always 1.
    std::vector<Rational> coeffs;

    const Rational& coeff(int k) const { return coeffs.at(static_cast<std::size_t>(k - 1)); }
};

// Exact coefficients for 1 <= n <= 64; throws std::out_of_range("unsupported order") otherwise.
// Results are memoized in a table built once on first use.
const CscExpansion& expand(int n);

// One step of the recurrence: coefficients of S_{n+1} from those of S_n.
CscExpansion next_order(const CscExpansion& e);

namespace detail {

// Rational -> scalar. Works for double and for any type constructible from a decimal string.
template <class Real>
Real to_real(const Rational& q) {
    if constexpr (std::is_same_v<Real, double>) {
        return q.to_double();
    } else {
        return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
    }
}

template <class Real>
Real pi_constant() {
    if constexpr (std::is_floating_point_v<Real>) {
        return std::numbers::pi_v<Real>;
    } else {
        using std::acos;
        return acos(Real(-1));
    }
}

template <class Real>
void guard_open_period(const Real& alpha) {
    using std::abs;
    const Real pi = pi_constant<Real>();
    if (abs(alpha) <= Real(kPoleGuard) || abs(alpha - pi) <= Real(kPoleGuard))
        throw PoleError("alpha within 1e-9 of a multiple of pi");
    if (!(alpha > Real(0) && alpha < pi)) throw std::domain_error("alpha must lie in (0, pi)");
}

}  // namespace detail

// sum_{m=-M}^{M} (alpha + m pi)^{-2n}, accumulated m = 0, 1, -1, 2, -2, ...
template <class Real>
Real lattice_sum_truncated(const Real& alpha, int n, long M) {
    if (n < 1) throw std::invalid_argument("lattice sum order must be >= 1");
    if (M < 1) throw std::invalid_argument("lattice sum needs M >= 1");
    detail::guard_open_period(alpha);
    const Real pi = detail::pi_constant<Real>();
    auto term = [&](long m) {
        Real d = alpha + Real(m) * pi;
        Real d2 = d * d;
        Real p = Real(1);
        for (int i = 0; i < n; ++i) p *= d2;
        return Real(1) / p;
    };
    // Neumaier-compensated, accumulated outward from m = 0.
    Real sum = term(0);
    Real carry = Real(0);
    auto accumulate = [&](const Real& v) {
        using std::abs;
        const Real t = sum + v;
        if (abs(sum) >= abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    };
    for (long m = 1; m <= M; ++m) {
        accumulate(term(m));
        accumulate(term(-m));
    }
    sum += carry;
    return sum;
}

// sum_k c_k csc^{2k}(alpha)
template <class Real>
Real eval_expansion(const CscExpansion& e, const Real& alpha) {
    detail::guard_open_period(alpha);
    using std::sin;
    const Real s = sin(alpha);
    const Real csc2 = Real(1) / (s * s);
    // Horner in csc^2: csc^2 (c_1 + csc^2 (c_2 + ...)).
    Real acc = Real(0);
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it)
        acc = acc * csc2 + detail::to_real<Real>(*it);
    return acc * csc2;
}

}  // namespace dirichlet
