#include "dirichlet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

// Kronrod abscissae; odd indices (and the centre) are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    double abs_value;
    int depth;

    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& g, double a, double b, int depth) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = g(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = g(centre - dx);
        const double f2 = g(centre + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half), depth};
}

constexpr long kMaxPanels = 1L << 20;

}  // namespace

namespace detail {

NumericResult adaptive_gk(const Integrand& g, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("quadrature needs a < b");
    std::priority_queue<Panel> panels;
    panels.push(gk15(g, a, b, 0));
    long evaluations = 15;
    double value = panels.top().value;
    double error = panels.top().error;
    double abs_value = panels.top().abs_value;

    // Below ~50 eps of the absolute integral the estimate is roundoff, not truncation.
    auto done = [&] {
        return error <= std::max(tol, 50.0 * std::numeric_limits<double>::epsilon() * abs_value);
    };
    while (!done()) {
        Panel worst = panels.top();
        if (worst.depth >= kMaxQuadDepth || static_cast<long>(panels.size()) >= kMaxPanels) {
            std::ostringstream msg;
            msg << "error estimate " << error << " > tol " << tol << " on [" << a << ", " << b
                << "] after depth " << kMaxQuadDepth;
            throw NonConvergence(msg.str());
        }
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(g, worst.a, mid, worst.depth + 1);
        Panel right = gk15(g, mid, worst.b, worst.depth + 1);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_value += left.abs_value + right.abs_value - worst.abs_value;
        panels.push(left);
        panels.push(right);
    }

    // Re-add in ascending x so the result does not depend on heap order.
    std::vector<Panel> ordered;
    ordered.reserve(panels.size());
    while (!panels.empty()) {
        ordered.push_back(panels.top());
        panels.pop();
    }
    std::sort(ordered.begin(), ordered.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    NumericResult out;
    for (const auto& p : ordered) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    out.evaluations = evaluations;
    return out;
}

}  // namespace detail

NumericResult finite_quad(const Integrand& g, double a, double b, double tol) {
    if (!(tol >= kMinTol && tol <= kMaxTol))
        throw std::invalid_argument("tol must lie in [1e-12, 1e-3]");
    return detail::adaptive_gk(g, a, b, tol);
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

NumericResult direct_oscillatory(int n, const FnExpr& f, long periods, double tol) {
    if (n < 1) throw std::invalid_argument("power index n must be >= 1");
    if (periods < 2) throw std::invalid_argument("direct_oscillatory needs at least 2 periods");
    if (!(tol >= kMinTol && tol <= kMaxTol))
        throw std::invalid_argument("tol must lie in [1e-12, 1e-3]");

    const Integrand integrand = [&](double x) {
        const double s = sinc(x);
        double p = 1.0;
        for (int i = 0; i < n; ++i) p *= s * s;
        return p * eval(f, x);
    };

    constexpr double pi = std::numbers::pi;
    const double panel_tol = tol / static_cast<double>(periods);
    NumericResult out;
    for (long k = 0; k < periods; ++k) {
        auto r = detail::adaptive_gk(integrand, k * pi, (k + 1) * pi, panel_tol);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
    }
    const double bound = grid_sup_abs(f, 4096);
    const double reach = static_cast<double>(periods) * pi;
    out.error_estimate += bound * std::pow(reach, 1 - 2 * n) / (2 * n - 1);
    out.evaluations += 4096;
    out.certified = true;
    return out;
}

DirichletTerms dirichlet_pair_terms(const FnExpr& f, long pairs) {
    if (pairs < 1) throw std::invalid_argument("need at least one pair");
    constexpr double half_pi = std::numbers::pi / 2;
    constexpr double piece_tol = 1e-14;
    const Integrand integrand = [&](double x) { return sinc(x) * eval(f, x); };

    DirichletTerms out;
    out.terms.reserve(static_cast<std::size_t>(pairs) + 1);
    auto piece = [&](long nu) {
        auto r = detail::adaptive_gk(integrand, nu * half_pi, (nu + 1) * half_pi, piece_tol);
        out.quad_error += r.error_estimate;
        out.evaluations += r.evaluations;
        return r.value;
    };
    out.terms.push_back(piece(0));
    for (long mu = 1; mu <= pairs; ++mu) {
        const double left = piece(2 * mu - 1);
        const double right = piece(2 * mu);
        out.terms.push_back(left + right);
    }
    return out;
}

NumericResult dirichlet_conditional(const FnExpr& f, long pairs) {
    if (pairs < 10) throw std::invalid_argument("dirichlet_conditional needs at least 10 pairs");
    auto t = dirichlet_pair_terms(f, pairs);
    NumericResult out;
    for (double term : t.terms) out.value += term;
    out.error_estimate = std::abs(t.terms.back()) + t.quad_error;
    out.evaluations = t.evaluations;
    out.certified = false;
    return out;
}

}  // namespace dirichlet
