#include "dirichlet/csc_expansion.hpp"

#include <stdexcept>

namespace dirichlet {

CscExpansion next_order(const CscExpansion& e) {
    const long n = e.n;
    CscExpansion out;
    out.n = e.n + 1;
    out.coeffs.resize(static_cast<std::size_t>(out.n));
    const Rational scale(2 * n * (2 * n + 1));
    for (long k = 1; k <= out.n; ++k) {
        // 2n(2n+1) c_{n+1,k} = c_{n,k-1} (2k-2)(2k-1) - c_{n,k} (2k)^2
        Rational acc;
        if (k >= 2) acc += e.coeff(static_cast<int>(k - 1)) * Rational((2 * k - 2) * (2 * k - 1));
        if (k <= n) acc -= e.coeff(static_cast<int>(k)) * Rational(4 * k * k);
        out.coeffs[static_cast<std::size_t>(k - 1)] = acc / scale;
    }
    return out;
}

namespace {

std::vector<CscExpansion> build_table() {
    std::vector<CscExpansion> table;
    table.reserve(kMaxExpansionOrder);
    table.push_back(CscExpansion{1, {Rational(1)}});
    while (static_cast<int>(table.size()) < kMaxExpansionOrder)
        table.push_back(next_order(table.back()));
    return table;
}

}  // namespace

const CscExpansion& expand(int n) {
    if (n < 1 || n > kMaxExpansionOrder)
        throw std::out_of_range("unsupported order " + std::to_string(n) + " (expected 1.." +
                                std::to_string(kMaxExpansionOrder) + ")");
    static const std::vector<CscExpansion> table = build_table();
    return table[static_cast<std::size_t>(n - 1)];
}

}  // namespace dirichlet
