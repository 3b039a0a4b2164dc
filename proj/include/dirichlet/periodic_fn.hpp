#pragma once

/**
 * @file periodic_fn.hpp
 * @brief The weight function f: parsing, evaluation, symmetry checks and
 *        recognition of polynomials in sin^2 x.
 *
 * Grammar (whitespace insignificant):
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := factor (('*' | '/') factor)*
 *     factor := '-' factor | atom ['^' uint]
 *     atom   := number | 'x' | 'pi' | ('sin' | 'cos' | 'abs') '(' expr ')' | '(' expr ')'
 *     number := digits ['.' digits] | digits '/' digits      (no spaces inside "p/q")
 *
 * so '^' binds tighter than unary minus: "-x^2" is -(x^2).
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/exact.hpp"

namespace dirichlet {

enum class Op : std::uint8_t { Number, Var, Pi, Neg, Sin, Cos, Abs, Add, Sub, Mul, Div, Pow };

class FnExpr {
public:
    struct Node {
        Op op;
        Rational value;          // Number
        unsigned exponent = 0;   // Pow
        std::shared_ptr<const Node> lhs;  // unary operand / left operand / base
        std::shared_ptr<const Node> rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;

    static FnExpr number(Rational v);
    static FnExpr var();
    static FnExpr pi();
    static FnExpr unary(Op op, const FnExpr& arg);
    static FnExpr binary(Op op, const FnExpr& l, const FnExpr& r);
    static FnExpr pow(const FnExpr& base, unsigned k);

    const Node& root() const { return *root_; }
    Op op() const { return root_->op; }

    // Prints in a form that parses back to the same tree.
    std::string to_string() const;

    friend bool operator==(const FnExpr& a, const FnExpr& b);

private:
    explicit FnExpr(NodePtr n) : root_(std::move(n)) {}
    NodePtr root_;
};

// Throws ParseError (with 0-based character position) on bad input.
FnExpr parse(std::string_view text);

// Throws EvalError("division by zero at x=...") when a denominator is below 1e-15 in magnitude.
double eval(const FnExpr& f, double x);

struct SymmetryReport {
    bool periodic_ok = false;    // f(x + pi) == f(x)
    bool reflection_ok = false;  // f(pi - x) == f(x)
    double max_violation = 0.0;
    int samples = 0;

    bool ok() const { return periodic_ok && reflection_ok; }
};

inline constexpr int kSymmetrySamples = 256;
inline constexpr double kSymmetryTol = 1e-9;

// Samples x_i = (i + 1/2) pi / samples, i = 0..samples-1. samples must be >= 8.
SymmetryReport check_symmetry(const FnExpr& f, int samples = kSymmetrySamples,
                              double tol = kSymmetryTol);

// If f is exactly sum_j a_j (sin^2 x)^j with rational a_j, returns a_0..a_d
// (trailing zeros trimmed, [0] for the zero function). Conservative: may
// return nullopt for functions that are such polynomials in disguise.
std::optional<std::vector<Rational>> as_sin_squared_polynomial(const FnExpr& f);

// Maximum of |f| on the grid (i + 1/2) pi / points, i < points.
double grid_sup_abs(const FnExpr& f, int points = 4096);

}  // namespace dirichlet
