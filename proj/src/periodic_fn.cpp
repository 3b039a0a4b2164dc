#include "dirichlet/periodic_fn.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dirichlet/errors.hpp"

namespace dirichlet {

// ---------------------------------------------------------------------------
// Construction / printing

FnExpr FnExpr::number(Rational v) {
    return FnExpr(std::make_shared<Node>(Node{Op::Number, std::move(v), 0, nullptr, nullptr}));
}

FnExpr FnExpr::var() { return FnExpr(std::make_shared<Node>(Node{Op::Var, {}, 0, nullptr, nullptr})); }

FnExpr FnExpr::pi() { return FnExpr(std::make_shared<Node>(Node{Op::Pi, {}, 0, nullptr, nullptr})); }

FnExpr FnExpr::unary(Op op, const FnExpr& arg) {
    if (op != Op::Neg && op != Op::Sin && op != Op::Cos && op != Op::Abs)
        throw std::invalid_argument("not a unary operator");
    return FnExpr(std::make_shared<Node>(Node{op, {}, 0, arg.root_, nullptr}));
}

FnExpr FnExpr::binary(Op op, const FnExpr& l, const FnExpr& r) {
    if (op != Op::Add && op != Op::Sub && op != Op::Mul && op != Op::Div)
        throw std::invalid_argument("not a binary operator");
    return FnExpr(std::make_shared<Node>(Node{op, {}, 0, l.root_, r.root_}));
}

FnExpr FnExpr::pow(const FnExpr& base, unsigned k) {
    return FnExpr(std::make_shared<Node>(Node{Op::Pow, {}, k, base.root_, nullptr}));
}

namespace {

using Node = FnExpr::Node;

bool same_tree(const Node& a, const Node& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
        case Op::Number: return a.value == b.value;
        case Op::Var:
        case Op::Pi: return true;
        case Op::Pow: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
        case Op::Neg:
        case Op::Sin:
        case Op::Cos:
        case Op::Abs: return same_tree(*a.lhs, *b.lhs);
        default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
    }
}

void print(const Node& n, std::string& out) {
    switch (n.op) {
        case Op::Number:
            if (n.value.sign() < 0) {
                out += "(" + n.value.to_string() + ")";
            } else {
                out += n.value.to_string();
            }
            return;
        case Op::Var: out += "x"; return;
        case Op::Pi: out += "pi"; return;
        case Op::Neg:
            out += "-";
            print(*n.lhs, out);
            return;
        case Op::Sin:
        case Op::Cos:
        case Op::Abs:
            out += n.op == Op::Sin ? "sin(" : n.op == Op::Cos ? "cos(" : "abs(";
            print(*n.lhs, out);
            out += ")";
            return;
        case Op::Pow: {
            const bool wrap = n.lhs->op == Op::Neg || n.lhs->op == Op::Pow ||
                              (n.lhs->op == Op::Number && n.lhs->value.sign() < 0);
            if (wrap) out += "(";
            print(*n.lhs, out);
            if (wrap) out += ")";
            out += "^" + std::to_string(n.exponent);
            return;
        }
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div: {
            static constexpr const char* sym[] = {" + ", " - ", " * ", " / "};
            out += "(";
            print(*n.lhs, out);
            out += sym[static_cast<int>(n.op) - static_cast<int>(Op::Add)];
            print(*n.rhs, out);
            out += ")";
            return;
        }
    }
}

}  // namespace

std::string FnExpr::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

bool operator==(const FnExpr& a, const FnExpr& b) { return same_tree(*a.root_, *b.root_); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    FnExpr run() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty expression");
        FnExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == s_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    FnExpr expr() {
        FnExpr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = FnExpr::binary(Op::Add, lhs, term());
            } else if (accept('-')) {
                lhs = FnExpr::binary(Op::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    FnExpr term() {
        FnExpr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = FnExpr::binary(Op::Mul, lhs, factor());
            } else if (accept('/')) {
                lhs = FnExpr::binary(Op::Div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    FnExpr factor() {
        if (accept('-')) return FnExpr::unary(Op::Neg, factor());
        FnExpr base = atom();
        if (accept('^')) return FnExpr::pow(base, exponent());
        return base;
    }

    unsigned exponent() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') fail_at("negative exponent", at);
        auto d = digits();
        if (d.empty()) fail("expected nonnegative integer exponent");
        if (pos_ < s_.size() && s_[pos_] == '.') fail_at("non-integer exponent", at);
        if (d.size() > 9) fail_at("exponent too large", at);
        return static_cast<unsigned>(std::stoul(std::string(d)));
    }

    FnExpr atom() {
        skip_ws();
        if (pos_ == s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            FnExpr inner = expr();
            expect(')');
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    FnExpr number() {
        const std::size_t start = pos_;
        auto ip = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            auto fp = digits();
            if (ip.empty() && fp.empty()) fail_at("malformed number", start);
            return FnExpr::number(Rational::parse(s_.substr(start, pos_ - start)));
        }
        // "p/q" with no whitespace is a single rational literal.
        if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            digits();
            const auto text = s_.substr(start, pos_ - start);
            const auto slash = text.find('/');
            if (BigInt(std::string(text.substr(slash + 1)), 10) == 0)
                fail_at("zero denominator in rational literal", start);
            return FnExpr::number(Rational::parse(text));
        }
        return FnExpr::number(Rational::parse(ip));
    }

    FnExpr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        if (name == "x") return FnExpr::var();
        if (name == "pi") return FnExpr::pi();
        Op op;
        if (name == "sin") {
            op = Op::Sin;
        } else if (name == "cos") {
            op = Op::Cos;
        } else if (name == "abs") {
            op = Op::Abs;
        } else {
            fail_at("unknown identifier '" + std::string(name) + "'", start);
        }
        expect('(');
        FnExpr arg = expr();
        expect(')');
        return FnExpr::unary(op, arg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

FnExpr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr double kDivisionGuard = 1e-15;

double eval_node(const Node& n, double x) {
    switch (n.op) {
        case Op::Number: return n.value.to_double();
        case Op::Var: return x;
        case Op::Pi: return std::numbers::pi;
        case Op::Neg: return -eval_node(*n.lhs, x);
        case Op::Sin: return std::sin(eval_node(*n.lhs, x));
        case Op::Cos: return std::cos(eval_node(*n.lhs, x));
        case Op::Abs: return std::abs(eval_node(*n.lhs, x));
        case Op::Add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case Op::Sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case Op::Mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case Op::Div: {
            const double num = eval_node(*n.lhs, x);
            const double den = eval_node(*n.rhs, x);
            if (std::abs(den) < kDivisionGuard) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "division by zero at x=" << x;
                throw EvalError(msg.str(), x);
            }
            return num / den;
        }
        case Op::Pow: {
            const double b = eval_node(*n.lhs, x);
            double r = 1.0;
            double p = b;
            for (unsigned k = n.exponent; k != 0; k >>= 1) {
                if (k & 1U) r *= p;
                p *= p;
            }
            return r;
        }
    }
    return 0.0;
}

}  // namespace

double eval(const FnExpr& f, double x) { return eval_node(f.root(), x); }

// ---------------------------------------------------------------------------
// Symmetry

SymmetryReport check_symmetry(const FnExpr& f, int samples, double tol) {
    if (samples < 8) throw std::invalid_argument("symmetry check needs at least 8 samples");
    constexpr double pi = std::numbers::pi;
    double periodic = 0.0;
    double reflection = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = (i + 0.5) * pi / samples;
        const double fx = eval(f, x);
        periodic = std::max(periodic, std::abs(eval(f, x + pi) - fx));
        reflection = std::max(reflection, std::abs(eval(f, pi - x) - fx));
    }
    SymmetryReport r;
    r.periodic_ok = periodic <= tol;
    r.reflection_ok = reflection <= tol;
    r.max_violation = std::max(periodic, reflection);
    r.samples = samples;
    return r;
}

double grid_sup_abs(const FnExpr& f, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    double sup = 0.0;
    for (int i = 0; i < points; ++i)
        sup = std::max(sup, std::abs(eval(f, (i + 0.5) * std::numbers::pi / points)));
    return sup;
}

// ---------------------------------------------------------------------------
// sin^2 polynomial detection
//
// Subexpressions are rewritten into A(s) + cos(x) B(s), s = sin x, with rational
// coefficients, using cos^2 = 1 - s^2. f qualifies when B = 0 and A is even in s.

namespace {

using Poly = std::vector<Rational>;

constexpr std::size_t kMaxDegree = 512;

void trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    if (p.empty()) p.push_back(Rational(0));
}

Poly add(const Poly& a, const Poly& b, int sign = 1) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += sign > 0 ? b[i] : -b[i];
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

bool is_zero(const Poly& p) { return p.size() == 1 && p[0].is_zero(); }
bool is_constant(const Poly& p) { return p.size() == 1; }

struct TrigPoly {
    Poly a{Rational(0)};  // cos-free part
    Poly b{Rational(0)};  // coefficient of cos x

    std::size_t degree() const { return std::max(a.size(), b.size() + 1); }
};

TrigPoly tp_mul(const TrigPoly& x, const TrigPoly& y) {
    static const Poly one_minus_s2{Rational(1), Rational(0), Rational(-1)};
    TrigPoly r;
    r.a = add(mul(x.a, y.a), mul(one_minus_s2, mul(x.b, y.b)));
    r.b = add(mul(x.a, y.b), mul(x.b, y.a));
    return r;
}

std::optional<TrigPoly> rewrite(const Node& n) {
    switch (n.op) {
        case Op::Number: return TrigPoly{{n.value}, {Rational(0)}};
        case Op::Var:
        case Op::Pi: return std::nullopt;
        case Op::Sin:
        case Op::Cos:
            if (n.lhs->op != Op::Var) return std::nullopt;
            if (n.op == Op::Sin) return TrigPoly{{Rational(0), Rational(1)}, {Rational(0)}};
            return TrigPoly{{Rational(0)}, {Rational(1)}};
        case Op::Neg: {
            auto t = rewrite(*n.lhs);
            if (!t) return std::nullopt;
            return TrigPoly{add({Rational(0)}, t->a, -1), add({Rational(0)}, t->b, -1)};
        }
        case Op::Abs: {
            if (n.lhs->op == Op::Pow && n.lhs->exponent % 2 == 0) return rewrite(*n.lhs);
            auto t = rewrite(*n.lhs);
            if (t && is_zero(t->b) && is_constant(t->a)) return TrigPoly{{t->a[0].abs()}, {Rational(0)}};
            return std::nullopt;
        }
        case Op::Add:
        case Op::Sub: {
            auto l = rewrite(*n.lhs);
            auto r = l ? rewrite(*n.rhs) : std::nullopt;
            if (!r) return std::nullopt;
            const int sign = n.op == Op::Add ? 1 : -1;
            return TrigPoly{add(l->a, r->a, sign), add(l->b, r->b, sign)};
        }
        case Op::Mul: {
            auto l = rewrite(*n.lhs);
            auto r = l ? rewrite(*n.rhs) : std::nullopt;
            if (!r || l->degree() + r->degree() > kMaxDegree) return std::nullopt;
            return tp_mul(*l, *r);
        }
        case Op::Div: {
            auto l = rewrite(*n.lhs);
            auto r = l ? rewrite(*n.rhs) : std::nullopt;
            if (!r || !is_zero(r->b) || !is_constant(r->a) || r->a[0].is_zero()) return std::nullopt;
            const Poly inv{Rational(1) / r->a[0]};
            return TrigPoly{mul(l->a, inv), mul(l->b, inv)};
        }
        case Op::Pow: {
            auto base = rewrite(*n.lhs);
            if (!base) return std::nullopt;
            if (static_cast<std::size_t>(n.exponent) * base->degree() > kMaxDegree) return std::nullopt;
            TrigPoly result{{Rational(1)}, {Rational(0)}};
            TrigPoly p = *base;
            for (unsigned k = n.exponent; k != 0; k >>= 1) {
                if (k & 1U) result = tp_mul(result, p);
                if (k > 1) p = tp_mul(p, p);
            }
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> as_sin_squared_polynomial(const FnExpr& f) {
    auto t = rewrite(f.root());
    if (!t || !is_zero(t->b)) return std::nullopt;
    std::vector<Rational> out;
    for (std::size_t i = 0; i < t->a.size(); ++i) {
        if (i % 2 == 1) {
            if (!t->a[i].is_zero()) return std::nullopt;
            continue;
        }
        out.push_back(t->a[i]);
    }
    return out;
}

}  // namespace dirichlet
