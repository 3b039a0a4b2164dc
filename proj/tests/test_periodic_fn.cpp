#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/periodic_fn.hpp"

using namespace dirichlet;

namespace {

constexpr double pi = std::numbers::pi;

// Grammar-valid expressions used by the round-trip and property checks.
const std::vector<std::string> kCorpus = {
    "1",
    "sin(x)^2",
    "cos(x)^2",
    "abs(cos(x))",
    "sin(x)",
    "x",
    "pi",
    "1/3",
    "0.25 + sin(x)^2",
    "-x^2",
    "(-x)^2",
    "2*-sin(x)^4",
    "sin(x)^2 * cos(x)^2",
    "(sin(x)*cos(x))^2",
    "1 - 2*cos(x)^2 + cos(x)^4",
    "abs(sin(x))",
    "abs(sin(x)^2)",
    "sin(x)^2/3",
    "(1 + sin(x)^2)/(2 + cos(x)^2)",
    "cos(2*x)",
    "sin(x)^6 - 3/7*sin(x)^4",
    "((x))",
    "abs(sin(x))^3 + 1",
    "cos(x)^2 - sin(x)^2",
    "1 / 2",
    "sin(x + pi)^2",
};

// Symmetric, division-safe members of the corpus that the detector must reduce exactly.
const std::vector<std::string> kPolynomialCorpus = {
    "1",
    "cos(x)^2",
    "sin(x)^2",
    "0.25 + sin(x)^2",
    "2*-sin(x)^4",
    "sin(x)^2 * cos(x)^2",
    "(sin(x)*cos(x))^2",
    "1 - 2*cos(x)^2 + cos(x)^4",
    "abs(sin(x)^2)",
    "sin(x)^2/3",
    "sin(x)^6 - 3/7*sin(x)^4",
    "cos(x)^2 - sin(x)^2",
    "(3*sin(x)^2 - 1)^3",
};

double eval_poly(const std::vector<Rational>& a, double x) {
    const double s2 = std::sin(x) * std::sin(x);
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * s2 + it->to_double();
    return acc;
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(parse("1") == FnExpr::number(Rational(1)));
    CHECK(parse("sin(x)^2") == FnExpr::pow(FnExpr::unary(Op::Sin, FnExpr::var()), 2));
    try {
        parse("sin(x^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("parse precedence and literals") {
    const FnExpr x = FnExpr::var();
    // '^' binds tighter than unary minus.
    CHECK(parse("-x^2") == FnExpr::unary(Op::Neg, FnExpr::pow(x, 2)));
    CHECK(parse("(-x)^2") == FnExpr::pow(FnExpr::unary(Op::Neg, x), 2));
    CHECK(parse("1 + 2 * x") ==
          FnExpr::binary(Op::Add, FnExpr::number(Rational(1)), FnExpr::binary(Op::Mul, FnExpr::number(Rational(2)), x)));
    CHECK(parse("1 - x - x") ==
          FnExpr::binary(Op::Sub, FnExpr::binary(Op::Sub, FnExpr::number(Rational(1)), x), x));
    CHECK(parse("1/3") == FnExpr::number(Rational(1, 3)));
    CHECK(parse("1 / 3") == FnExpr::binary(Op::Div, FnExpr::number(Rational(1)), FnExpr::number(Rational(3))));
    CHECK(parse("x^2/3") == FnExpr::binary(Op::Div, FnExpr::pow(x, 2), FnExpr::number(Rational(3))));
    CHECK(parse("0.125") == FnExpr::number(Rational(1, 8)));
    CHECK(parse("010/3") == FnExpr::number(Rational(10, 3)));
    CHECK(parse("  sin ( x ) ") == FnExpr::unary(Op::Sin, x));
}

TEST_CASE("parse errors") {
    auto position_of = [](const std::string& text) -> long {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("x^1.5") == 2);
    CHECK(position_of("x^-1") == 2);
    CHECK(position_of("tan(x)") == 0);
    CHECK(position_of("1 + y") == 4);
    CHECK(position_of("sin x") == 4);
    CHECK(position_of("x)") == 1);
    CHECK(position_of("1 +") == 3);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("1/0") == 0);
    CHECK_THROWS_WITH_AS(parse("tan(x)"), doctest::Contains("unknown identifier"), ParseError);
    CHECK_THROWS_WITH_AS(parse("x^1.5"), doctest::Contains("non-integer exponent"), ParseError);
    CHECK_THROWS_WITH_AS(parse("x^-2"), doctest::Contains("negative exponent"), ParseError);
}

TEST_CASE("print/parse round trip over the corpus") {
    REQUIRE(kCorpus.size() >= 20);
    for (const auto& s : kCorpus) {
        const FnExpr e = parse(s);
        CHECK_MESSAGE(parse(e.to_string()) == e, s << " -> " << e.to_string());
    }
}

TEST_CASE("eval examples") {
    CHECK(eval(parse("sin(x)^2"), pi / 2) == doctest::Approx(1.0));
    CHECK(eval(parse("1"), 17.3) == 1.0);
    CHECK(eval(parse("cos(x)^2"), pi) == doctest::Approx(1.0));
    CHECK(eval(parse("-x^2"), 3.0) == -9.0);
    CHECK(eval(parse("abs(x - 5)"), 2.0) == 3.0);
    CHECK(eval(parse("pi"), 0.0) == pi);
    try {
        eval(parse("1/(x - 2)"), 2.0);
        FAIL("expected division error");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("division by zero at x=2") != std::string::npos);
        CHECK(e.x() == 2.0);
    }
}

TEST_CASE("check_symmetry examples") {
    auto r = check_symmetry(parse("sin(x)^2"));
    CHECK(r.periodic_ok);
    CHECK(r.reflection_ok);
    CHECK(r.samples == 256);
    CHECK(r.max_violation <= 1e-9);

    r = check_symmetry(parse("sin(x)"));
    CHECK_FALSE(r.periodic_ok);
    CHECK(r.max_violation > 1.0);

    r = check_symmetry(parse("cos(x)^2"));
    CHECK(r.ok());

    // Periodic but not reflection-symmetric.
    r = check_symmetry(parse("sin(x)*cos(x)"));
    CHECK(r.periodic_ok);
    CHECK_FALSE(r.reflection_ok);

    CHECK(check_symmetry(parse("abs(cos(x))")).ok());
    CHECK_THROWS_AS(check_symmetry(parse("1"), 4), std::invalid_argument);
    CHECK_THROWS_AS(check_symmetry(parse("1/(x - x)"), 256), EvalError);
}

TEST_CASE("as_sin_squared_polynomial examples") {
    CHECK(*as_sin_squared_polynomial(parse("1")) == std::vector<Rational>{Rational(1)});
    CHECK(*as_sin_squared_polynomial(parse("cos(x)^2")) == std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK_FALSE(as_sin_squared_polynomial(parse("abs(cos(x))")).has_value());
    CHECK(*as_sin_squared_polynomial(parse("(sin(x)*cos(x))^2")) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(-1)});
    CHECK_FALSE(as_sin_squared_polynomial(parse("sin(x)")).has_value());
    CHECK_FALSE(as_sin_squared_polynomial(parse("cos(x)")).has_value());
    CHECK_FALSE(as_sin_squared_polynomial(parse("x")).has_value());
    CHECK_FALSE(as_sin_squared_polynomial(parse("pi")).has_value());
    CHECK_FALSE(as_sin_squared_polynomial(parse("1/sin(x)^2")).has_value());
    CHECK_FALSE(as_sin_squared_polynomial(parse("sin(x + pi)^2")).has_value());
    CHECK(*as_sin_squared_polynomial(parse("sin(x)^2 - sin(x)^2")) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("detector soundness and symmetry consistency") {
    for (const auto& s : kPolynomialCorpus) {
        const FnExpr f = parse(s);
        const auto poly = as_sin_squared_polynomial(f);
        REQUIRE_MESSAGE(poly.has_value(), s);
        for (int i = 0; i < 64; ++i) {
            const double x = -7.0 + 0.23 * i;
            CHECK_MESSAGE(std::abs(eval(f, x) - eval_poly(*poly, x)) <= 1e-12, s << " at x = " << x);
        }
        CHECK_MESSAGE(check_symmetry(f).ok(), s);
    }
    // Every corpus entry the detector accepts must satisfy the same checks.
    for (const auto& s : kCorpus) {
        const FnExpr f = parse(s);
        if (auto poly = as_sin_squared_polynomial(f)) {
            for (int i = 0; i < 64; ++i) {
                const double x = 0.1 + 0.17 * i;
                CHECK(std::abs(eval(f, x) - eval_poly(*poly, x)) <= 1e-12);
            }
            CHECK_MESSAGE(check_symmetry(f).ok(), s);
        }
    }
}

TEST_CASE("grid_sup_abs") {
    CHECK(grid_sup_abs(parse("3")) == 3.0);
    CHECK(grid_sup_abs(parse("cos(x)^2")) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(grid_sup_abs(parse("cos(x)^2")) <= 1.0);
}
