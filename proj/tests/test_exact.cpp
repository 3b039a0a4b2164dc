#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dirichlet/exact.hpp"

using namespace dirichlet;

namespace {

// pi * 10^scale as an integer (truncated), via Machin's formula
// pi = 16 atan(1/5) - 4 atan(1/239) in fixed-point big integers. Independent
// of the MPFR path used by pi_value_to_decimal.
BigInt machin_pi_scaled(unsigned long scale) {
    const unsigned long guard = 20;
    BigInt unit;
    mpz_ui_pow_ui(unit.get_mpz_t(), 10, scale + guard);
    auto arctan_inv = [&](long x) {
        BigInt sum = 0;
        BigInt power = unit / x;  // unit / x^(2k+1)
        const long x2 = x * x;
        for (long k = 0; power != 0; ++k) {
            BigInt term = power / (2 * k + 1);
            if (k % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
            power /= x2;
        }
        return sum;
    };
    BigInt pi = 16 * arctan_inv(5) - 4 * arctan_inv(239);
    BigInt drop;
    mpz_ui_pow_ui(drop.get_mpz_t(), 10, guard);
    return pi / drop;
}

// Round-to-nearest decimal of q * pi with `digits` fractional digits, from the Machin oracle.
std::string oracle_decimal(const Rational& q, int digits) {
    const unsigned long scale = static_cast<unsigned long>(digits) + 30;
    const BigInt pi = machin_pi_scaled(scale);
    BigInt ten_scale;
    mpz_ui_pow_ui(ten_scale.get_mpz_t(), 10, scale);
    BigInt ten_digits;
    mpz_ui_pow_ui(ten_digits.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|q| * pi * 10^digits)
    BigInt num = abs(q.numerator()) * pi * ten_digits * 2 + q.denominator() * ten_scale;
    BigInt den = q.denominator() * ten_scale * 2;
    BigInt rounded = num / den;
    std::string s = rounded.get_str();
    if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (q.sign() < 0 && rounded != 0) s.insert(0, "-");
    return s;
}

Rational random_rational(std::mt19937_64& rng, long span = 1000) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rat_normalize canonical form") {
    CHECK(rat_normalize(2, 4).to_string() == "1/2");
    CHECK(rat_normalize(-3, -6).to_string() == "1/2");
    const Rational z = rat_normalize(0, 5);
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(rat_normalize(6, -4).to_string() == "-3/2");
    CHECK_THROWS_WITH_AS(rat_normalize(1, 0), "zero denominator", std::domain_error);
}

TEST_CASE("Rational::parse") {
    CHECK(Rational::parse("12.375") == Rational(99, 8));
    CHECK(Rational::parse("-2/6") == Rational(-1, 3));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0.0125") == Rational(1, 80));
    CHECK(Rational::parse("017/010") == Rational(17, 10));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("Rational field axioms hold in canonical form") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        for (const Rational& r : {a + b, a * c, a - c}) {
            CHECK(r.denominator() > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("double_factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);

    for (long n = 1; n <= 60; ++n) {
        BigInt two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        CHECK(double_factorial(2 * n) == two_n * factorial(n));
        CHECK(double_factorial(2 * n - 1) * double_factorial(2 * n) == factorial(2 * n));
    }
}

TEST_CASE("PiValue text form") {
    CHECK(PiValue(Rational(11, 40)).to_string() == "11/40 * pi");
    CHECK(PiValue(Rational(0)).to_string() == "0");
    CHECK(PiValue(Rational(-3)).to_string() == "-3 * pi");
    CHECK(PiValue(Rational(1, 3)) == PiValue(Rational(2, 6)));
}

TEST_CASE("pi_value_to_decimal examples") {
    // Frozen from the Machin oracle.
    CHECK(oracle_decimal(Rational(1, 3), 10) == "1.0471975512");
    CHECK(oracle_decimal(Rational(11, 40), 8) == "0.86393798");

    CHECK(pi_value_to_decimal(PiValue(Rational(0)), 10) == "0.0000000000");
    CHECK(pi_value_to_decimal(PiValue(Rational(1, 3)), 10) == "1.0471975512");
    CHECK(pi_value_to_decimal(PiValue(Rational(11, 40)), 8) == "0.86393798");
    CHECK_THROWS_AS(pi_value_to_decimal(PiValue(Rational(1)), 0), std::invalid_argument);
    CHECK_THROWS_AS(pi_value_to_decimal(PiValue(Rational(1)), 1001), std::invalid_argument);
}

TEST_CASE("pi_value_to_decimal agrees with the Machin oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> digits(1, 200);
    for (int i = 0; i < 200; ++i) {
        const Rational q = random_rational(rng, 100000);
        const int d = digits(rng);
        const std::string oracle = oracle_decimal(q, d);
        const std::string got = pi_value_to_decimal(PiValue(q), d);
        if (oracle.find_first_not_of("-0.") == std::string::npos) {
            CHECK(got.find_first_not_of("0.") == std::string::npos);
        } else {
            CHECK(got == oracle);
        }
    }
    // Long expansion of pi itself.
    CHECK(pi_value_to_decimal(PiValue(Rational(1)), 1000) == oracle_decimal(Rational(1), 1000));
}

TEST_CASE("pi_value_to_decimal round trip at 15 digits") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rational q = random_rational(rng, 1000000);
        const double parsed = std::stod(pi_value_to_decimal(PiValue(q), 15));
        const double expected = q.to_double() * std::numbers::pi;
        CHECK(std::abs(parsed - expected) <= 1e-15 + 4e-16 * std::abs(expected));
    }
}
