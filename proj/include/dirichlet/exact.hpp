#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic: big rationals, double factorials, rational multiples of pi.
 *
 * Rational is always kept in canonical form: positive denominator,
 * coprime numerator and denominator, zero stored as 0/1. PiValue denotes
 * coeff * pi symbolically; pi only becomes a number when a PiValue is
 * rendered to decimal or converted to double.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dirichlet {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT: implicit from integers is intended
    Rational(const BigInt& n) : q_(n) {}  // NOLINT
    Rational(const BigInt& numerator, const BigInt& denominator);

    // Parses "p", "-p", "p/q" or a finite decimal "12.375".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    // "p/q", or "p" when q == 1.
    std::string to_string() const;

    Rational operator-() const { return from_mpq(-q_); }
    Rational abs() const { return from_mpq(::abs(q_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    const mpq_class& mpq() const { return q_; }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Canonical rational n/d. Throws std::domain_error("zero denominator") for d == 0.
Rational rat_normalize(const BigInt& n, const BigInt& d);

// n!! for n >= -1, with (-1)!! = 0!! = 1. Throws std::domain_error for n < -1.
BigInt double_factorial(long n);

BigInt factorial(long n);

// An exact value coeff * pi.
struct PiValue {
    Rational coeff;

    PiValue() = default;
    explicit PiValue(Rational c) : coeff(std::move(c)) {}

    double to_double() const;

    // "p/q * pi", "p * pi", or "0".
    std::string to_string() const;

    friend PiValue operator+(const PiValue& a, const PiValue& b) { return PiValue(a.coeff + b.coeff); }
    friend PiValue operator-(const PiValue& a, const PiValue& b) { return PiValue(a.coeff - b.coeff); }
    friend PiValue operator*(const Rational& s, const PiValue& v) { return PiValue(s * v.coeff); }
    PiValue& operator+=(const PiValue& b) {
        coeff += b.coeff;
        return *this;
    }

    friend bool operator==(const PiValue& a, const PiValue& b) { return a.coeff == b.coeff; }
};

std::ostream& operator<<(std::ostream& os, const PiValue& v);

inline constexpr int kMaxDecimalDigits = 1000;

// Decimal rendering of coeff * pi with exactly `digits` digits after the point,
// rounded to nearest. digits must lie in [1, 1000].
std::string pi_value_to_decimal(const PiValue& v, int digits);

}  // namespace dirichlet
