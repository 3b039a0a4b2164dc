#include "dirichlet/exact.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

namespace dirichlet {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        out = Rational(BigInt(std::string(p), 10), BigInt(std::string(q), 10));
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        BigInt digits(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        out = Rational(digits, scale);
    } else {
        if (!all_digits(body))
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        out = Rational(BigInt(std::string(body), 10));
    }
    return negative ? -out : out;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    return Rational::from_mpq(a.q_ / b.q_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_normalize(const BigInt& n, const BigInt& d) { return Rational(n, d); }

BigInt double_factorial(long n) {
    if (n < -1) throw std::domain_error("domain: double factorial of " + std::to_string(n));
    BigInt out = 1;
    if (n <= 0) return out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("domain: factorial of " + std::to_string(n));
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

double PiValue::to_double() const {
    // Goes through MPFR so huge numerators/denominators still round correctly.
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_q(x, x, coeff.mpq().get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

std::string PiValue::to_string() const {
    if (coeff.is_zero()) return "0";
    return coeff.to_string() + " * pi";
}

std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.to_string(); }

std::string pi_value_to_decimal(const PiValue& v, int digits) {
    if (digits < 1 || digits > kMaxDecimalDigits)
        throw std::invalid_argument("digits must lie in [1, " + std::to_string(kMaxDecimalDigits) +
                                    "], got " + std::to_string(digits));
    if (v.coeff.is_zero()) return "0." + std::string(static_cast<std::size_t>(digits), '0');

    // Significant digits needed: integer part of |coeff * pi| plus the requested
    // fraction, plus ten guard digits.
    const auto& q = v.coeff.mpq();
    const long int_digits = std::max<long>(
        1, static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10)) + 2);
    const long decimal_digits = int_digits + digits + 10;
    const auto bits = static_cast<mpfr_prec_t>(std::ceil(decimal_digits * std::numbers::ln10 /
                                                         std::numbers::ln2)) + 16;

    mpfr_t x;
    mpfr_init2(x, bits);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_q(x, x, q.get_mpq_t(), MPFR_RNDN);

    const int len = mpfr_snprintf(nullptr, 0, "%.*RNf", digits, x);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, x);
    mpfr_clear(x);

    std::string out(buf.data(), static_cast<std::size_t>(len));
    // A tiny negative value rounds to "-0.000..."; print it unsigned.
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

}  // namespace dirichlet
