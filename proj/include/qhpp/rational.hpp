#pragma once

// Exact integers and rationals used throughout the library.
//
// BigInt is GMP's mpz_class. Rational is a thin value type over mpq_class
// that is always kept in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhpp {

using BigInt = mpz_class;

/// Raised when an operation is applied outside its mathematical domain
/// (empty continued fraction accessors, non-square roots, division by zero).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised on malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Exact square root when the value is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    struct Raw {};
    Rational(mpq_class v, Raw) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Exact integer square root if n is a perfect square (n >= 0).
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// True iff x is a positive integer that is a perfect square.
bool is_positive_square(const Rational& x);

BigInt parse_bigint(std::string_view text);

}  // namespace qhpp
