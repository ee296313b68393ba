#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cliffq {

// Arbitrary-precision rational, always in canonical reduced form:
// denominator > 0 and gcd(|num|, den) == 1. Equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v);

    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const;
    double to_double() const { return v_.get_d(); }

    // "n" when the denominator is 1, otherwise "n/d" with d > 0.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// Canonical reduced fraction n/d with positive denominator. d == 0 is rejected.
Rational reduce(const mpz_class& n, const mpz_class& d);
Rational reduce(long n, long d);

// Length ratio |CD|/|AB| when the short stick fits p times into AB and q
// times into CD. p must be >= 1; the result is |q|/p.
Rational measure_ratio(long stick_count_ab, long stick_count_cd);

// Exact square root: engaged only when numerator and denominator are both
// perfect squares, otherwise empty (the caller decides whether an
// approximation is acceptable). Negative input is rejected.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace cliffq
