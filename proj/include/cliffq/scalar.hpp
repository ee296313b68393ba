#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "cliffq/rational.hpp"

namespace cliffq {

// The scalar field the algebra is generic over. Two instantiations exist:
// Rational (exact mode, the default) and double (approximate mode, opt-in).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    // Engaged only for perfect rational squares; empty means Inexact.
    static std::optional<Rational> sqrt(const Rational& v) { return exact_sqrt(v); }
    static std::string to_string(const Rational& v) { return v.to_string(); }
    static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static std::optional<double> sqrt(double v) {
        if (v < 0) return std::nullopt;
        return std::sqrt(v);
    }
    static std::string to_string(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
    static double to_double(double v) { return v; }
};

// Comparison policy. In exact mode the tolerance is identically zero and
// equality is decidable; in approximate mode |a-b| <= tolerance.
template <class S>
struct ScalarDomain;

template <>
struct ScalarDomain<Rational> {
    static constexpr bool exact = true;
    bool equal(const Rational& a, const Rational& b) const { return a == b; }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
};

template <>
struct ScalarDomain<double> {
    static constexpr bool exact = false;
    double tolerance = 1e-12;
    bool equal(double a, double b) const { return std::fabs(a - b) <= tolerance; }
    bool is_zero(double a) const { return std::fabs(a) <= tolerance; }
};

}  // namespace cliffq
