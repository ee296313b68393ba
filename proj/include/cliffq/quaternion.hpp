#pragma once

#include <string>

#include "cliffq/error.hpp"
#include "cliffq/rational.hpp"

namespace cliffq {

// Complex number over the rationals; keeps every representation in the
// catalogue exact.
struct CRational {
    Rational re, im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(int r) : re(r) {}

    static CRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CRational conj() const { return {re, -im}; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    CRational operator-() const { return {-re, -im}; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator*(const CRational& a, const Rational& s) { return {a.re * s, a.im * s}; }
    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

    std::string to_string() const {
        return re.to_string() + (im.is_negative() ? "-" : "+") + im.abs().to_string() + "i";
    }
};

// Hamilton quaternion over the rationals: i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quaternion(int s) : w(s) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_pure() const { return w.is_zero(); }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Rational norm_sq() const { return w * w + x * x + y * y + z * z; }

    Quaternion inverse() const {
        if (is_zero()) throw DomainError("quaternion-zero-inverse", "quaternion: inverse of zero");
        Rational n = norm_sq();
        return {w / n, -x / n, -y / n, -z / n};
    }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend Quaternion operator*(const Quaternion& a, const Rational& s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    // "w+xi+yj+zk" with sign-aware joins, e.g. "1-2i+0j+3/2k".
    std::string to_string() const {
        auto join = [](const Rational& r, const char* unit) {
            return std::string(r.is_negative() ? "-" : "+") + r.abs().to_string() + unit;
        };
        return w.to_string() + join(x, "i") + join(y, "j") + join(z, "k");
    }
};

inline Quaternion quaternion_product(const Quaternion& p, const Quaternion& q) { return p * q; }

// Sum of squared components; equals the determinant of the 2x2 complex
// embedding, and vanishes only at zero.
inline Rational quaternion_norm_sq(const Quaternion& q) { return q.norm_sq(); }

}  // namespace cliffq
