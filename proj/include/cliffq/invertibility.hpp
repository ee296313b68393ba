#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cliffq/representations.hpp"
#include "cliffq/spacetime.hpp"

namespace cliffq {

// 2x2 quaternion-entry image of a Cl(1,3) multivector; the representation is
// a linear bijection, so every matrix corresponds to exactly one multivector.
struct QuaternionMatrix2 {
    Quaternion q11, q12, q21, q22;

    friend QuaternionMatrix2 operator*(const QuaternionMatrix2& a, const QuaternionMatrix2& b) {
        return {a.q11 * b.q11 + a.q12 * b.q21, a.q11 * b.q12 + a.q12 * b.q22,
                a.q21 * b.q11 + a.q22 * b.q21, a.q21 * b.q12 + a.q22 * b.q22};
    }
    friend bool operator==(const QuaternionMatrix2& a, const QuaternionMatrix2& b) {
        return a.q11 == b.q11 && a.q12 == b.q12 && a.q21 == b.q21 && a.q22 == b.q22;
    }
};

inline const Representation<Quaternion>& spacetime_quaternion_rep() {
    static const Representation<Quaternion> rep = std::get<Representation<Quaternion>>(
        build_representation(spacetime_signature(), "quaternion-2"));
    return rep;
}

inline QuaternionMatrix2 to_quaternion_matrix(const Multivector<Rational>& a) {
    Matrix<Quaternion> m = represent(spacetime_quaternion_rep(), a);
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

// Inverse of the representation map: blade images have disjoint unit entries,
// so coefficients are recovered by the componentwise pairing <image, M> / 2.
inline Multivector<Rational> from_quaternion_matrix(const QuaternionMatrix2& m) {
    const Representation<Quaternion>& rep = spacetime_quaternion_rep();
    auto dot4 = [](const Quaternion& a, const Quaternion& b) {
        return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
    };
    Multivector<Rational> out(spacetime_signature());
    const Quaternion entries[4] = {m.q11, m.q12, m.q21, m.q22};
    for (const auto& [blade, img] : rep.images) {
        const Quaternion imgs[4] = {img.at(0, 0), img.at(0, 1), img.at(1, 0), img.at(1, 1)};
        Rational coef(0);
        for (int i = 0; i < 4; ++i) coef += dot4(imgs[i], entries[i]);
        out.add_term(blade, coef / Rational(2));
    }
    return out;
}

// The 2x2 quaternion block determinant (non-negative, zero exactly on
// singular matrices):
//   |q11|^2 |q22 - q21 q11^-1 q12|^2          when q11 != 0
//   |q22|^2 |q11 - q12 q22^-1 q21|^2          when q11 = 0, q22 != 0
//   |q12|^2 |q21|^2                           when q11 = q22 = 0.
inline Rational block_det(const QuaternionMatrix2& m) {
    if (!m.q11.is_zero())
        return m.q11.norm_sq() * (m.q22 - m.q21 * m.q11.inverse() * m.q12).norm_sq();
    if (!m.q22.is_zero())
        return m.q22.norm_sq() * (m.q11 - m.q12 * m.q22.inverse() * m.q21).norm_sq();
    return m.q12.norm_sq() * m.q21.norm_sq();
}

inline Rational block_det(const Multivector<Rational>& a) {
    return block_det(to_quaternion_matrix(a));
}

// Why a multivector fails (or does not fail) to be invertible, together with
// the physically meaningful vanishing quantity.
struct NullClassification {
    enum class Kind { Invertible, NullVector, NullBivector, NullMixed };

    Kind kind = Kind::Invertible;
    Rational determinant;
    // Grade-1 witness: the interval x^2 (zero on the lightcone).
    std::optional<Rational> interval_sq;
    // Grade-2 witness: (|E|^2 - |B|^2, E.B), both zero for free fields.
    std::optional<std::pair<Rational, Rational>> field_witness;

    std::string kind_name() const {
        switch (kind) {
            case Kind::Invertible: return "invertible";
            case Kind::NullVector: return "null-vector";
            case Kind::NullBivector: return "null-bivector";
            default: return "null-mixed";
        }
    }
};

// The grade-2 element E1 e01 + E2 e02 + E3 e03 + B1 e23 + B2 e31 + B3 e12
// (e31 stored canonically as -e13).
inline Multivector<Rational> em_bivector(const std::array<Rational, 3>& e_field,
                                         const std::array<Rational, 3>& b_field) {
    Multivector<Rational> f(spacetime_signature());
    f.add_term(0b0011u, e_field[0]);   // e01
    f.add_term(0b0101u, e_field[1]);   // e02
    f.add_term(0b1001u, e_field[2]);   // e03
    f.add_term(0b1100u, b_field[0]);   // e23
    f.add_term(0b1010u, -b_field[1]);  // e31 = -e13
    f.add_term(0b0110u, b_field[2]);   // e12
    return f;
}

// Field components back out of a grade-2 element, in the same convention.
inline std::pair<std::array<Rational, 3>, std::array<Rational, 3>> em_components(
    const Multivector<Rational>& f) {
    return {{f.coef(0b0011u), f.coef(0b0101u), f.coef(0b1001u)},
            {f.coef(0b1100u), -f.coef(0b1010u), f.coef(0b0110u)}};
}

struct FreeFieldCheck {
    bool free = false;
    Rational e_sq_minus_b_sq;  // |E|^2 - |B|^2
    Rational e_dot_b;          // E.B
};

// A grade-2 element is singular exactly when its two pure-quaternion parts
// have equal norms and are orthogonal; in field terms |E| = |B| and E
// perpendicular to B, the free electromagnetic wave condition.
inline FreeFieldCheck is_free_field(const Multivector<Rational>& f,
                                    const ScalarDomain<Rational>& dom = {}) {
    if (!f.is_grade(2) || f.is_zero())
        throw std::invalid_argument("is_free_field: input must be a nonzero grade-2 element");
    auto [e, b] = em_components(f);
    FreeFieldCheck check;
    check.e_sq_minus_b_sq =
        e[0] * e[0] + e[1] * e[1] + e[2] * e[2] - (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    check.e_dot_b = e[0] * b[0] + e[1] * b[1] + e[2] * b[2];
    check.free = dom.is_zero(check.e_sq_minus_b_sq) && dom.is_zero(check.e_dot_b);
    return check;
}

inline NullClassification classify(const Multivector<Rational>& a) {
    NullClassification c;
    c.determinant = block_det(a);
    if (!c.determinant.is_zero()) {
        c.kind = NullClassification::Kind::Invertible;
        return c;
    }
    if (a.is_grade(1) || a.is_zero()) {
        c.kind = NullClassification::Kind::NullVector;
        c.interval_sq = (a * a).scalar_part();
    } else if (a.is_grade(2)) {
        c.kind = NullClassification::Kind::NullBivector;
        FreeFieldCheck fc = is_free_field(a);
        c.field_witness = std::make_pair(fc.e_sq_minus_b_sq, fc.e_dot_b);
    } else {
        c.kind = NullClassification::Kind::NullMixed;
    }
    return c;
}

// Lightcone test for a grade-1 element; covers the potential case
// phi^2 = |A|^2 as the vanishing of the same interval.
inline NullClassification classify_vector(const Multivector<Rational>& x) {
    if (!x.is_grade(1) && !x.is_zero())
        throw std::invalid_argument("classify_vector: input must be grade-1");
    NullClassification c;
    c.determinant = block_det(x);
    c.interval_sq = (x * x).scalar_part();
    c.kind = c.interval_sq->is_zero() ? NullClassification::Kind::NullVector
                                      : NullClassification::Kind::Invertible;
    return c;
}

struct InvertOutcome {
    std::optional<Multivector<Rational>> inverse;  // engaged iff invertible
    NullClassification classification;
};

// Exact inverse through the quaternion block formulas, pivoting on whichever
// diagonal entry is nonzero; the anti-diagonal closed form covers the
// remaining case. Singular inputs yield a classification, not an error.
inline InvertOutcome invert(const Multivector<Rational>& a) {
    InvertOutcome out;
    out.classification = classify(a);
    if (out.classification.kind != NullClassification::Kind::Invertible) return out;

    QuaternionMatrix2 m = to_quaternion_matrix(a);
    QuaternionMatrix2 w;
    if (!m.q11.is_zero() && !m.q22.is_zero()) {
        Quaternion q11i = m.q11.inverse(), q22i = m.q22.inverse();
        Quaternion schur_neg = m.q21 * q11i * m.q12 - m.q22;  // -(q22 - q21 q11^-1 q12)
        w.q11 = (m.q11 - m.q12 * q22i * m.q21).inverse();
        w.q12 = q11i * m.q12 * schur_neg.inverse();
        w.q21 = schur_neg.inverse() * m.q21 * q11i;
        w.q22 = (-schur_neg).inverse();
    } else if (!m.q11.is_zero()) {
        Quaternion q11i = m.q11.inverse();
        Quaternion s = (m.q22 - m.q21 * q11i * m.q12).inverse();
        w.q11 = q11i + q11i * m.q12 * s * m.q21 * q11i;
        w.q12 = -(q11i * m.q12 * s);
        w.q21 = -(s * m.q21 * q11i);
        w.q22 = s;
    } else if (!m.q22.is_zero()) {
        Quaternion q22i = m.q22.inverse();
        Quaternion t = (m.q11 - m.q12 * q22i * m.q21).inverse();
        w.q11 = t;
        w.q12 = -(t * m.q12 * q22i);
        w.q21 = -(q22i * m.q21 * t);
        w.q22 = q22i + q22i * m.q21 * t * m.q12 * q22i;
    } else {
        w.q12 = m.q21.inverse();
        w.q21 = m.q12.inverse();
    }
    out.inverse = from_quaternion_matrix(w);
    return out;
}

}  // namespace cliffq
