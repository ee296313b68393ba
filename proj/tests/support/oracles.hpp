#pragma once

// Independent reference implementations used only by tests. Each one takes a
// different route than the library so agreement is meaningful evidence.

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "cliffq/multivector.hpp"
#include "cliffq/quaternion.hpp"
#include "cliffq/repmatrix.hpp"
#include "cliffq/rotor.hpp"

namespace oracle {

using cliffq::Blade;
using cliffq::Multivector;
using cliffq::Quaternion;
using cliffq::Rational;
using cliffq::Signature;

// --- Free product on explicit index lists -------------------------------
// Concatenate, bubble-sort counting transpositions, then contract adjacent
// repeats with the metric sign. No bit tricks anywhere.

struct ListProduct {
    std::vector<int> indices;  // ascending, distinct
    int sign;
};

inline ListProduct naive_blade_product(const Signature& sig, std::vector<int> a,
                                       const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                sign = -sign;
                moved = true;
            }
        }
    }
    bool contracted = true;
    while (contracted) {
        contracted = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] == a[i + 1]) {
                sign *= sig.generator_sign(a[i]);
                a.erase(a.begin() + i, a.begin() + i + 2);
                contracted = true;
                break;
            }
        }
    }
    return {a, sign};
}

inline std::vector<int> blade_to_indices(Blade b) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (b & (Blade(1) << i)) out.push_back(i);
    return out;
}

inline Blade indices_to_blade(const std::vector<int>& idx) {
    Blade b = 0;
    for (int i : idx) b |= Blade(1) << i;
    return b;
}

// --- Quaternion rotation matrix ------------------------------------------
// Exact 3x3 rotation matrix of an (unnormalized) quaternion, and the
// component map from a Cl(0,3) even versor to that quaternion.

using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline Mat3 rotation_matrix(const Quaternion& q) {
    Rational n = q.norm_sq();
    const Rational &w = q.w, &x = q.x, &y = q.y, &z = q.z;
    Rational two(2);
    Mat3 m{{{(w * w + x * x - y * y - z * z) / n, two * (x * y - w * z) / n,
             two * (x * z + w * y) / n},
            {two * (x * y + w * z) / n, (w * w - x * x + y * y - z * z) / n,
             two * (y * z - w * x) / n},
            {two * (x * z - w * y) / n, two * (y * z + w * x) / n,
             (w * w - x * x - y * y + z * z) / n}}};
    return m;
}

inline Quaternion versor_to_quaternion(const Multivector<Rational>& versor) {
    return Quaternion(versor.coef(0), versor.coef(0b110u), -versor.coef(0b101u),
                      versor.coef(0b011u));
}

inline std::array<Rational, 3> apply_matrix(const Mat3& m, const std::array<Rational, 3>& v) {
    std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r] += m[r][c] * v[c];
    return out;
}

inline std::array<Rational, 3> vector_components(const Multivector<Rational>& v) {
    return {v.coef(0b001u), v.coef(0b010u), v.coef(0b100u)};
}

// --- Closed-form x-aligned velocity transformation ------------------------

struct FlatEvent {
    Rational ct, x, y, z;
};

inline FlatEvent closed_form_x_boost(const Rational& beta, const Rational& gamma,
                                     const FlatEvent& e) {
    return {gamma * (e.ct - beta * e.x), gamma * (e.x - beta * e.ct), e.y, e.z};
}

// --- Fraction-free elimination --------------------------------------------
// One-step Bareiss over arbitrary-precision integers with row pivoting.
// Every interior division is exact by the minor identity; this is checked.

struct EliminationResult {
    int rank = 0;
    mpz_class det;  // for square inputs; 0 when rank-deficient
};

inline EliminationResult bareiss(std::vector<std::vector<mpz_class>> m) {
    EliminationResult res;
    if (m.empty()) return res;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int sign = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (q * prev != num) throw std::logic_error("bareiss: inexact division");
                m[i][j] = q;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    res.rank = r;
    if (rows == cols) res.det = (r == rows) ? mpz_class(sign * prev) : mpz_class(0);
    return res;
}

// Clears denominators row by row, eliminates, and undoes the scaling.
struct RationalElimination {
    int rank;
    Rational det;
};

inline RationalElimination eliminate(const cliffq::RationalMatrix& m) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    mpz_class scale = 1;
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            mpz_class v = m.at(r, c).num() * (l / m.at(r, c).den());
            z[r][c] = v;
        }
        scale *= l;
    }
    EliminationResult e = bareiss(std::move(z));
    return {e.rank, cliffq::reduce(e.det, scale)};
}

// --- Seeded random data ----------------------------------------------------

inline Rational rand_rational(std::mt19937_64& rng, int num_range = 4, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return cliffq::reduce(num(rng), den(rng));
}

inline Multivector<Rational> rand_vector(const Signature& sig, std::mt19937_64& rng) {
    Multivector<Rational> v(sig);
    for (int slot = 0; slot < sig.n(); ++slot) v.add_term(Blade(1) << slot, rand_rational(rng));
    return v;
}

inline Multivector<Rational> rand_multivector(const Signature& sig, std::mt19937_64& rng,
                                              int num_range = 2, int den_range = 3) {
    Multivector<Rational> m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b)
        m.add_term(b, rand_rational(rng, num_range, den_range));
    return m;
}

// Any rational quaternion with nonzero norm is an exact rotation operator.
inline cliffq::Rotor<Rational> rand_rotor3(const Signature& sig, std::mt19937_64& rng) {
    while (true) {
        Multivector<Rational> v(sig);
        v.add_term(0, rand_rational(rng));
        v.add_term(0b011u, rand_rational(rng));
        v.add_term(0b101u, rand_rational(rng));
        v.add_term(0b110u, rand_rational(rng));
        if (v.is_zero()) continue;
        return cliffq::Rotor<Rational>(v);
    }
}

}  // namespace oracle
