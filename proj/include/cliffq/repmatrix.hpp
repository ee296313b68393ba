#pragma once

#include <stdexcept>
#include <vector>

#include "cliffq/quaternion.hpp"

namespace cliffq {

// Dense square-ish matrix over an exact ring (Rational, CRational or
// Quaternion entries).
template <class R>
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, R(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int r, int c) { return e_[r * cols_ + c]; }
    const R& at(int r, int c) const { return e_[r * cols_ + c]; }

    bool is_zero() const {
        for (const R& v : e_)
            if (!(v == R(0))) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                for (int j = 0; j < b.cols_; ++j) m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
        return m;
    }

    // Scaling by a rational coefficient (all three rings support it).
    friend Matrix operator*(const Matrix& a, const Rational& s) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] * s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<R> e_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<CRational>;
using QuaternionMatrix = Matrix<Quaternion>;

template <class R>
Matrix<R> make_matrix(int rows, int cols, std::initializer_list<R> entries) {
    Matrix<R> m(rows, cols);
    int i = 0;
    for (const R& v : entries) {
        m.at(i / cols, i % cols) = v;
        ++i;
    }
    return m;
}

inline CRational det2(const ComplexMatrix& m) {
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

// 2x2 complex image of a quaternion: [[w+xi, y+zi], [-y+zi, w-xi]].
// A ring homomorphism with det = |q|^2.
inline ComplexMatrix quaternion_to_complex2(const Quaternion& q) {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = {q.w, q.x};
    m.at(0, 1) = {q.y, q.z};
    m.at(1, 0) = {-q.y, q.z};
    m.at(1, 1) = {q.w, -q.x};
    return m;
}

// 4x4 real image of a quaternion, 1 -> I and the three printed unit blocks
// i -> [[0,I2],[-I2,0]], j -> [[0,n],[n,0]], k -> [[n,0],[0,-n]] with
// n = [[0,1],[-1,0]].
inline RationalMatrix quaternion_to_real4(const Quaternion& q) {
    RationalMatrix m(4, 4);
    const Rational& w = q.w;
    const Rational& x = q.x;
    const Rational& y = q.y;
    const Rational& z = q.z;
    Rational row0[4] = {w, z, x, y};
    Rational row1[4] = {-z, w, -y, x};
    Rational row2[4] = {-x, y, w, -z};
    Rational row3[4] = {-y, -x, z, w};
    const Rational* rows[4] = {row0, row1, row2, row3};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

// Interleaved realification (re, im per slot) of a complex matrix; each entry
// a+bi becomes the 2x2 block [[a, b], [-b, a]].
inline RationalMatrix complex_to_real(const ComplexMatrix& m) {
    RationalMatrix out(2 * m.rows(), 2 * m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const CRational& v = m.at(r, c);
            out.at(2 * r, 2 * c) = v.re;
            out.at(2 * r, 2 * c + 1) = v.im;
            out.at(2 * r + 1, 2 * c) = -v.im;
            out.at(2 * r + 1, 2 * c + 1) = v.re;
        }
    }
    return out;
}

// Blockwise realification of a quaternionic matrix through the complex
// embedding; used as the exact 8x8 route for 2x2 quaternion matrices.
inline RationalMatrix quaternion_matrix_to_real(const QuaternionMatrix& m) {
    ComplexMatrix c(2 * m.rows(), 2 * m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int col = 0; col < m.cols(); ++col) {
            ComplexMatrix block = quaternion_to_complex2(m.at(r, col));
            for (int br = 0; br < 2; ++br)
                for (int bc = 0; bc < 2; ++bc) c.at(2 * r + br, 2 * col + bc) = block.at(br, bc);
        }
    }
    return complex_to_real(c);
}

}  // namespace cliffq
