#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cliffq/scalar.hpp"
#include "cliffq/signature.hpp"

namespace cliffq {

// A sparse multivector: canonical blades mapped to scalars, no stored zero
// coefficients, all terms within one signature. Values are immutable in
// spirit; every operation returns a fresh value.
template <class S>
class Multivector {
public:
    using Terms = std::map<Blade, S, BladeLess>;

    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector zero(Signature sig) { return Multivector(sig); }

    static Multivector scalar(Signature sig, const S& value) {
        Multivector m(sig);
        m.add_term(kScalarBlade, value);
        return m;
    }

    static Multivector basis(Signature sig, Blade b, const S& coef = scalar_traits<S>::one()) {
        if (b >= sig.blade_count())
            throw std::invalid_argument("Multivector: blade outside signature");
        Multivector m(sig);
        m.add_term(b, coef);
        return m;
    }

    static Multivector generator(Signature sig, int slot) {
        return basis(sig, Blade(1) << slot);
    }

    // Grade-1 element from slot-ordered components.
    static Multivector vector(Signature sig, std::initializer_list<S> comps) {
        if (static_cast<int>(comps.size()) != sig.n())
            throw std::invalid_argument("Multivector: component count != n");
        Multivector m(sig);
        int slot = 0;
        for (const S& c : comps) m.add_term(Blade(1) << slot++, c);
        return m;
    }

    const Signature& signature() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coef(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? scalar_traits<S>::zero() : it->second;
    }

    S scalar_part() const { return coef(kScalarBlade); }

    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kScalarBlade); }

    bool is_grade(int k) const {
        for (const auto& [b, c] : terms_)
            if (blade_grade(b) != k) return false;
        return true;
    }

    bool is_vector() const { return !terms_.empty() && is_grade(1); }

    Multivector grade_part(int k) const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_)
            if (blade_grade(b) == k) out.add_term(b, c);
        return out;
    }

    bool even_grade_only() const {
        for (const auto& [b, c] : terms_)
            if (blade_grade(b) % 2 != 0) return false;
        return true;
    }

    Multivector operator-() const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_) out.add_term(b, -c);
        return out;
    }

    Multivector& operator+=(const Multivector& o) {
        check_signature(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    Multivector& operator-=(const Multivector& o) {
        check_signature(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

    Multivector operator*(const S& s) const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_) out.add_term(b, c * s);
        return out;
    }

    friend Multivector operator*(const S& s, const Multivector& m) { return m * s; }

    Multivector operator/(const S& s) const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_) out.add_term(b, c / s);
        return out;
    }

    // Geometric product: the bilinear term-wise expansion of blade products.
    Multivector operator*(const Multivector& o) const {
        check_signature(o);
        Multivector out(sig_);
        for (const auto& [ba, ca] : terms_) {
            for (const auto& [bb, cb] : o.terms_) {
                SignedBlade r = blade_product(sig_, ba, bb);
                S term = ca * cb;
                if (r.sign < 0) term = -term;
                out.add_term(r.blade, term);
            }
        }
        return out;
    }

    // Reversion: each blade picks up (-1)^{k(k-1)/2}; an anti-automorphism.
    Multivector reverse() const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_)
            out.add_term(b, reverse_sign(blade_grade(b)) < 0 ? -c : c);
        return out;
    }

    // Right multiplication by the pseudoscalar. An involution only for
    // three-generator anti-Euclidean metrics.
    Multivector dual() const {
        return *this * basis(sig_, sig_.pseudoscalar());
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    // "3/2*e12 + -1*e0" in canonical blade order; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [b, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += scalar_traits<S>::to_string(c) + "*" + blade_name(sig_, b);
        }
        return out;
    }

    void add_term(Blade b, const S& c) {
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            if (!(c == scalar_traits<S>::zero())) terms_.emplace(b, c);
            return;
        }
        it->second += c;
        if (it->second == scalar_traits<S>::zero()) terms_.erase(it);
    }

private:
    void check_signature(const Multivector& o) const {
        if (!(sig_ == o.sig_))
            throw std::invalid_argument("Multivector: mixed signatures " + sig_.name() + " and " +
                                        o.sig_.name());
    }

    Signature sig_;
    Terms terms_;
};

// Symmetric part of the product of two vectors; a pure scalar.
template <class S>
Multivector<S> dot(const Multivector<S>& a, const Multivector<S>& b) {
    if (!a.is_vector() || !b.is_vector())
        throw std::invalid_argument("dot: both operands must be grade-1");
    S half = scalar_traits<S>::one() / (scalar_traits<S>::one() + scalar_traits<S>::one());
    return (a * b + b * a) * half;
}

// Antisymmetric part of the product of two vectors; a pure bivector.
template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
    if (!a.is_vector() || !b.is_vector())
        throw std::invalid_argument("wedge: both operands must be grade-1");
    S half = scalar_traits<S>::one() / (scalar_traits<S>::one() + scalar_traits<S>::one());
    return (a * b - b * a) * half;
}

// Scalar square of a vector under the geometric product.
template <class S>
S vector_square(const Multivector<S>& a) {
    return (a * a).scalar_part();
}

}  // namespace cliffq
