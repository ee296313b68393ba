#pragma once

#include <array>

#include "cliffq/rotor.hpp"

namespace cliffq {

inline Signature spacetime_signature() { return Signature(1, 3); }

// A point of spacetime in one frame, stored with the time coordinate already
// scaled to length units: ct e0 + x e1 + y e2 + z e3.
template <class S>
struct Event {
    S ct{}, x{}, y{}, z{};

    static Event from_time(const S& t, const S& x, const S& y, const S& z, const S& c) {
        return Event{c * t, x, y, z};
    }

    Multivector<S> to_multivector() const {
        return Multivector<S>::vector(spacetime_signature(), {ct, x, y, z});
    }

    static Event from_multivector(const Multivector<S>& m) {
        if (!m.is_vector() && !m.is_zero())
            throw std::invalid_argument("Event: multivector is not grade-1");
        return Event{m.coef(0b0001u), m.coef(0b0010u), m.coef(0b0100u), m.coef(0b1000u)};
    }

    friend Event operator-(const Event& a, const Event& b) {
        return Event{a.ct - b.ct, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Event operator+(const Event& a, const Event& b) {
        return Event{a.ct + b.ct, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend bool operator==(const Event& a, const Event& b) {
        return a.ct == b.ct && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

// The Lorentz interval (a-b)^2 under the geometric product:
// (ct_a-ct_b)^2 - (x_a-x_b)^2 - (y_a-y_b)^2 - (z_a-z_b)^2.
template <class S>
S interval_sq(const Event<S>& a, const Event<S>& b) {
    Multivector<S> d = (a - b).to_multivector();
    return (d * d).scalar_part();
}

template <class S>
bool is_lightlike(const Event<S>& difference, const ScalarDomain<S>& dom = {}) {
    return dom.is_zero(interval_sq(difference, Event<S>{}));
}

// A velocity beta (in units of c) with its exact gamma and the rotor
// implementing the frame change: versor s1 (s1 + s2) with s1 the unit time
// direction and s2 = gamma (e0 + beta . e). Exact mode requires 1 - |beta|^2
// to be a perfect rational square (a Pythagorean velocity).
template <class S>
struct Boost {
    std::array<S, 3> beta;
    S gamma;
    Rotor<S> rotor;

    static Boost from_beta(const std::array<S, 3>& beta) {
        const Signature sig = spacetime_signature();
        S one = scalar_traits<S>::one();
        S beta_sq = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
        if (!(beta_sq < one))
            throw SuperluminalVelocityError(
                "boost: |beta| must be strictly below 1; no rigid body reaches light speed");
        auto root = scalar_traits<S>::sqrt(one - beta_sq);
        if (!root)
            throw InexactError(
                "boost: gamma is irrational for this velocity (1-|beta|^2 is not a rational "
                "square); use approximate mode or a Pythagorean velocity");
        S gamma = one / *root;

        Multivector<S> versor = Multivector<S>::scalar(sig, one + gamma);
        versor.add_term(0b0011u, gamma * beta[0]);  // e01
        versor.add_term(0b0101u, gamma * beta[1]);  // e02
        versor.add_term(0b1001u, gamma * beta[2]);  // e03
        return Boost{beta, gamma, Rotor<S>(versor)};
    }
};

// Sandwich action of the boost rotor; equals the closed-form map
// t' = gamma (t - v x / c^2), x' = gamma (x - v t), y' = y, z' = z
// for velocities along x, componentwise and exactly in exact mode.
template <class S>
Event<S> lorentz_transform(const Boost<S>& b, const Event<S>& p) {
    return Event<S>::from_multivector(b.rotor.apply(p.to_multivector()));
}

template <class S>
Event<S> poincare_transform(const Event<S>& offset, const Boost<S>& b, const Event<S>& p) {
    return lorentz_transform(b, p) + offset;
}

// Coefficient-wise embedding of a spatial Cl(0,3) rotor into Cl(1,3); the
// spatial generators of both algebras multiply identically, so this is an
// algebra map on the even spatial subalgebra.
template <class S>
Rotor<S> embed_spatial_rotor(const Rotor<S>& spatial) {
    const Signature& s3 = spatial.signature();
    if (s3.p() != 0 || s3.q() != 3)
        throw std::invalid_argument("embed_spatial_rotor: expected a Cl(0,3) rotor");
    Multivector<S> v(spacetime_signature());
    for (const auto& [blade, coef] : spatial.versor().terms()) v.add_term(blade << 1, coef);
    return Rotor<S>(v);
}

}  // namespace cliffq
