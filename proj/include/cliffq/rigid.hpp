#pragma once

#include <array>
#include <string>

#include "cliffq/rotor.hpp"

namespace cliffq {

// A translation followed by a rotation about the translated anchor point:
// apply(P) = anchor + translation + R(P - anchor). Pairwise dot products of
// difference vectors are preserved.
template <class S>
struct RigidMotion {
    Rotor<S> rotation;
    Multivector<S> translation;
    Multivector<S> anchor;

    Multivector<S> apply(const Multivector<S>& point) const {
        return anchor + translation + rotation.apply(point - anchor);
    }
};

namespace detail {

template <class S>
bool mv_near_zero(const Multivector<S>& m, const ScalarDomain<S>& dom) {
    for (const auto& [b, c] : m.terms())
        if (!dom.is_zero(c)) return false;
    return true;
}

template <class S>
bool mv_near_equal(const Multivector<S>& a, const Multivector<S>& b, const ScalarDomain<S>& dom) {
    return mv_near_zero(a - b, dom);
}

// Euclidean squared distance between two position vectors under the
// all-minus metric: |X-Y|^2 = -(X-Y)^2.
template <class S>
S dist_sq(const Multivector<S>& x, const Multivector<S>& y) {
    Multivector<S> d = x - y;
    return -(d * d).scalar_part();
}

// Half-angle rotor for equal-length c -> c', including the half-turn
// degeneracy where the bisector vanishes. `axis_hint` must be a nonzero
// vector orthogonal to the rotation plane in the degenerate case.
template <class S>
Rotor<S> equal_length_rotor(const Multivector<S>& c, const Multivector<S>& cp,
                            const Multivector<S>& axis_hint, const ScalarDomain<S>& dom) {
    Multivector<S> d = c + cp;
    if (!mv_near_zero(d, dom)) return Rotor<S>(d * c);
    // c' = -c: a half-turn about the axis, assembled from two quarter-turns
    // whose composite versor is the plane bivector (axis x c) c.
    return Rotor<S>(cross(axis_hint, c) * c);
}

}  // namespace detail

// Recovers the rigid motion taking the non-collinear points (A,B,C) to
// (A',B',C') in Cl(0,3): translation [AA'], then the rotation about A' whose
// axis is m = (a-a') x (b-b') with a=[AB] -> a'=[A'B'], b=[AC] -> b'=[A'C'].
// All arithmetic is square-root free: the projections of a and a' onto the
// plane orthogonal to m have exactly equal lengths, so the bisector is their
// plain sum. The returned motion maps all three input points to their primed
// images exactly (in exact mode).
template <class S>
RigidMotion<S> recover_rigid_motion(const std::array<Multivector<S>, 3>& points,
                                    const std::array<Multivector<S>, 3>& images,
                                    const ScalarDomain<S>& dom = {}) {
    const Signature& sig = points[0].signature();
    if (sig.p() != 0 || sig.q() != 3)
        throw std::invalid_argument("recover_rigid_motion: points must live in Cl(0,3)");

    static const char* kNames[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        if (!dom.equal(detail::dist_sq(points[i], points[j]), detail::dist_sq(images[i], images[j])))
            throw NotRigidError(kNames[i], kNames[j]);
    }

    Multivector<S> a = points[1] - points[0];
    Multivector<S> b = points[2] - points[0];
    if (a.is_zero() || b.is_zero() || detail::mv_near_zero(cross(a, b), dom))
        throw DegenerateConfigurationError("recover_rigid_motion: points A, B, C are collinear");

    Multivector<S> ap = images[1] - images[0];
    Multivector<S> bp = images[2] - images[0];

    Rotor<S> rot = Rotor<S>::identity(sig);
    bool a_fixed = detail::mv_near_equal(a, ap, dom);
    bool b_fixed = detail::mv_near_equal(b, bp, dom);

    if (!(a_fixed && b_fixed)) {
        Multivector<S> m = cross(a - ap, b - bp);
        if (!detail::mv_near_zero(m, dom)) {
            Multivector<S> c = project_onto_plane(a, m);
            Multivector<S> cp = project_onto_plane(ap, m);
            rot = detail::equal_length_rotor(c, cp, m, dom);
        } else if (!a_fixed) {
            // The two difference constraints are parallel: align a first
            // (the rotation in the a a'-plane), then fix any remaining twist
            // about the image direction.
            Rotor<S> align = detail::mv_near_zero(a + ap, dom)
                                 ? Rotor<S>(cross(a, b) * a)
                                 : Rotor<S>((a + ap) * a);
            Multivector<S> b1 = align.apply(b);
            if (detail::mv_near_equal(b1, bp, dom)) {
                rot = align;
            } else {
                Multivector<S> cb = project_onto_plane(b1, ap);
                Multivector<S> cbp = project_onto_plane(bp, ap);
                rot = compose(detail::equal_length_rotor(cb, cbp, ap, dom), align);
            }
        } else {
            // a fixed, b moved: a pure twist about a.
            Multivector<S> cb = project_onto_plane(b, a);
            Multivector<S> cbp = project_onto_plane(bp, a);
            rot = detail::equal_length_rotor(cb, cbp, a, dom);
        }
    }

    RigidMotion<S> motion{rot, images[0] - points[0], points[0]};
    for (int i = 0; i < 3; ++i) {
        if (!detail::mv_near_equal(motion.apply(points[i]), images[i], dom))
            throw std::logic_error("recover_rigid_motion: reconstructed motion does not reproduce " +
                                   std::string(kNames[i]) + "'");
    }
    return motion;
}

// A rigid observer: origin position and orientation rotor, both relative to
// one fixed reference frame.
template <class S>
struct Frame {
    Multivector<S> origin;
    Rotor<S> orientation;
};

// Re-expresses a measurement made in `from` as the measurement in `to`:
// translate by the origin difference (grade-1 position content only), then
// apply the relative orientation rotor. Exactly reciprocal: changing back
// restores the input.
template <class S>
Multivector<S> change_frame(const Frame<S>& from, const Frame<S>& to, const Multivector<S>& a) {
    if (!(from.origin.signature() == to.origin.signature()) ||
        !(a.signature() == from.origin.signature()))
        throw std::invalid_argument("change_frame: frames and measurement must share a signature");
    Multivector<S> offset = from.orientation.inverse().apply(from.origin - to.origin);
    Rotor<S> relative = compose(to.orientation.inverse(), from.orientation);
    return relative.apply(a + offset);
}

}  // namespace cliffq
