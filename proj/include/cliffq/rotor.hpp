#pragma once

#include <array>
#include <string>

#include "cliffq/error.hpp"
#include "cliffq/multivector.hpp"

namespace cliffq {

// Whether vector-pair rotor construction insists on the all-minus metric.
// The +1 metric stays constructible for comparison experiments but must be
// requested explicitly.
enum class MetricPolicy { AntiEuclideanOnly, AllowAny };

// An even-grade versor V with nonzero scalar norm V*reverse(V), acting on the
// algebra by the two-sided sandwich V A reverse(V) / norm. Any nonzero scalar
// rescaling of the versor yields the identical action, so versors are kept
// unnormalized and exact.
template <class S>
class Rotor {
public:
    explicit Rotor(Multivector<S> versor) : versor_(std::move(versor)), norm_sq_(scalar_traits<S>::zero()) {
        if (!versor_.even_grade_only())
            throw std::invalid_argument("Rotor: versor must be even-grade");
        Multivector<S> n = versor_ * versor_.reverse();
        if (!n.is_scalar())
            throw std::invalid_argument("Rotor: versor norm is not a scalar");
        norm_sq_ = n.scalar_part();
        if (norm_sq_ == scalar_traits<S>::zero())
            throw std::invalid_argument("Rotor: zero-norm versor");
    }

    static Rotor identity(Signature sig) {
        return Rotor(Multivector<S>::scalar(sig, scalar_traits<S>::one()));
    }

    const Multivector<S>& versor() const { return versor_; }
    const S& norm_sq() const { return norm_sq_; }
    const Signature& signature() const { return versor_.signature(); }

    // Two-sided sandwich action; grade-preserving and multiplicative over
    // geometric products.
    Multivector<S> apply(const Multivector<S>& a) const {
        return (versor_ * a * versor_.reverse()) / norm_sq_;
    }

    Rotor inverse() const { return Rotor(versor_.reverse()); }

private:
    Multivector<S> versor_;
    S norm_sq_;
};

// Sequential application: compose(r2, r1) acts as r2 after r1.
template <class S>
Rotor<S> compose(const Rotor<S>& r2, const Rotor<S>& r1) {
    return Rotor<S>(r2.versor() * r1.versor());
}

namespace detail {

template <class S>
void require_anti_euclidean(const Signature& sig, MetricPolicy policy, const char* who) {
    if (policy == MetricPolicy::AntiEuclideanOnly && sig.p() != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": rigid-body rotors use the all-minus metric; " + sig.name() +
                                    " requires MetricPolicy::AllowAny");
}

// First nonzero component ratio b_i / a_i for parallel vectors.
template <class S>
S parallel_ratio(const Multivector<S>& a, const Multivector<S>& b) {
    for (const auto& [blade, coef] : a.terms()) {
        S bc = b.coef(blade);
        return bc / coef;
    }
    return scalar_traits<S>::zero();
}

}  // namespace detail

// The half-angle bisector rotor taking the direction of `a` to the direction
// of `b`: versor (|b| a + |a| b) a, built scale-invariantly so that equal
// lengths need no square root at all. Unequal lengths engage only through the
// ratio |b|/|a|, which must be exactly representable in exact mode.
template <class S>
Rotor<S> rotor_from_vector_pair(const Multivector<S>& a, const Multivector<S>& b,
                                MetricPolicy policy = MetricPolicy::AntiEuclideanOnly) {
    const Signature& sig = a.signature();
    detail::require_anti_euclidean<S>(sig, policy, "rotor_from_vector_pair");
    if (!a.is_vector() || !b.is_vector())
        throw std::invalid_argument("rotor_from_vector_pair: inputs must be nonzero vectors");
    if (!(sig == b.signature()))
        throw std::invalid_argument("rotor_from_vector_pair: mixed signatures");

    if (wedge(a, b).is_zero()) {
        S ratio = detail::parallel_ratio(a, b);
        if (ratio > scalar_traits<S>::zero()) return Rotor<S>::identity(sig);
        if (sig.n() == 2) {
            // Half-turn: two successive quarter-turns compose to the plane
            // bivector itself.
            return Rotor<S>(Multivector<S>::basis(sig, 0b11u));
        }
        throw AmbiguousRotationError(
            "rotor_from_vector_pair: antiparallel vectors leave the rotation plane free; "
            "supply an axis (e.g. via recover_rigid_motion) to disambiguate");
    }

    S aa = vector_square(a), bb = vector_square(b);
    Multivector<S> c(sig);
    if (aa == bb) {
        c = a + b;
    } else {
        auto r = scalar_traits<S>::sqrt(bb / aa);  // |b|/|a|, metric signs cancel
        if (!r)
            throw InexactError(
                "rotor_from_vector_pair: |b|/|a| is not an exact square root; use approximate "
                "mode or rescale the inputs");
        c = a * *r + b;
    }
    return Rotor<S>(c * a);
}

// Heaviside-Gibbs cross product as the spatial dual of the wedge.
template <class S>
Multivector<S> cross(const Multivector<S>& a, const Multivector<S>& b) {
    const Signature& sig = a.signature();
    if (sig.p() != 0 || sig.q() != 3)
        throw std::invalid_argument("cross: defined for Cl(0,3) vectors");
    if ((!a.is_vector() && !a.is_zero()) || (!b.is_vector() && !b.is_zero()))
        throw std::invalid_argument("cross: inputs must be vectors");
    if (a.is_zero() || b.is_zero()) return Multivector<S>::zero(sig);
    return -(wedge(a, b).dual());
}

// Rejection of `a` from the axis `m`: the component of `a` in the plane
// orthogonal to m, so a = result + (a.m) m / m^2.
template <class S>
Multivector<S> project_onto_plane(const Multivector<S>& a, const Multivector<S>& m) {
    if (!m.is_vector()) throw std::invalid_argument("project_onto_plane: zero axis");
    if (a.is_zero()) return a;
    if (!a.is_vector()) throw std::invalid_argument("project_onto_plane: input must be a vector");
    S msq = vector_square(m);
    S am = dot(a, m).scalar_part();
    return a - m * (am / msq);
}

// cos/sin column matrix of a plane rotor's full-angle action; entries are
// exact rationals of the versor components (no trigonometry involved).
template <class S>
std::array<std::array<S, 2>, 2> rotation_matrix_2d(const Rotor<S>& r) {
    const Signature& sig = r.signature();
    if (sig.n() != 2 || sig.p() != 0)
        throw std::invalid_argument("rotation_matrix_2d: rotor must live in Cl(0,2)");
    S v0 = r.versor().coef(kScalarBlade);
    S v3 = r.versor().coef(0b11u);
    S n = v0 * v0 + v3 * v3;
    S alpha = (v0 * v0 - v3 * v3) / n;
    S two = scalar_traits<S>::one() + scalar_traits<S>::one();
    S beta = two * v0 * v3 / n;
    return {{{alpha, -beta}, {beta, alpha}}};
}

}  // namespace cliffq
