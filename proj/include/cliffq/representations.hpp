#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliffq/algebra.hpp"
#include "cliffq/multivector.hpp"
#include "cliffq/repmatrix.hpp"

namespace cliffq {

// Generator images extended multiplicatively to the full basis: the image of
// a canonical blade is the ascending product of its generator images.
template <class R>
struct Representation {
    Signature sig;
    std::string target;  // catalogue key, e.g. "quaternion-2"
    std::map<Blade, Matrix<R>, BladeLess> images;

    const Matrix<R>& image(Blade b) const { return images.at(b); }
    int dim() const { return images.at(kScalarBlade).rows(); }
};

template <class R>
Representation<R> make_representation(const Signature& sig, std::string target,
                                      const std::vector<Matrix<R>>& generators) {
    if (static_cast<int>(generators.size()) != sig.n())
        throw std::invalid_argument("make_representation: need one image per generator");
    int d = generators.empty() ? 1 : generators[0].rows();
    Representation<R> rep{sig, std::move(target), {}};
    for (Blade b = 0; b < sig.blade_count(); ++b) {
        Matrix<R> m = Matrix<R>::identity(d);
        for (int slot = 0; slot < sig.n(); ++slot)
            if (b & (Blade(1) << slot)) m = m * generators[slot];
        rep.images.emplace(b, std::move(m));
    }
    return rep;
}

// Linear extension of the blade images to a whole multivector.
template <class R>
Matrix<R> represent(const Representation<R>& rep, const Multivector<Rational>& a) {
    if (!(a.signature() == rep.sig))
        throw std::invalid_argument("represent: multivector signature differs from representation");
    Matrix<R> out(rep.dim(), rep.dim());
    for (const auto& [blade, coef] : a.terms()) out = out + rep.image(blade) * coef;
    return out;
}

struct HomomorphismReport {
    int pairs_checked = 0;
    std::vector<std::string> violations;
    std::pair<int, int> census{0, 0};          // image squares equal to +I / -I
    std::pair<int, int> expected_census{0, 0};  // from the blade-level census
    bool census_matches = false;

    bool passed() const { return violations.empty() && census_matches; }
};

// Machine check of multiplicativity: image(a) image(b) == sign * image(ab)
// for every basis pair, plus a comparison of image squares against the
// blade-level square census.
template <class R>
HomomorphismReport verify_homomorphism(const Representation<R>& rep) {
    HomomorphismReport report;
    report.expected_census = square_census(rep.sig);
    for (Blade a = 0; a < rep.sig.blade_count(); ++a) {
        for (Blade b = 0; b < rep.sig.blade_count(); ++b) {
            ++report.pairs_checked;
            SignedBlade ab = blade_product(rep.sig, a, b);
            Matrix<R> lhs = rep.image(a) * rep.image(b);
            Matrix<R> rhs = ab.sign < 0 ? -rep.image(ab.blade) : rep.image(ab.blade);
            if (!(lhs == rhs))
                report.violations.push_back(blade_name(rep.sig, a) + "*" + blade_name(rep.sig, b));
        }
    }
    Matrix<R> id = Matrix<R>::identity(rep.dim());
    for (Blade b = 0; b < rep.sig.blade_count(); ++b) {
        Matrix<R> sq = rep.image(b) * rep.image(b);
        if (sq == id)
            report.census.first++;
        else if (sq == -id)
            report.census.second++;
        else
            report.violations.push_back(blade_name(rep.sig, b) + "^2 not +/-identity");
    }
    report.census_matches = report.census == report.expected_census;
    return report;
}

namespace detail {

// Mat(2,R) basis: the identity and the standard involution/rotation pair.
inline RationalMatrix mat_l() { return make_matrix<Rational>(2, 2, {1, 0, 0, -1}); }
inline RationalMatrix mat_m() { return make_matrix<Rational>(2, 2, {0, 1, 1, 0}); }
inline RationalMatrix mat_n() { return make_matrix<Rational>(2, 2, {0, 1, -1, 0}); }

// Block tensor: 4x4 matrix with `pattern`-shaped blocks of `entry`.
inline RationalMatrix tensor(const RationalMatrix& entry, const RationalMatrix& pattern) {
    RationalMatrix out(4, 4);
    for (int br = 0; br < 2; ++br)
        for (int bc = 0; bc < 2; ++bc)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    out.at(2 * br + r, 2 * bc + c) = pattern.at(br, bc) * entry.at(r, c);
    return out;
}

inline QuaternionMatrix quat_diag(const Quaternion& a, const Quaternion& b) {
    QuaternionMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

inline QuaternionMatrix quat_offdiag(const Quaternion& a, const Quaternion& b) {
    QuaternionMatrix m(2, 2);
    m.at(0, 1) = a;
    m.at(1, 0) = b;
    return m;
}

inline ComplexMatrix pauli(int which) {
    ComplexMatrix m(2, 2);
    CRational i = CRational::i();
    switch (which) {
        case 1:
            m.at(0, 1) = CRational(1);
            m.at(1, 0) = CRational(1);
            break;
        case 2:
            m.at(0, 1) = -i;
            m.at(1, 0) = i;
            break;
        default:
            m.at(0, 0) = CRational(1);
            m.at(1, 1) = CRational(-1);
            break;
    }
    return m;
}

}  // namespace detail

using AnyRepresentation =
    std::variant<Representation<Rational>, Representation<CRational>, Representation<Quaternion>>;

// The pinned catalogue of (signature, target) representations. Generator
// images are the concrete printed matrices; everything else follows
// multiplicatively. For Cl(3,1) the metric here places the -1 generator
// last, so the printed generator set is assigned in the matching order.
inline AnyRepresentation build_representation(const Signature& sig, const std::string& target) {
    using detail::mat_l;
    using detail::mat_m;
    using detail::mat_n;
    const Quaternion qi = Quaternion::i(), qj = Quaternion::j(), qk = Quaternion::k();

    if (sig == Signature(1, 0) && target == "real-2")
        return make_representation<Rational>(sig, target, {mat_m()});
    if (sig == Signature(0, 1) && target == "real-2")
        return make_representation<Rational>(sig, target, {mat_n()});
    if (sig == Signature(2, 0) && target == "real-2")
        return make_representation<Rational>(sig, target, {mat_l(), mat_m()});
    if (sig == Signature(0, 2) && target == "real-4")
        return make_representation<Rational>(
            sig, target, {detail::tensor(mat_l(), mat_n()), detail::tensor(mat_m(), mat_n())});
    if (sig == Signature(0, 2) && target == "quaternion-1") {
        QuaternionMatrix gi(1, 1), gj(1, 1);
        gi.at(0, 0) = qi;
        gj.at(0, 0) = qj;
        return make_representation<Quaternion>(sig, target, {gi, gj});
    }
    if (sig == Signature(3, 0) && target == "real-4")
        return make_representation<Rational>(sig, target,
                                             {detail::tensor(mat_l(), RationalMatrix::identity(2)),
                                              detail::tensor(mat_m(), mat_l()),
                                              detail::tensor(mat_m(), mat_m())});
    if (sig == Signature(3, 0) && target == "complex-2")
        return make_representation<CRational>(sig, target,
                                              {detail::pauli(1), detail::pauli(2), detail::pauli(3)});
    if (sig == Signature(0, 3) && target == "quaternion-2")
        return make_representation<Quaternion>(sig, target,
                                               {detail::quat_offdiag(qi, qi),
                                                detail::quat_offdiag(qj, qj),
                                                detail::quat_offdiag(qk, qk)});
    if (sig == Signature(3, 1) && target == "real-4")
        return make_representation<Rational>(sig, target,
                                             {detail::tensor(mat_m(), RationalMatrix::identity(2)),
                                              detail::tensor(mat_l(), mat_l()),
                                              detail::tensor(mat_l(), mat_m()),
                                              detail::tensor(mat_n(), RationalMatrix::identity(2))});
    if (sig == Signature(1, 3) && target == "quaternion-2")
        return make_representation<Quaternion>(sig, target,
                                               {detail::quat_diag(Quaternion(1), Quaternion(-1)),
                                                detail::quat_offdiag(qi, qi),
                                                detail::quat_offdiag(qj, qj),
                                                detail::quat_offdiag(qk, qk)});
    throw UnsupportedRepresentationError("no catalogue representation of " + sig.name() +
                                         " over target '" + target + "'");
}

// Matrix image of a quaternion in the named target ring.
inline ComplexMatrix quaternion_embed_complex2(const Quaternion& q) {
    return quaternion_to_complex2(q);
}
inline RationalMatrix quaternion_embed_real4(const Quaternion& q) { return quaternion_to_real4(q); }

}  // namespace cliffq
