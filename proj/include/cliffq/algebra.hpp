#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cliffq/multivector.hpp"
#include "cliffq/signature.hpp"

namespace cliffq {

// The full 2^n x 2^n signed-blade multiplication table, rows and columns in
// canonical grade-then-lexicographic order.
struct CayleyTable {
    Signature sig;
    std::vector<Blade> order;
    std::vector<SignedBlade> cells;  // row-major, aligned with `order`

    const SignedBlade& at(std::size_t row, std::size_t col) const {
        return cells[row * order.size() + col];
    }
};

inline CayleyTable cayley_table(const Signature& sig) {
    CayleyTable t{sig, blade_order(sig), {}};
    t.cells.reserve(t.order.size() * t.order.size());
    for (Blade a : t.order)
        for (Blade b : t.order) t.cells.push_back(blade_product(sig, a, b));
    return t;
}

// Counts of basis blades squaring to +1 and to -1.
inline std::pair<int, int> square_census(const Signature& sig) {
    int plus = 0, minus = 0;
    for (std::uint32_t b = 0; b < sig.blade_count(); ++b)
        (blade_product(sig, b, b).sign > 0 ? plus : minus)++;
    return {plus, minus};
}

using QuaternionTriad = std::array<SignedBlade, 3>;

template <class S>
Multivector<S> signed_blade_element(const Signature& sig, const SignedBlade& sb) {
    S one = scalar_traits<S>::one();
    return Multivector<S>::basis(sig, sb.blade, sb.sign < 0 ? -one : one);
}

namespace detail {

// Unit elements named after the 3D geometric roles: vectors e1,e2,e3 and the
// cyclic plane elements e23, -e13, e12 (the bivector carrying e13 is stored
// with a minus sign so the cyclic order of the vector triple is preserved).
inline int alias_sign_3d(Blade b) { return b == 0b101u ? -1 : +1; }

inline int alias_rank_3d(Blade b) {
    switch (b) {
        case 0b001u: return 0;  // e1
        case 0b010u: return 1;  // e2
        case 0b100u: return 2;  // e3
        case 0b110u: return 3;  // e23
        case 0b101u: return 4;  // -e13
        case 0b011u: return 5;  // e12
        default: return 6;
    }
}

// Scalar sign of the ordered product of three signed blades; the blades must
// multiply to a scalar.
inline int triple_product_sign(const Signature& sig, const QuaternionTriad& t) {
    SignedBlade uv = blade_product(sig, t[0].blade, t[1].blade);
    SignedBlade uvw = blade_product(sig, uv.blade, t[2].blade);
    return t[0].sign * t[1].sign * t[2].sign * uv.sign * uvw.sign;
}

}  // namespace detail

// All ordered triples (u,v,w) of distinct non-scalar basis elements, counted
// once up to cyclic rotation, satisfying u^2 = v^2 = w^2 = uvw = -1. The
// triple is reported with uniform signs: positive elements where the cyclic
// orientation closes directly, globally negated where only the reversed
// orientation does (as happens for the plane triple under the +1 metric).
inline std::vector<QuaternionTriad> quaternion_triads(const Signature& sig) {
    std::vector<QuaternionTriad> out;
    if (sig.n() != 3) return out;
    const Signature ref(0, 3);
    std::vector<Blade> blades = blade_order(sig);

    for (std::size_t i = 1; i < blades.size(); ++i) {
        for (std::size_t j = i + 1; j < blades.size(); ++j) {
            for (std::size_t k = j + 1; k < blades.size(); ++k) {
                Blade a = blades[i], b = blades[j], c = blades[k];
                if ((a ^ b ^ c) != 0) continue;
                if (blade_product(sig, a, a).sign != -1 || blade_product(sig, b, b).sign != -1 ||
                    blade_product(sig, c, c).sign != -1)
                    continue;

                auto elem = [](Blade bl) {
                    return SignedBlade{bl, detail::alias_sign_3d(bl)};
                };
                QuaternionTriad t1{elem(a), elem(b), elem(c)};
                QuaternionTriad t2{elem(a), elem(c), elem(b)};
                // Orientation is fixed against the all-minus metric, where the
                // cyclic structure of the named elements closes positively.
                QuaternionTriad oriented =
                    detail::triple_product_sign(ref, t1) == -1 ? t1 : t2;

                // Rotate so the lowest-ranked element leads.
                int best = 0;
                for (int r = 1; r < 3; ++r)
                    if (detail::alias_rank_3d(oriented[r].blade) <
                        detail::alias_rank_3d(oriented[best].blade))
                        best = r;
                QuaternionTriad canon{oriented[best], oriented[(best + 1) % 3],
                                      oriented[(best + 2) % 3]};

                int p = detail::triple_product_sign(sig, canon);
                if (p == 1) {
                    for (auto& e : canon) e.sign = -e.sign;
                }
                out.push_back(canon);
            }
        }
    }
    return out;
}

}  // namespace cliffq
