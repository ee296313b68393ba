#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliffq {

// A basis blade as a bitset over generator slots; bit i set means generator
// slot i participates. The empty set is the scalar unit, the full set the
// pseudoscalar. Slots are numbered 0..n-1 in declaration order.
using Blade = std::uint32_t;

constexpr Blade kScalarBlade = 0;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

// Metric descriptor Cl(p,q): the first p generator slots square to +1, the
// remaining q to -1. Degenerate (null) generators are not supported.
class Signature {
public:
    Signature(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return p_ + q_; }
    std::uint32_t blade_count() const { return 1u << n(); }
    Blade pseudoscalar() const { return static_cast<Blade>(blade_count() - 1); }

    // +1 for slots below p, -1 otherwise.
    int generator_sign(int slot) const { return slot < p_ ? +1 : -1; }

    // Printed generator index: 3D and lower algebras use e1..en, spacetime
    // style algebras (n >= 4) use e0-based labels with e0 first.
    int label_of_slot(int slot) const { return slot + (n() <= 3 ? 1 : 0); }

    std::string name() const;  // "Cl(p,q)"
    static Signature parse(const std::string& text);

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

private:
    int p_, q_;
};

// Canonical ordering of blades: by grade, then lexicographically on the
// ascending generator index list (e01 < e02 < e03 < e12 < ...).
bool blade_less(Blade a, Blade b);

struct BladeLess {
    bool operator()(Blade a, Blade b) const { return blade_less(a, b); }
};

// All 2^n blades of a signature in canonical order.
std::vector<Blade> blade_order(const Signature& sig);

std::string blade_name(const Signature& sig, Blade b);
Blade parse_blade(const Signature& sig, const std::string& name);

// Result of multiplying two basis blades: the canonical blade of the
// symmetric difference and the accumulated sign from reordering
// transpositions plus metric contraction of repeated generators.
struct SignedBlade {
    Blade blade;
    int sign;  // +1 or -1; never 0 for a nondegenerate metric
};

SignedBlade blade_product(const Signature& sig, Blade a, Blade b);

// Reversion sign (-1)^{k(k-1)/2} for a grade-k blade.
int reverse_sign(int grade);

}  // namespace cliffq
