#include "cliffq/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffq {

Signature::Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw std::invalid_argument("Signature: negative generator count");
    if (p + q > 6) throw std::invalid_argument("Signature: p+q must be at most 6");
}

std::string Signature::name() const {
    return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

Signature Signature::parse(const std::string& text) {
    // Accepts "Cl(p,q)" with optional spaces after the comma.
    if (text.size() < 7 || text.substr(0, 3) != "Cl(" || text.back() != ')')
        throw std::invalid_argument("Signature: expected \"Cl(p,q)\", got '" + text + "'");
    std::string inner = text.substr(3, text.size() - 4);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("Signature: expected \"Cl(p,q)\", got '" + text + "'");
    std::string ps = inner.substr(0, comma);
    std::string qs = inner.substr(comma + 1);
    while (!qs.empty() && qs.front() == ' ') qs.erase(qs.begin());
    try {
        std::size_t pe = 0, qe = 0;
        int p = std::stoi(ps, &pe);
        int q = std::stoi(qs, &qe);
        if (pe != ps.size() || qe != qs.size())
            throw std::invalid_argument("Signature: expected \"Cl(p,q)\", got '" + text + "'");
        return Signature(p, q);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Signature: generator counts out of range in '" + text + "'");
    }
}

bool blade_less(Blade a, Blade b) {
    int ga = blade_grade(a), gb = blade_grade(b);
    if (ga != gb) return ga < gb;
    while (a != 0 && b != 0) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::vector<Blade> blade_order(const Signature& sig) {
    std::vector<Blade> out(sig.blade_count());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
    std::sort(out.begin(), out.end(), BladeLess{});
    return out;
}

std::string blade_name(const Signature& sig, Blade b) {
    if (b == kScalarBlade) return "1";
    std::string out = "e";
    for (int slot = 0; slot < sig.n(); ++slot)
        if (b & (1u << slot)) out += std::to_string(sig.label_of_slot(slot));
    return out;
}

Blade parse_blade(const Signature& sig, const std::string& name) {
    if (name == "1") return kScalarBlade;
    if (name.empty() || name[0] != 'e')
        throw std::invalid_argument("blade: cannot parse '" + name + "'");
    Blade b = 0;
    int prev = -1;
    int base = sig.n() <= 3 ? 1 : 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw std::invalid_argument("blade: cannot parse '" + name + "'");
        int label = name[i] - '0';
        int slot = label - base;
        if (slot < 0 || slot >= sig.n())
            throw std::invalid_argument("blade: generator " + std::string(1, name[i]) +
                                        " out of range for " + sig.name());
        if (label <= prev)
            throw std::invalid_argument("blade: indices must be ascending in '" + name + "'");
        prev = label;
        b |= 1u << slot;
    }
    return b;
}

SignedBlade blade_product(const Signature& sig, Blade a, Blade b) {
    if ((a | b) >= sig.blade_count())
        throw std::invalid_argument("blade_product: blade outside signature");
    // Count transpositions needed to interleave-sort the concatenated index
    // list: each generator of b must cross every higher generator of a.
    int swaps = 0;
    Blade ash = a >> 1;
    while (ash != 0) {
        swaps += __builtin_popcount(ash & b);
        ash >>= 1;
    }
    int sign = (swaps & 1) ? -1 : +1;
    // Repeated generators contract to their metric square.
    Blade common = a & b;
    while (common != 0) {
        int slot = __builtin_ctz(common);
        sign *= sig.generator_sign(slot);
        common &= common - 1;
    }
    return {a ^ b, sign};
}

int reverse_sign(int grade) { return (grade * (grade - 1) / 2) % 2 == 0 ? +1 : -1; }

}  // namespace cliffq
