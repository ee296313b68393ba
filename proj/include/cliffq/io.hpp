#pragma once

#include <string>

#include <json.hpp>

#include "cliffq/multivector.hpp"

namespace cliffq {
namespace io {

// Insertion order is preserved so every emitted mapping is in canonical
// grade-then-lexicographic order and output is byte-deterministic.
using json = nlohmann::ordered_json;

template <class S>
S parse_scalar(const std::string& text);

template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
    return Rational::from_string(text);
}

template <>
inline double parse_scalar<double>(const std::string& text) {
    try {
        return Rational::from_string(text).to_double();
    } catch (const std::invalid_argument&) {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw;
        return v;
    }
}

template <class S>
json multivector_to_json(const Multivector<S>& m) {
    json terms = json::object();
    for (const auto& [blade, coef] : m.terms())
        terms[blade_name(m.signature(), blade)] = scalar_traits<S>::to_string(coef);
    return json{{"signature", m.signature().name()}, {"terms", std::move(terms)}};
}

template <class S>
Multivector<S> multivector_from_json(const json& j) {
    Signature sig = Signature::parse(j.at("signature").get<std::string>());
    Multivector<S> m(sig);
    for (const auto& [name, coef] : j.at("terms").items())
        m.add_term(parse_blade(sig, name), parse_scalar<S>(coef.template get<std::string>()));
    return m;
}

}  // namespace io
}  // namespace cliffq
