#pragma once

#include <string>

#include "json.hpp"

#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

using Json = nlohmann::ordered_json;

/// {"<exponent>": "<coefficient>", ...}, ascending exponents, bignum-safe.
inline Json to_json(const LaurentPolyA& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
    return out;
}

/// [[a-exponent, z-exponent, "<coefficient>"], ...], ascending (a, z).
inline Json to_json(const PolyAZ& p) {
    Json out = Json::array();
    for (const auto& [k, c] : p.terms()) out.push_back(Json::array({k.first, k.second, c.get_str()}));
    return out;
}

inline Json to_json(const CoeffVector& v) {
    Json out = Json::array();
    for (const auto& entry : v.entries) out.push_back(to_json(entry));
    return out;
}

inline LaurentPolyA laurent_from_json(const Json& j) {
    LaurentPolyA p;
    for (const auto& [key, value] : j.items())
        p.add_term(std::stoll(key), BigInt(value.get<std::string>()));
    return p;
}

inline const char* realizability_name(Realizable r) {
    switch (r) {
        case Realizable::CheckedPlanar: return "checked-planar";
        case Realizable::Unchecked: return "unchecked";
        case Realizable::Virtual: return "virtual";
    }
    return "unchecked";
}

}  // namespace knotpoly
