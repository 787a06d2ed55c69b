#ifndef TYPEA_JSON_IO_HPP
#define TYPEA_JSON_IO_HPP

#include <json.hpp>

#include "typea/recollement.hpp"

namespace typea {

using nlohmann::json;

// Extended integers travel as "-inf" | "+inf" | int.
inline json to_json(const ExtInt& e) {
    switch (e.kind) {
        case ExtInt::NegInf: return "-inf";
        case ExtInt::PosInf: return "+inf";
        default: return e.value;
    }
}

inline ExtInt ext_int_from_json(const json& j) {
    if (j.is_number_integer()) return ExtInt::fin(j.get<int>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "-inf") return ExtInt::neg_inf();
        if (s == "+inf") return ExtInt::pos_inf();
    }
    throw std::invalid_argument("expected an integer, \"-inf\" or \"+inf\": " + j.dump());
}

inline json to_json(const IndecObject& x) {
    return json{{"l", x.l}, {"k", x.k}, {"d", x.d}};
}

inline IndecObject indec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("l") || !j.contains("k") || !j.contains("d"))
        throw std::invalid_argument("expected {\"l\":..,\"k\":..,\"d\":..}: " + j.dump());
    return IndecObject{j.at("l").get<int>(), j.at("k").get<int>(), j.at("d").get<int>()};
}

inline json to_json(const DObject& z) {
    json arr = json::array();
    for (const IndecObject& x : z.summands) arr.push_back(to_json(x));
    return arr;
}

inline DObject dobject_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of objects");
    std::vector<IndecObject> xs;
    for (const json& e : j) xs.push_back(indec_from_json(e));
    return DObject(xs);
}

inline json to_json(const Aisle& a) {
    json tails = json::array();
    for (const ExtInt& t : a.tails) tails.push_back(to_json(t));
    json extras = json::array();
    for (const IndecObject& e : a.extras) extras.push_back(to_json(e));
    return json{{"tails", tails}, {"extras", extras}};
}

inline Aisle aisle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tails") || !j.contains("extras"))
        throw std::invalid_argument("expected {\"tails\":[..],\"extras\":[..]}: " + j.dump());
    Aisle a;
    for (const json& t : j.at("tails")) a.tails.push_back(ext_int_from_json(t));
    for (const json& e : j.at("extras")) a.extras.push_back(indec_from_json(e));
    return a;
}

inline json to_json(const Smc& s) {
    json arr = json::array();
    for (const IndecObject& x : s) arr.push_back(to_json(x));
    return arr;
}

inline Smc smc_from_json(const json& j) {
    Smc s;
    for (const json& e : j) s.push_back(indec_from_json(e));
    return s;
}

inline json to_json(const Recollement& r) {
    if (r.idempotent) return json{{"kind", "idempotent"}, {"r", r.r}};
    return json{{"kind", "exceptional"}, {"x", to_json(r.generator)}};
}

inline Recollement recollement_from_json(const Algebra& a, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "idempotent") return make_idempotent_recollement(a, j.at("r").get<int>());
    if (kind == "exceptional")
        return make_exceptional_recollement(a, indec_from_json(j.at("x")));
    throw std::invalid_argument("unknown recollement kind: " + kind);
}

inline json to_json(const FactorTStructure& f) {
    return json{{"corner", to_json(f.corner)}, {"quotient", to_json(f.quotient)}};
}

inline FactorTStructure factor_from_json(const json& j) {
    return FactorTStructure{ext_int_from_json(j.at("corner")),
                            aisle_from_json(j.at("quotient"))};
}

inline json to_json(const AutoEq& phi) { return json{{"a", phi.a}, {"b", phi.b}}; }

} // namespace typea

#endif
