#include "galg/config.hpp"

#include "galg/parse.hpp"

#include <json.hpp>

#include <stdexcept>

namespace galg {

namespace {

LieStructure lie_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "sl2") return sl2_structure();
        throw std::invalid_argument("config: unknown built-in Lie structure '" + name + "'");
    }
    auto names = j.at("names").get<std::vector<std::string>>();
    LieStructure L(static_cast<int>(names.size()), names);
    auto index = [&](const std::string& s) {
        for (int i = 0; i < L.dim; ++i)
            if (names[i] == s) return i;
        throw std::invalid_argument("config: unknown basis name '" + s + "'");
    };
    for (const auto& b : j.at("brackets")) {
        int i = index(b.at("left").get<std::string>());
        int k = index(b.at("right").get<std::string>());
        std::vector<std::pair<int, ParamRat>> coeffs;
        for (auto it = b.at("value").begin(); it != b.at("value").end(); ++it)
            coeffs.emplace_back(index(it.key()), parse_paramrat(it.value().get<std::string>()));
        L.set_bracket(i, k, coeffs);
    }
    return L;
}

TruncationPoly truncation_from_json(const nlohmann::json& j) {
    std::vector<ParamRat> p;
    for (const auto& entry : j) p.push_back(parse_paramrat(entry.get<std::string>()));
    int m = static_cast<int>(p.size());
    return TruncationPoly(m, std::move(p));
}

}  // namespace

LieStructure lie_from_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    return lie_from_json(j.contains("lie") ? j.at("lie") : j);
}

GAlgebra algebra_from_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    LieStructure L = lie_from_json(j.at("lie"));
    TruncationPoly p = truncation_from_json(j.at("truncation"));
    return truncated_current(L, p);
}

}  // namespace galg
