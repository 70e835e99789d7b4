#pragma once

// Text and JSON formats: weight enumerators, generator matrices, moduli.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "defset/code.hpp"
#include "defset/error.hpp"

namespace defset {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeightEnumerator& E) {
    Json weights = Json::array();
    for (auto [w, a] : E.counts) weights.push_back(Json{{"w", w}, {"A", a}});
    return Json{{"p", E.p}, {"m", E.m}, {"n", E.n}, {"k", E.k}, {"weights", std::move(weights)}};
}

inline WeightEnumerator enumerator_from_json(const Json& j) {
    try {
        WeightEnumerator E;
        E.p = j.at("p").get<std::uint32_t>();
        E.m = j.at("m").get<unsigned>();
        E.n = j.at("n").get<std::uint64_t>();
        E.k = j.at("k").get<unsigned>();
        for (const auto& row : j.at("weights")) E.counts[row.at("w").get<std::uint64_t>()] = row.at("A").get<std::uint64_t>();
        if (E.k > E.m) throw Error(ErrorCode::ParseError, "k exceeds m");
        E.kernel_size = ipow(E.p, E.m - E.k);
        return E;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("weight enumerator JSON: ") + e.what());
    }
}

inline WeightEnumerator parse_enumerator(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("weight enumerator JSON: ") + e.what());
    }
    return enumerator_from_json(j);
}

/// Header "p m n", then one row per alpha^i, i < m.
inline void write_generator_matrix(std::ostream& os, const DefiningSetCode& C) {
    const Field& F = C.field();
    os << F.p() << ' ' << F.m() << ' ' << C.length() << '\n';
    for (const auto& row : generator_matrix(C)) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
}

/// "1,1,0,1" (constant term first) -> coefficient vector.
inline std::vector<std::uint32_t> parse_modulus(std::string_view text) {
    std::vector<std::uint32_t> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty coefficient in modulus '" + std::string(text) + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "' in modulus");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.size() < 2) throw Error(ErrorCode::ParseError, "modulus needs at least two coefficients");
    return out;
}

inline std::string format_modulus(const std::vector<std::uint32_t>& mod) {
    std::string s;
    for (std::size_t i = 0; i < mod.size(); ++i) s += (i ? "," : "") + std::to_string(mod[i]);
    return s;
}

}  // namespace defset
