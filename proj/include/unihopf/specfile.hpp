#pragma once

#include <json.hpp>

#include <string>

#include "unihopf/quadratic.hpp"

namespace unihopf {

// Input specification for the CLI: either a named preset or raw quadratic
// data. Rationals travel as strings ("p/q" or "p"); plain JSON integers are
// accepted on input but always serialized back as strings.
struct SpecFile {
    std::string kind;        // "preset" | "quadratic"
    std::string preset_name; // "curve" | "abelian"
    int g = 0;

    int d1 = 0, d2 = 0;
    Matrix cup;

    int truncation = 4; // default when omitted

    friend bool operator==(const SpecFile& a, const SpecFile& b) {
        return a.kind == b.kind && a.preset_name == b.preset_name && a.g == b.g && a.d1 == b.d1 &&
               a.d2 == b.d2 && a.cup == b.cup && a.truncation == b.truncation;
    }
};

namespace specfile_detail {

inline Rational parse_entry(const nlohmann::json& e, const std::string& where) {
    if (e.is_string()) return Rational::parse(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
    throw ValidationError("spec: non-rational entry at " + where);
}

} // namespace specfile_detail

inline SpecFile parse_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("spec: malformed container: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("spec: top level must be an object");

    SpecFile s;
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ValidationError("spec: missing string field 'kind'");
    s.kind = j.at("kind").get<std::string>();

    if (j.contains("truncation")) {
        if (!j.at("truncation").is_number_integer() || j.at("truncation").get<long>() < 0)
            throw ValidationError("spec: truncation must be a nonnegative integer");
        s.truncation = j.at("truncation").get<int>();
    }

    if (s.kind == "preset") {
        if (j.contains("d1") || j.contains("d2") || j.contains("cup"))
            throw ValidationError("spec: preset and quadratic payloads are mutually exclusive");
        if (!j.contains("preset") || !j.at("preset").is_object())
            throw ValidationError("spec: missing object field 'preset'");
        const auto& p = j.at("preset");
        if (!p.contains("name") || !p.at("name").is_string())
            throw ValidationError("spec: preset.name must be a string");
        s.preset_name = p.at("name").get<std::string>();
        if (s.preset_name != "curve" && s.preset_name != "abelian")
            throw ValidationError("spec: unknown preset '" + s.preset_name + "'");
        if (!p.contains("g") || !p.at("g").is_number_integer() || p.at("g").get<long>() < 0)
            throw ValidationError("spec: preset.g must be a nonnegative integer");
        s.g = p.at("g").get<int>();
        return s;
    }
    if (s.kind != "quadratic")
        throw ValidationError("spec: kind must be 'preset' or 'quadratic'");

    if (j.contains("preset"))
        throw ValidationError("spec: preset and quadratic payloads are mutually exclusive");
    for (const char* field : {"d1", "d2"})
        if (!j.contains(field) || !j.at(field).is_number_integer() || j.at(field).get<long>() < 0)
            throw ValidationError(std::string("spec: ") + field + " must be a nonnegative integer");
    s.d1 = j.at("d1").get<int>();
    s.d2 = j.at("d2").get<int>();
    if (!j.contains("cup") || !j.at("cup").is_array())
        throw ValidationError("spec: cup must be an array of rows");
    const auto& cup = j.at("cup");
    if (static_cast<int>(cup.size()) != s.d2)
        throw ValidationError("spec: cup must have d2 = " + std::to_string(s.d2) + " rows, got " +
                              std::to_string(cup.size()));
    s.cup = Matrix(s.d2, s.d1 * s.d1);
    for (int r = 0; r < s.d2; ++r) {
        if (!cup.at(r).is_array() || static_cast<int>(cup.at(r).size()) != s.d1 * s.d1)
            throw ValidationError("spec: cup row " + std::to_string(r) + " must have d1^2 = " +
                                  std::to_string(s.d1 * s.d1) + " entries");
        for (int c = 0; c < s.d1 * s.d1; ++c)
            s.cup.at(r, c) = specfile_detail::parse_entry(
                cup.at(r).at(c), "cup[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return s;
}

inline nlohmann::json spec_to_json(const SpecFile& s) {
    nlohmann::json j;
    j["kind"] = s.kind;
    j["truncation"] = s.truncation;
    if (s.kind == "preset") {
        j["preset"] = {{"name", s.preset_name}, {"g", s.g}};
    } else {
        j["d1"] = s.d1;
        j["d2"] = s.d2;
        auto rows = nlohmann::json::array();
        for (int r = 0; r < s.d2; ++r) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < s.d1 * s.d1; ++c) row.push_back(s.cup.at(r, c).str());
            rows.push_back(std::move(row));
        }
        j["cup"] = std::move(rows);
    }
    return j;
}

inline std::string serialize_spec(const SpecFile& s) { return spec_to_json(s).dump(); }

// Resolve to validated quadratic data; symmetric-tensor violations surface
// as ValidationError naming the offending pair.
inline QuadraticData resolve_quadratic(const SpecFile& s) {
    QuadraticData q;
    if (s.kind == "preset")
        q = s.preset_name == "curve" ? preset_curve(s.g) : preset_abelian(s.g);
    else
        q = QuadraticData{s.d1, s.d2, s.cup};
    require_valid(q);
    return q;
}

} // namespace unihopf
