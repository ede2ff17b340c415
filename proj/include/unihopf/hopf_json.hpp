#pragma once

#include <json.hpp>

#include "unihopf/hopf.hpp"

namespace unihopf {

// JSON serialization of a GradedHopf, used for caching and golden tests.
// Rationals travel as strings, never as numbers, so the round trip is exact.
//
// Schema:
// {
//   "truncation": N,
//   "basis": [["1"], ["1","2"], ...],                 // labels per weight
//   "product": [[a,i,b,j,[[k,"c"],...]], ...],        // e_{a,i}*e_{b,j}
//   "coproduct": [[w,i,[[w1,i1,w2,i2,"c"],...]], ...],
//   "antipode": [[w,i,[[k,"c"],...]], ...]
// }

inline nlohmann::json hopf_to_json(const GradedHopf& h) {
    nlohmann::json j;
    j["truncation"] = h.truncation;
    j["basis"] = h.labels;

    auto prod = nlohmann::json::array();
    for (const auto& [ab, table] : h.product)
        for (size_t i = 0; i < table.size(); ++i)
            for (size_t jj = 0; jj < table[i].size(); ++jj) {
                auto terms = nlohmann::json::array();
                for (const auto& [k, c] : table[i][jj])
                    terms.push_back({k, c.str()});
                prod.push_back({ab.first, static_cast<int>(i), ab.second, static_cast<int>(jj),
                                std::move(terms)});
            }
    j["product"] = std::move(prod);

    auto cop = nlohmann::json::array();
    for (int w = 0; w <= h.truncation; ++w)
        for (int i = 0; i < h.dim(w); ++i) {
            auto terms = nlohmann::json::array();
            for (const auto& t : h.coproduct[w][i])
                terms.push_back({t.w1, t.i1, t.w2, t.i2, t.c.str()});
            cop.push_back({w, i, std::move(terms)});
        }
    j["coproduct"] = std::move(cop);

    auto ant = nlohmann::json::array();
    for (int w = 0; w <= h.truncation; ++w)
        for (int i = 0; i < h.dim(w); ++i) {
            auto terms = nlohmann::json::array();
            for (const auto& [k, c] : h.antipode[w][i]) terms.push_back({k, c.str()});
            ant.push_back({w, i, std::move(terms)});
        }
    j["antipode"] = std::move(ant);
    return j;
}

inline GradedHopf hopf_from_json_impl(const nlohmann::json& j) {
    GradedHopf h;
    h.truncation = j.at("truncation").get<int>();
    h.labels = j.at("basis").get<std::vector<std::vector<std::string>>>();
    if (static_cast<int>(h.labels.size()) != h.truncation + 1)
        throw ValidationError("hopf_from_json: basis list does not match truncation");
    h.coproduct.assign(h.truncation + 1, {});
    h.antipode.assign(h.truncation + 1, {});
    for (int w = 0; w <= h.truncation; ++w) {
        h.coproduct[w].resize(h.labels[w].size());
        h.antipode[w].resize(h.labels[w].size());
    }

    for (int a = 1; a <= h.truncation; ++a)
        for (int b = 1; a + b <= h.truncation; ++b) {
            auto& table = h.product[{a, b}];
            table.resize(h.dim(a));
            for (auto& row : table) row.resize(h.dim(b));
        }

    for (const auto& e : j.at("product")) {
        const int a = e.at(0), i = e.at(1), b = e.at(2), jj = e.at(3);
        auto& cell = h.product.at({a, b}).at(i).at(jj);
        for (const auto& t : e.at(4))
            cell.emplace_back(t.at(0).get<int>(), Rational::parse(t.at(1).get<std::string>()));
    }
    for (const auto& e : j.at("coproduct")) {
        const int w = e.at(0), i = e.at(1);
        for (const auto& t : e.at(2))
            h.coproduct[w][i].push_back({t.at(0).get<int>(), t.at(1).get<int>(),
                                         t.at(2).get<int>(), t.at(3).get<int>(),
                                         Rational::parse(t.at(4).get<std::string>())});
    }
    for (const auto& e : j.at("antipode")) {
        const int w = e.at(0), i = e.at(1);
        for (const auto& t : e.at(2))
            h.antipode[w][i].emplace_back(t.at(0).get<int>(),
                                          Rational::parse(t.at(1).get<std::string>()));
    }
    return h;
}

inline GradedHopf hopf_from_json(const nlohmann::json& j) {
    try {
        return hopf_from_json_impl(j);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("hopf_from_json: ") + e.what());
    }
}

inline std::string hopf_serialize(const GradedHopf& h) { return hopf_to_json(h).dump(1); }

inline GradedHopf hopf_deserialize(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("hopf_deserialize: malformed container: ") + e.what());
    }
    return hopf_from_json(j);
}

} // namespace unihopf
