// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV emission for the CLI. Reports carry element values as plain
// integer indices so that both encodings round-trip exactly. JSON documents
// have the shape {"meta": ..., "result": ..., "claims"?: ...}; CSV is the
// per-b table of the run (header row first, one row per b).

#pragma once

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bctforge/boomerang.hpp"
#include "bctforge/field.hpp"
#include "bctforge/power_map.hpp"
#include "bctforge/verify.hpp"

namespace bctforge {

using json = nlohmann::json;

inline json field_meta_json(const FieldCtx& ctx, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= ctx.characteristic();
    return json{{"p", ctx.characteristic()},
                {"k", k},
                {"q", q},
                {"modulus", ctx.spec().modulus},
                {"generator", ctx.generator().v}};
}

inline json spectrum_result_json(const SpectrumReport& rep) {
    json omega = json::object();
    for (auto [i, w] : rep.omega) omega[std::to_string(i)] = w;
    json out{{"omega", omega}, {"max_delta", rep.max_delta}};
    if (rep.per_b) out["per_b"] = *rep.per_b;
    return out;
}

inline json bct_result_json(const BctReport& rep) {
    json per_b = json::object();
    for (auto [b, cnt] : rep.per_b) per_b[std::to_string(b)] = cnt;
    json spectrum = json::object();
    for (auto [v, cnt] : rep.spectrum) spectrum[std::to_string(v)] = cnt;
    json classes = json::object();
    for (auto [i, cnt] : rep.omega_classes) classes[std::to_string(i)] = cnt;
    return json{{"per_b", per_b}, {"beta", rep.beta}, {"spectrum", spectrum},
                {"omega_classes", classes}};
}

inline json verification_report_json(const VerificationReport& rep) {
    json hyps = json::array();
    for (const auto& h : rep.hypotheses)
        hyps.push_back(json{{"condition", h.condition}, {"holds", h.holds}});
    json claims = json::array();
    for (const auto& c : rep.claims)
        claims.push_back(json{{"id", c.id}, {"pass", c.pass}, {"witness", c.witness}});
    json out{{"q", rep.q},
             {"subject", subject_name(rep.subject)},
             {"hypotheses", hyps},
             {"claims", claims},
             {"overall", overall_name(rep.overall)}};
    if (!rep.error.empty()) out["error"] = rep.error;
    return out;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

inline std::string field_info_csv(const FieldCtx& ctx, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= ctx.characteristic();
    std::ostringstream os;
    os << "key,value\n";
    os << "p," << ctx.characteristic() << "\n";
    os << "k," << k << "\n";
    os << "q," << q << "\n";
    os << "q_squared," << ctx.order() << "\n";
    std::string mod;
    for (std::size_t i = 0; i < ctx.spec().modulus.size(); ++i)
        mod += (i ? ";" : "") + std::to_string(ctx.spec().modulus[i]);
    os << "modulus," << mod << "\n";
    os << "generator," << ctx.generator().v << "\n";
    return os.str();
}

// One row per b over the whole field, including zero rows.
inline std::string spectrum_csv(const SpectrumReport& rep) {
    std::ostringstream os;
    os << "b,delta\n";
    if (rep.per_b)
        for (std::size_t b = 0; b < rep.per_b->size(); ++b)
            os << b << "," << (*rep.per_b)[b] << "\n";
    return os.str();
}

// One row per b with a nonzero boomerang count.
inline std::string bct_csv(const BctReport& rep) {
    std::ostringstream os;
    os << "b,beta\n";
    for (auto [b, cnt] : rep.per_b) os << b << "," << cnt << "\n";
    return os.str();
}

inline std::string verify_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "q,subject,claim,status,witness\n";
    for (const auto& rep : reports) {
        for (const auto& h : rep.hypotheses)
            os << rep.q << "," << subject_name(rep.subject) << ","
               << detail::csv_quote("hyp: " + h.condition) << ","
               << (h.holds ? "holds" : "violated") << ",\"\"\n";
        for (const auto& c : rep.claims)
            os << rep.q << "," << subject_name(rep.subject) << "," << c.id << ","
               << (c.pass ? "pass" : "fail") << "," << detail::csv_quote(c.witness) << "\n";
        os << rep.q << "," << subject_name(rep.subject) << ",overall,"
           << overall_name(rep.overall) << "," << detail::csv_quote(rep.error) << "\n";
    }
    return os.str();
}

} // namespace bctforge
