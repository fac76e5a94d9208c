#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace obtusity::report {

struct ResultRow {
    std::string target;
    std::string method;  // "mc", "quad", "exact", "verify"
    double value = 0.0;
    double stderr_or_bound = 0.0;
    std::optional<double> reference;
    std::optional<double> z_or_dev;
    std::optional<std::string> decimal;
    std::map<std::string, std::string> coefficients;
};

struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<ResultRow> rows;
    std::optional<bool> pass;
    std::optional<double> wall_ms;
};

namespace detail {

inline nlohmann::json row_json(const ResultRow& r) {
    nlohmann::json j;
    j["target"] = r.target;
    j["method"] = r.method;
    j["value"] = r.value;
    j["stderr_or_bound"] = r.stderr_or_bound;
    if (r.reference) j["reference"] = *r.reference;
    if (r.z_or_dev) j["z_or_dev"] = *r.z_or_dev;
    if (r.decimal) j["decimal"] = *r.decimal;
    if (!r.coefficients.empty()) j["coefficients"] = r.coefficients;
    return j;
}

// Shortest round-trip representation, identical to the JSON encoding.
inline std::string number(double v) { return nlohmann::json(v).dump(); }

}  // namespace detail

// nlohmann::json keeps keys in sorted order, so the dump is deterministic.
inline std::string to_json(const RunReport& rep) {
    nlohmann::json j;
    j["command"] = rep.command;
    j["params"] = rep.params;
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows) rows.push_back(detail::row_json(r));
    j["results"] = rows;
    if (rep.pass) j["pass"] = *rep.pass;
    if (rep.wall_ms) j["wall_ms"] = *rep.wall_ms;
    return j.dump(2) + "\n";
}

inline std::string to_csv(const RunReport& rep) {
    std::string out = "target,method,value,stderr_or_bound,reference,z_or_dev,decimal\n";
    for (const auto& r : rep.rows) {
        out += r.target + ',' + r.method + ',' + detail::number(r.value) + ',' +
               detail::number(r.stderr_or_bound) + ',';
        if (r.reference) out += detail::number(*r.reference);
        out += ',';
        if (r.z_or_dev) out += detail::number(*r.z_or_dev);
        out += ',';
        if (r.decimal) out += *r.decimal;
        out += '\n';
    }
    return out;
}

}  // namespace obtusity::report
