#ifndef REFLEX_REPORT_HPP
#define REFLEX_REPORT_HPP

// Machine-readable command reports ("report-v1") and their text rendering.
// Needs nlohmann/json (vendored as json.hpp).

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflex/errors.hpp"

namespace reflex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "report-v1";

enum class Verdict { Pass, Fail, Inapplicable, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

inline Verdict parse_verdict(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "inapplicable") return Verdict::Inapplicable;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw ParseError("unknown verdict '" + s + "'");
}

struct Check {
    std::string name;
    Verdict verdict = Verdict::Pass;
    Json evidence = Json::object();

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string command;
    Json arguments = Json::object();
    std::string input_digest;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::optional<double> timing_ms;

    Check& add(std::string name, Verdict v, Json evidence = Json::object()) {
        checks.push_back({std::move(name), v, std::move(evidence)});
        return checks.back();
    }

    bool any_failed() const {
        for (const auto& c : checks)
            if (c.verdict == Verdict::Fail) return true;
        return false;
    }

    /// 0 when nothing failed, 1 otherwise. Usage errors (2) never produce a report.
    int exit_code() const { return any_failed() ? 1 : 0; }

    friend bool operator==(const Report&, const Report&) = default;
};

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return out;
}

inline Json to_json(const Report& r) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = r.command;
    j["arguments"] = r.arguments;
    j["input_digest"] = r.input_digest;
    j["seed"] = r.seed;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"evidence", c.evidence}});
    j["checks"] = std::move(checks);
    Json summary = {{"pass", 0}, {"fail", 0}, {"inapplicable", 0}, {"inconclusive", 0}};
    for (const auto& c : r.checks) summary[to_string(c.verdict)] = summary[to_string(c.verdict)].get<int>() + 1;
    j["summary"] = std::move(summary);
    j["exit_code"] = r.exit_code();
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

inline Report report_from_json(const Json& j) {
    try {
        if (j.at("schema").get<std::string>() != kReportSchema) throw ParseError("unsupported report schema");
        Report r;
        r.command = j.at("command").get<std::string>();
        r.arguments = j.at("arguments");
        r.input_digest = j.at("input_digest").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), parse_verdict(c.at("verdict").get<std::string>()),
                                c.at("evidence")});
        if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

inline Report parse_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report is not JSON: ") + e.what());
    }
    return report_from_json(j);
}

namespace detail {

inline void render_value(std::ostringstream& os, const Json& v, const std::string& indent) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find('\n') == std::string::npos) {
            os << s << "\n";
            return;
        }
        os << "\n";
        std::istringstream is(s);
        std::string line;
        while (std::getline(is, line)) os << indent << "  " << line << "\n";
        return;
    }
    if (v.is_object()) {
        os << "\n";
        for (const auto& [k, x] : v.items()) {
            os << indent << "  " << k << ": ";
            render_value(os, x, indent + "  ");
        }
        return;
    }
    os << v.dump() << "\n";
}

}  // namespace detail

/// Human form, generated from the same tree as the JSON form.
inline std::string render_text(const Report& r) {
    const Json j = to_json(r);
    std::ostringstream os;
    os << "reflex " << j["command"].get<std::string>() << "  [" << kReportSchema << ", input " << r.input_digest
       << ", seed " << r.seed << "]\n";
    for (const auto& c : j["checks"]) {
        os << "[" << c["verdict"].get<std::string>() << "] " << c["name"].get<std::string>() << "\n";
        for (const auto& [k, v] : c["evidence"].items()) {
            os << "    " << k << ": ";
            detail::render_value(os, v, "    ");
        }
    }
    const auto& s = j["summary"];
    os << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["inapplicable"] << " inapplicable, "
       << s["inconclusive"] << " inconclusive\n";
    if (r.timing_ms) os << "time: " << *r.timing_ms << " ms\n";
    return os.str();
}

}  // namespace reflex

#endif
