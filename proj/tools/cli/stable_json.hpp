#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace cyclic::cli {

/// Byte-stable JSON text: object keys sorted (nlohmann::json objects are
/// ordered maps), two-space indent, reals printed with 17 significant
/// digits so they round-trip exactly. Non-finite reals become null.
inline void write_stable_json(const nlohmann::json& j, std::string& out, int depth = 0) {
    const auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            pad(depth + 1);
            out += nlohmann::json(it.key()).dump();
            out += ": ";
            write_stable_json(it.value(), out, depth + 1);
        }
        out += "\n";
        pad(depth);
        out += "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool flat = std::none_of(j.begin(), j.end(),
                                       [](const auto& v) { return v.is_structured(); });
        if (flat) {
            out += "[";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ", ";
                first = false;
                write_stable_json(v, out, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ",\n";
            first = false;
            pad(depth + 1);
            write_stable_json(v, out, depth + 1);
        }
        out += "\n";
        pad(depth);
        out += "]";
        return;
    }
    case nlohmann::json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out += "null";
            return;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

inline std::string stable_json(const nlohmann::json& j) {
    std::string out;
    write_stable_json(j, out);
    out += "\n";
    return out;
}

} // namespace cyclic::cli
