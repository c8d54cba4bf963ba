// Machine-readable result tables. CSV uses a header row, comma separator,
// shortest round-trip decimals, and '#'-prefixed footer lines for the
// summary; JSON carries rows as objects plus a summary object. Both are
// byte-deterministic for a fixed RunConfig.

#ifndef TAUBER_TABLE_HPP
#define TAUBER_TABLE_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tauber {

using Cell = std::variant<double, std::int64_t, std::string>;

inline std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

inline std::string format_cell(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c))
        return std::to_string(std::get<std::int64_t>(c));
    return std::get<std::string>(c);
}

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
    bool asserted{false};  // whether `ok` participates in the exit status
    bool ok{true};

    void add_summary(std::string key, Cell value) {
        summary.emplace_back(std::move(key), std::move(value));
    }

    std::string to_csv() const {
        std::string out;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            out += columns[i];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += format_cell(row[i]);
            }
            out += '\n';
        }
        for (const auto& [k, v] : summary) {
            out += "# ";
            out += k;
            out += '=';
            out += format_cell(v);
            out += '\n';
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["table"] = name;
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
                const Cell& c = row[i];
                if (std::holds_alternative<double>(c))
                    r[columns[i]] = std::get<double>(c);
                else if (std::holds_alternative<std::int64_t>(c))
                    r[columns[i]] = std::get<std::int64_t>(c);
                else
                    r[columns[i]] = std::get<std::string>(c);
            }
            jrows.push_back(std::move(r));
        }
        j["rows"] = std::move(jrows);
        nlohmann::json s;
        for (const auto& [k, v] : summary) {
            if (std::holds_alternative<double>(v)) s[k] = std::get<double>(v);
            else if (std::holds_alternative<std::int64_t>(v)) s[k] = std::get<std::int64_t>(v);
            else s[k] = std::get<std::string>(v);
        }
        j["summary"] = std::move(s);
        j["ok"] = ok;
        return j;
    }
};

} // namespace tauber

#endif
