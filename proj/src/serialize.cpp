#include "consensus/serialize.hpp"

#include "consensus/errors.hpp"

#include <cstdio>

namespace consensus {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string render_cell(const Rows& value) {
    switch (value.type()) {
        case nlohmann::detail::value_t::null:
            return "";
        case nlohmann::detail::value_t::number_float:
            return format_double(value.get<double>());
        case nlohmann::detail::value_t::array: {
            std::string out;
            for (const auto& item : value) {
                if (!out.empty()) out += ';';
                out += render_cell(item);
            }
            return out;
        }
        case nlohmann::detail::value_t::boolean:
            return value.get<bool>() ? "true" : "false";
        case nlohmann::detail::value_t::string:
            return value.get<std::string>();
        default:
            return value.dump();
    }
}

} // namespace

std::string to_csv(const Rows& rows) {
    const Rows table = rows.is_array() ? rows : Rows::array({rows});
    if (table.empty()) return "";

    std::string out;
    bool first = true;
    for (const auto& [key, unused] : table.front().items()) {
        (void)unused;
        if (!first) out += ',';
        out += key;
        first = false;
    }
    out += '\n';

    for (const auto& row : table) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            if (!first) out += ',';
            out += render_cell(value);
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string to_json_text(const Rows& rows) { return rows.dump(2) + "\n"; }

} // namespace consensus
