#include "fastlex/csv.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "fastlex/types.hpp"

namespace fastlex::csv {

std::size_t Table::column(std::string_view name) const
{
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw ConfigError(fmt::format("csv has no column '{}'", name));
    }
    return static_cast<std::size_t>(it - header.begin());
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        fields.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return fields;
}

Table read(std::istream& in)
{
    Table table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (first) {
            table.header = std::move(fields);
            first = false;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ConfigError(fmt::format("csv row has {} fields, header has {}", fields.size(), table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

} // namespace fastlex::csv
