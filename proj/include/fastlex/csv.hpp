#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fastlex::csv {

// Plain comma-separated table without quoting.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of `name` in the header; throws ConfigError when absent.
    std::size_t column(std::string_view name) const;
};

std::vector<std::string> split(std::string_view line, char sep = ',');
Table read(std::istream& in);

} // namespace fastlex::csv
