#pragma once

// CSV emission: 17 significant digits, scientific notation, '.' decimal
// separator, LF line endings. Flag columns render as bare integers.

#include "polmix/sweep.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace polmix {

inline std::string format_csv_value(double value, bool integral) {
    char buf[40];
    if (integral) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(value));
    } else {
        std::snprintf(buf, sizeof buf, "%.16e", value);
    }
    return buf;
}

inline void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c].name;
    }
    os << '\n';
    const std::size_t rows = table.rows();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) os << ',';
            os << format_csv_value(table.columns[c].values[r], table.columns[c].integral);
        }
        os << '\n';
    }
}

inline std::string csv_string(const Table& table) {
    std::ostringstream oss;
    write_csv(oss, table);
    return oss.str();
}

inline void write_csv_file(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv_file: cannot open " + path.string());
    write_csv(out, table);
    if (!out) throw std::runtime_error("write_csv_file: write failed for " + path.string());
}

}  // namespace polmix
