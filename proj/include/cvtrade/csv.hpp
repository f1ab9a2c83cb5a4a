#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace cvtrade {

// Formats numbers with %.9g so emitted tables are byte-identical across runs
// and platforms with IEEE doubles.
inline std::string csv_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

inline std::string csv_integer(std::uint64_t x) { return std::to_string(x); }
inline std::string csv_integer(int x) { return std::to_string(x); }

// Adjudication rows leave parameters that do not apply blank.
inline std::string csv_number_or_blank(double x) {
    return std::isnan(x) ? std::string() : csv_number(x);
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names) { line(names); }

    void row(const std::vector<std::string>& fields) { line(fields); }

private:
    void line(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

    std::ostream& out_;
};

}  // namespace cvtrade
