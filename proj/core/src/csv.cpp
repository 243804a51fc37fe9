#include "varlingam/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "varlingam/errors.hpp"

namespace varlingam {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line,
                                           char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

double parse_cell(std::string_view token, std::ptrdiff_t row,
                  std::ptrdiff_t col) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
        throw ParseError(row, col, std::string(token));
    }
    return value;
}

}  // namespace

DataMatrix load_csv(const std::string& path, CsvOptions options) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw EmptyFile(path);

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw EmptyFile(path);

    std::size_t next = 0;
    std::vector<std::string> names;
    std::size_t width = 0;
    if (options.header) {
        const auto fields = split_fields(lines[next], options.delimiter);
        ++next;
        width = fields.size();
        names.reserve(width);
        for (const auto field : fields) names.emplace_back(field);
        if (next == lines.size()) throw EmptyFile(path);
    } else {
        width = split_fields(lines[next], options.delimiter).size();
    }

    const std::size_t data_rows = lines.size() - next;
    Matrix values(static_cast<Index>(data_rows), static_cast<Index>(width));
    for (std::size_t r = 0; r < data_rows; ++r) {
        const auto fields = split_fields(lines[next + r], options.delimiter);
        if (fields.size() != width) {
            throw RaggedRows(static_cast<std::ptrdiff_t>(r), fields.size(),
                             width);
        }
        for (std::size_t c = 0; c < width; ++c) {
            values(static_cast<Index>(r), static_cast<Index>(c)) =
                parse_cell(fields[c], static_cast<std::ptrdiff_t>(r),
                           static_cast<std::ptrdiff_t>(c));
        }
    }

    if (options.header) {
        DataMatrix x;
        x.values = std::move(values);
        x.names = std::move(names);
        return x;
    }
    return make_data_matrix(std::move(values));
}

void save_csv(const std::string& path, const DataMatrix& x, char delimiter) {
    std::ostringstream out;
    for (Index j = 0; j < x.cols(); ++j) {
        if (j > 0) out << delimiter;
        out << x.names[static_cast<std::size_t>(j)];
    }
    out << '\n';
    char buffer[64];
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = 0; j < x.cols(); ++j) {
            if (j > 0) out << delimiter;
            std::snprintf(buffer, sizeof(buffer), "%.17g", x.values(i, j));
            out << buffer;
        }
        out << '\n';
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw EmptyFile(path);
    file << out.str();
}

}  // namespace varlingam
