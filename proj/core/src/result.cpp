#include "varlingam/result.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "varlingam/errors.hpp"

namespace varlingam {

const char* engine_name(Engine e) {
    return e == Engine::baseline ? "baseline" : "heuristic";
}

std::optional<Engine> parse_engine(std::string_view name) {
    if (name == "baseline") return Engine::baseline;
    if (name == "heuristic") return Engine::heuristic;
    return std::nullopt;
}

double timing(const DiscoveryResult& r, std::string_view phase) {
    for (const auto& [name, seconds] : r.timings) {
        if (name == phase) return seconds;
    }
    return 0.0;
}

namespace {

void append_double(std::string& out, double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    out += buffer;
}

void append_matrix(std::string& out, const std::string& header,
                   const Matrix& a) {
    out += '[';
    out += header;
    out += "]\n";
    out += std::to_string(a.rows());
    out += ' ';
    out += std::to_string(a.cols());
    out += '\n';
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ' ';
            append_double(out, a(i, j));
        }
        out += '\n';
    }
    out += '\n';
}

bool serializable_name(const std::string& name) {
    if (name.empty()) return false;
    if (name.front() == '#') return false;
    if (name.front() == ' ' || name.back() == ' ') return false;
    if (name.front() == '[' && name.back() == ']') return false;
    for (const char c : name) {
        if (c == '\n' || c == '\r') return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
T parse_number(std::string_view token, std::ptrdiff_t line) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
        throw ParseError(line, 0, std::string(token));
    }
    return value;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

struct MatrixReader {
    Matrix* target = nullptr;
    bool dims_read = false;
    Index next_row = 0;

    void finish(std::ptrdiff_t line) const {
        if (target != nullptr && (!dims_read || next_row != target->rows())) {
            throw ParseError(line, 0, "incomplete matrix block");
        }
    }

    void feed(std::string_view s, std::ptrdiff_t line) {
        const auto fields = split_whitespace(s);
        if (!dims_read) {
            if (fields.size() != 2) throw ParseError(line, 0, std::string(s));
            const auto rows = parse_number<std::ptrdiff_t>(fields[0], line);
            const auto cols = parse_number<std::ptrdiff_t>(fields[1], line);
            if (rows < 0 || cols < 0) throw ParseError(line, 0, std::string(s));
            target->resize(rows, cols);
            dims_read = true;
            return;
        }
        if (next_row >= target->rows() ||
            static_cast<Index>(fields.size()) != target->cols()) {
            throw ParseError(line, 0, std::string(s));
        }
        for (Index j = 0; j < target->cols(); ++j) {
            (*target)(next_row, j) = parse_number<double>(
                fields[static_cast<std::size_t>(j)], line);
        }
        ++next_row;
    }
};

}  // namespace

std::string format_result(const DiscoveryResult& r) {
    for (const auto& name : r.names) {
        if (!serializable_name(name)) {
            throw DegenerateShape("variable name cannot be serialized: " + name);
        }
    }

    std::string out;
    out += "# discovery result, format 1\n";
    out += "# matrix entry (i, j) is the effect of variable j on variable i\n";
    out += "\n[config]\n";
    out += "engine = ";
    out += engine_name(r.config.engine);
    out += "\nlags = " + std::to_string(r.config.lags);
    out += "\nlags_used = " + std::to_string(r.config.lags_used);
    out += "\nselect_lags = " + std::to_string(r.config.select_lags);
    out += "\nprune = ";
    append_double(out, r.config.prune);
    out += "\nseed = " + std::to_string(r.config.seed);
    out += "\ninput = " + r.config.input;
    out += "\n\n[names]\n";
    for (const auto& name : r.names) {
        out += name;
        out += '\n';
    }
    out += "\n[order]\n";
    for (std::size_t k = 0; k < r.order.order.size(); ++k) {
        if (k > 0) out += ' ';
        out += std::to_string(r.order.order[k]);
    }
    out += "\n\n";
    append_matrix(out, "b0", r.graph.b0);
    for (std::size_t tau = 0; tau < r.graph.lagged.size(); ++tau) {
        append_matrix(out, "lag " + std::to_string(tau + 1),
                      r.graph.lagged[tau]);
    }
    // The thread count never changes the numbers above, so it is echoed down
    // here with the timings, keeping everything before this section
    // byte-reproducible across thread counts.
    out += "[timings]\n";
    out += "threads = " + std::to_string(r.config.threads);
    out += '\n';
    for (const auto& [phase, seconds] : r.timings) {
        out += phase;
        out += " = ";
        append_double(out, seconds);
        out += '\n';
    }
    return out;
}

DiscoveryResult parse_result(const std::string& text) {
    DiscoveryResult r;
    r.graph.b0.resize(0, 0);

    enum class Section { none, config, names, order, matrix, timings };
    Section section = Section::none;
    MatrixReader reader;

    std::istringstream stream(text);
    std::string raw;
    std::ptrdiff_t line_no = -1;
    bool b0_seen = false;

    const auto parse_kv = [](std::string_view s, std::ptrdiff_t line) {
        const std::size_t pos = s.find('=');
        if (pos == std::string_view::npos) {
            throw ParseError(line, 0, std::string(s));
        }
        return std::pair{trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
    };

    while (std::getline(stream, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string_view s = trim(raw);
        if (s.empty() || s.front() == '#') continue;

        if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
            reader.finish(line_no);
            reader = MatrixReader{};
            const std::string_view tag = s.substr(1, s.size() - 2);
            if (tag == "config") {
                section = Section::config;
            } else if (tag == "names") {
                section = Section::names;
            } else if (tag == "order") {
                section = Section::order;
            } else if (tag == "timings") {
                section = Section::timings;
            } else if (tag == "b0") {
                section = Section::matrix;
                reader.target = &r.graph.b0;
                b0_seen = true;
            } else if (tag.starts_with("lag ")) {
                section = Section::matrix;
                const auto tau = parse_number<std::size_t>(tag.substr(4), line_no);
                if (tau != r.graph.lagged.size() + 1) {
                    throw ParseError(line_no, 0, std::string(tag));
                }
                r.graph.lagged.emplace_back();
                reader.target = &r.graph.lagged.back();
            } else {
                throw ParseError(line_no, 0, std::string(tag));
            }
            continue;
        }

        switch (section) {
            case Section::none:
                throw ParseError(line_no, 0, std::string(s));
            case Section::config: {
                const auto [key, value] = parse_kv(s, line_no);
                if (key == "engine") {
                    const auto engine = parse_engine(value);
                    if (!engine) throw ParseError(line_no, 0, std::string(value));
                    r.config.engine = *engine;
                } else if (key == "lags") {
                    r.config.lags = parse_number<int>(value, line_no);
                } else if (key == "lags_used") {
                    r.config.lags_used = parse_number<int>(value, line_no);
                } else if (key == "select_lags") {
                    r.config.select_lags = parse_number<int>(value, line_no);
                } else if (key == "prune") {
                    r.config.prune = parse_number<double>(value, line_no);
                } else if (key == "seed") {
                    r.config.seed = parse_number<std::uint64_t>(value, line_no);
                } else if (key == "input") {
                    r.config.input = std::string(value);
                } else {
                    throw ParseError(line_no, 0, std::string(key));
                }
                break;
            }
            case Section::names:
                r.names.push_back(raw);
                break;
            case Section::order:
                for (const auto field : split_whitespace(s)) {
                    r.order.order.push_back(parse_number<int>(field, line_no));
                }
                break;
            case Section::matrix:
                reader.feed(s, line_no);
                break;
            case Section::timings: {
                const auto [key, value] = parse_kv(s, line_no);
                if (key == "threads") {
                    r.config.threads = parse_number<int>(value, line_no);
                } else {
                    r.timings.emplace_back(std::string(key),
                                           parse_number<double>(value, line_no));
                }
                break;
            }
        }
    }
    reader.finish(line_no);

    const auto m = static_cast<Index>(r.names.size());
    if (!b0_seen || m == 0) {
        throw ShapeMismatch("result file is missing names or the b0 block");
    }
    if (!is_permutation_of(r.order, static_cast<int>(m))) {
        throw ShapeMismatch("result order is not a permutation of the variables");
    }
    if (r.graph.b0.rows() != m || r.graph.b0.cols() != m) {
        throw ShapeMismatch("b0 block does not match the variable count");
    }
    for (const Matrix& lag : r.graph.lagged) {
        if (lag.rows() != m || lag.cols() != m) {
            throw ShapeMismatch("lag block does not match the variable count");
        }
    }
    return r;
}

void save_result(const std::string& path, const DiscoveryResult& r) {
    const std::string text = format_result(r);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw EmptyFile(path);
    file << text;
}

DiscoveryResult load_result(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw EmptyFile(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_result(buffer.str());
}

}  // namespace varlingam
