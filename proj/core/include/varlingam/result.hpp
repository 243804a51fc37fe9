#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varlingam/adjacency.hpp"
#include "varlingam/data_matrix.hpp"

namespace varlingam {

enum class Engine { baseline, heuristic };

const char* engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view name);

/// Parameters of one discovery run, echoed verbatim into the result file.
struct RunConfig {
    Engine engine = Engine::heuristic;
    int lags = 1;
    int lags_used = 0;  // effective VAR order after selection; set by the run
    int select_lags = 0;  // when > 0, lag order is chosen up to this cap
    double prune = 0.05;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string input;

    bool operator==(const RunConfig&) const = default;
};

/// Phase name and wall-clock seconds, in execution order.
using Timings = std::vector<std::pair<std::string, double>>;

/// Everything one discovery run produces.
struct DiscoveryResult {
    RunConfig config;
    std::vector<std::string> names;
    CausalOrder order;
    CausalGraph graph;
    Timings timings;
};

/// Seconds recorded for a phase, or 0 if the phase is absent.
double timing(const DiscoveryResult& r, std::string_view phase);

/// Renders a result as the structured text format: key-value sections for
/// config and timings, one name per line, the order on one line, and matrix
/// blocks with a dimension line followed by space-separated rows. Numbers use
/// 17 significant digits, so parsing the text back reproduces every field
/// exactly. The timings section is always last, so everything before it is
/// reproducible byte for byte across reruns with the same configuration.
std::string format_result(const DiscoveryResult& r);

/// Inverse of format_result. Throws ParseError with the zero-based line number
/// in the row field.
DiscoveryResult parse_result(const std::string& text);

void save_result(const std::string& path, const DiscoveryResult& r);
DiscoveryResult load_result(const std::string& path);

}  // namespace varlingam
