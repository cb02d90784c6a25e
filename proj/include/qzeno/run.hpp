#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qzeno/emit.hpp"
#include "qzeno/zeno.hpp"

namespace qzeno::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitNoCrossover = 4;

enum class Command { rate, sweep, crossover, figure, integral };
enum class OutputFormat { csv, json };

/// Time (or x) grid given as START:STOP:POINTS[:log].
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    bool log_scale = false;

    std::vector<double> values() const;
};

GridSpec parse_grid(const std::string& text);
std::pair<double, double> parse_window(const std::string& text);

struct RunConfig {
    Command command = Command::rate;
    PhysicalParams params;
    QuadratureConfig quadrature;
    double t = 0.0;
    int n = 1;
    std::optional<GridSpec> grid;
    std::string preset;
    std::optional<std::pair<double, double>> window;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty -> stdout
};

/// Executes one command against the library and returns its output table.
/// Throws std::invalid_argument on config errors, NoCrossoverError when no
/// QZE/AZE transition exists on the window, std::runtime_error otherwise.
Table run(const RunConfig& cfg);

std::string render(const Table& table, OutputFormat format);

}  // namespace qzeno::cli
