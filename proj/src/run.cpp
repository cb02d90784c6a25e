#include "qzeno/run.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qzeno::cli {

namespace {

std::string command_name(Command c) {
    switch (c) {
        case Command::rate: return "rate";
        case Command::sweep: return "sweep";
        case Command::crossover: return "crossover";
        case Command::figure: return "figure";
        case Command::integral: return "integral";
    }
    return "?";
}

void append_common_metadata(Table& table, const RunConfig& cfg) {
    table.metadata.emplace_back("tool", "qzeno");
    table.metadata.emplace_back("version", kVersion);
    table.metadata.emplace_back("command", command_name(cfg.command));
    table.metadata.emplace_back("gamma", format_double(cfg.params.gamma));
    table.metadata.emplace_back("mass", format_double(cfg.params.mass));
    table.metadata.emplace_back("hbar", format_double(cfg.params.hbar));
    table.metadata.emplace_back("sigma_sq", format_double(cfg.params.sigma_sq));
    table.metadata.emplace_back("temperature", format_double(cfg.params.temperature));
    table.metadata.emplace_back("n", std::to_string(cfg.n));
    table.metadata.emplace_back("rel_tol", format_double(cfg.quadrature.rel_tol));
    table.metadata.emplace_back("units",
                                "caller-consistent; only gamma*t and hbar*t/(m*sigma^2) matter");
}

Table cmd_rate(const RunConfig& cfg) {
    if (!(cfg.t >= 0.0)) throw std::invalid_argument("rate: --t must be >= 0");
    const WidthBreakdown w = width_sq(cfg.t, cfg.params, cfg.quadrature);
    const double r_single = survival_ratio(cfg.t, cfg.params, cfg.quadrature);
    const double r_rep = repeated_rate({cfg.t, cfg.n}, cfg.params, cfg.quadrature);

    Table table;
    append_common_metadata(table, cfg);
    table.columns = {"t",        "r_single",   "r_repeated", "regime",
                     "sigma_sq", "sigma_q_sq", "msd",        "w_sq"};
    table.rows.push_back({cfg.t, r_single, r_rep, regime_name(classify_regime(r_single, r_rep)),
                          w.sigma_sq, w.sigma_q_sq, w.msd, w.total});
    return table;
}

Table rate_curve_table(const RateCurve& curve, const RunConfig& cfg) {
    Table table;
    append_common_metadata(table, cfg);
    table.columns = {"t", "r_single", "r_repeated", "regime"};
    for (const RatePoint& pt : curve)
        table.rows.push_back({pt.t, pt.r_single, pt.r_repeated, regime_name(pt.regime)});
    return table;
}

Table cmd_sweep(const RunConfig& cfg) {
    if (!cfg.grid) throw std::invalid_argument("sweep: --grid is required");
    return rate_curve_table(sweep(cfg.grid->values(), cfg.n, cfg.params, cfg.quadrature), cfg);
}

Table cmd_crossover(const RunConfig& cfg) {
    if (cfg.n == 1)
        throw NoCrossoverError("crossover: delta is identically zero for n = 1", 0.0, 0.0);
    std::pair<double, double> window;
    if (cfg.window) {
        window = *cfg.window;
    } else {
        if (!(cfg.params.gamma > 0.0))
            throw std::invalid_argument(
                "crossover: default window needs gamma > 0; pass --window explicitly");
        window = {1e-2, 1e3 / cfg.params.gamma};
    }
    const CrossoverResult res = transition_time(cfg.n, cfg.params, cfg.quadrature, window);

    Table table;
    append_common_metadata(table, cfg);
    table.metadata.emplace_back("window_lo", format_double(window.first));
    table.metadata.emplace_back("window_hi", format_double(window.second));
    table.columns = {"t_star",   "gamma_t_star", "bracket_lo", "bracket_hi",
                     "residual", "iterations",   "multiple_roots"};
    table.rows.push_back({res.t_star, res.gamma_t_star, res.bracket.first, res.bracket.second,
                          res.residual, static_cast<long long>(res.iterations),
                          std::string(res.multiple_roots ? "true" : "false")});
    return table;
}

Table cmd_figure(const RunConfig& cfg) {
    RunConfig fig = cfg;
    fig.params = PhysicalParams{};  // hbar = m = sigma^2 = 1
    fig.params.gamma = 0.1;
    fig.n = 20;
    if (cfg.preset == "fig1") {
        fig.grid = GridSpec{0.0, 5.0, 101, false};
    } else if (cfg.preset == "fig2") {
        fig.grid = GridSpec{0.0, 400.0, 401, false};
    } else {
        throw std::invalid_argument("figure: --preset must be fig1 or fig2");
    }
    Table table =
        rate_curve_table(sweep(fig.grid->values(), fig.n, fig.params, fig.quadrature), fig);
    table.metadata.emplace_back("preset", cfg.preset);
    table.metadata.emplace_back("units_assumption",
                                "natural units hbar = m = sigma^2 = 1 (figures leave units "
                                "unstated; only gamma*t is physical)");
    return table;
}

Table cmd_integral(const RunConfig& cfg) {
    if (!cfg.grid) throw std::invalid_argument("integral: --grid is required");
    if (!(cfg.grid->start > 0.0))
        throw std::invalid_argument("integral: grid must start at x > 0 (I diverges at 0)");

    Table table;
    append_common_metadata(table, cfg);
    table.columns = {"x",           "integral",      "asymptote_small_gt",
                     "asymptote_large_gt", "rel_dev_small", "rel_dev_large"};
    for (double x : cfg.grid->values()) {
        const double value = zeno_integral(x, cfg.quadrature);
        const double small_form = 0.5 * (-std::log(x) + 1.5 - kEulerGamma);
        const double large_form = (std::log(x) + kEulerGamma) / (x * x);
        table.rows.push_back({x, value, small_form, large_form, value / small_form - 1.0,
                              value / large_form - 1.0});
    }
    return table;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    if (points < 1) throw std::invalid_argument("grid: POINTS must be >= 1");
    if (points == 1) return {start};
    if (!(stop > start)) throw std::invalid_argument("grid: STOP must be > START");
    if (log_scale && !(start > 0.0))
        throw std::invalid_argument("grid: log scale requires START > 0");
    std::vector<double> out;
    out.reserve(points);
    if (log_scale) {
        const double step = (std::log(stop) - std::log(start)) / (points - 1);
        for (int i = 0; i < points; ++i) out.push_back(std::exp(std::log(start) + i * step));
    } else {
        const double step = (stop - start) / (points - 1);
        for (int i = 0; i < points; ++i) out.push_back(start + i * step);
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

GridSpec parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("grid: expected START:STOP:POINTS[:log]");
    GridSpec spec;
    try {
        spec.start = std::stod(parts[0]);
        spec.stop = std::stod(parts[1]);
        spec.points = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid: non-numeric field in START:STOP:POINTS");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "lin")
            throw std::invalid_argument("grid: scale must be 'log' or 'lin'");
        spec.log_scale = parts[3] == "log";
    }
    return spec;
}

std::pair<double, double> parse_window(const std::string& text) {
    const auto sep = text.find(':');
    if (sep == std::string::npos) throw std::invalid_argument("window: expected A:B");
    try {
        return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("window: non-numeric bound");
    }
}

Table run(const RunConfig& cfg) {
    cfg.params.validate();
    cfg.quadrature.validate();
    if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
    switch (cfg.command) {
        case Command::rate: return cmd_rate(cfg);
        case Command::sweep: return cmd_sweep(cfg);
        case Command::crossover: return cmd_crossover(cfg);
        case Command::figure: return cmd_figure(cfg);
        case Command::integral: return cmd_integral(cfg);
    }
    throw std::invalid_argument("unknown command");
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? write_csv(table) : write_json(table);
}

}  // namespace qzeno::cli
