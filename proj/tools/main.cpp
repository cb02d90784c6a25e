#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qzeno/run.hpp"

namespace {

int run_command(const qzeno::cli::RunConfig& cfg) {
    using namespace qzeno::cli;
    Table table;
    try {
        table = run(cfg);
    } catch (const qzeno::NoCrossoverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoCrossover;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }

    const std::string text = render(table, cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output path " << cfg.out_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace qzeno::cli;

    CLI::App app{
        "Decay rate of a Gaussian wave packet under Ohmic dissipation: "
        "single vs repeated-measurement rates and the Zeno/anti-Zeno crossover"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string grid_text, window_text, format_text = "csv";

    app.add_option("--gamma", cfg.params.gamma, "Ohmic friction rate (1/time)")
        ->default_val(1.0);
    app.add_option("--t", cfg.t, "total time");
    app.add_option("--n", cfg.n, "number of measurements")->default_val(1);
    app.add_option("--sigma-sq", cfg.params.sigma_sq, "initial packet variance")
        ->default_val(1.0);
    app.add_option("--mass", cfg.params.mass, "particle mass")->default_val(1.0);
    app.add_option("--hbar", cfg.params.hbar, "Planck constant")->default_val(1.0);
    app.add_option("--temperature", cfg.params.temperature,
                   "bath temperature in energy units (experimental; 0 = validated path)")
        ->default_val(0.0);
    app.add_option("--grid", grid_text, "grid as START:STOP:POINTS[:log]");
    app.add_option("--preset", cfg.preset, "figure preset: fig1 or fig2");
    app.add_option("--window", window_text, "crossover search window A:B");
    app.add_option("--format", format_text, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--rel-tol", cfg.quadrature.rel_tol, "quadrature relative tolerance")
        ->default_val(1e-10);
    app.set_config("--config", "", "flat key=value config file; flags override");

    app.add_subcommand("rate", "single (t, n) rate record with width breakdown");
    app.add_subcommand("sweep", "rate curve over a time grid");
    app.add_subcommand("crossover", "locate the QZE -> AZE transition time");
    app.add_subcommand("figure", "reproduce the fig1/fig2 comparison tables");
    app.add_subcommand("integral", "tabulate I(x) against its asymptotic forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (app.got_subcommand("rate")) cfg.command = Command::rate;
    if (app.got_subcommand("sweep")) cfg.command = Command::sweep;
    if (app.got_subcommand("crossover")) cfg.command = Command::crossover;
    if (app.got_subcommand("figure")) cfg.command = Command::figure;
    if (app.got_subcommand("integral")) cfg.command = Command::integral;

    try {
        if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
        if (!window_text.empty()) cfg.window = parse_window(window_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    cfg.format = (format_text == "json") ? OutputFormat::json : OutputFormat::csv;

    return run_command(cfg);
}
