#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "qzeno/run.hpp"

using namespace qzeno;
using namespace qzeno::cli;

namespace {
RunConfig base_config(Command cmd) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.params.gamma = 0.1;
    return cfg;
}

double row_double(const Table& t, std::size_t row, const std::string& column) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == column) return std::get<double>(t.rows[row][i]);
    }
    throw std::runtime_error("missing column " + column);
}

std::string row_text(const Table& t, std::size_t row, const std::string& column) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == column) return std::get<std::string>(t.rows[row][i]);
    }
    throw std::runtime_error("missing column " + column);
}
}  // namespace

TEST_CASE("format_double: shortest representation round-trips exactly") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 41) - 20);
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("grid and window parsing") {
    const auto g = parse_grid("0:5:101");
    CHECK(g.start == 0.0);
    CHECK(g.stop == 5.0);
    CHECK(g.points == 101);
    CHECK_FALSE(g.log_scale);
    CHECK(g.values().size() == 101);
    CHECK(g.values().front() == 0.0);
    CHECK(g.values().back() == 5.0);

    const auto lg = parse_grid("1e-3:1e3:7:log");
    CHECK(lg.log_scale);
    const auto v = lg.values();
    CHECK(v[3] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:2:3:cubic"), std::invalid_argument);

    const auto w = parse_window("0.1:400");
    CHECK(w.first == 0.1);
    CHECK(w.second == 400.0);
    CHECK_THROWS_AS(parse_window("12"), std::invalid_argument);
}

TEST_CASE("cmd rate: records match direct library calls") {
    auto cfg = base_config(Command::rate);
    cfg.t = 5.0;
    cfg.n = 20;
    const Table table = run(cfg);
    REQUIRE(table.rows.size() == 1);
    CHECK(row_double(table, 0, "r_single") ==
          survival_ratio(5.0, cfg.params, cfg.quadrature));
    CHECK(row_double(table, 0, "r_repeated") ==
          repeated_rate({5.0, 20}, cfg.params, cfg.quadrature));
    CHECK(row_text(table, 0, "regime") == "ZENO");

    cfg.t = 0.0;
    const Table at_zero = run(cfg);
    CHECK(row_double(at_zero, 0, "r_single") == 1.0);
    CHECK(row_text(at_zero, 0, "regime") == "NEUTRAL");

    cfg.params.gamma = 0.0;
    cfg.t = 2.0;
    cfg.n = 1;
    CHECK(row_double(run(cfg), 0, "r_single") ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("cmd figure: fig1 all Zeno, fig2 exactly one flip") {
    auto cfg = base_config(Command::figure);
    cfg.preset = "fig1";
    const Table fig1 = run(cfg);
    REQUIRE(fig1.rows.size() == 101);
    CHECK(row_text(fig1, 0, "regime") == "NEUTRAL");
    CHECK(row_double(fig1, 0, "r_single") == 1.0);
    for (std::size_t i = 1; i < fig1.rows.size(); ++i) {
        CHECK(row_double(fig1, i, "r_repeated") >= row_double(fig1, i, "r_single"));
        CHECK(row_text(fig1, i, "regime") == "ZENO");
    }

    cfg.preset = "fig2";
    const Table fig2 = run(cfg);
    REQUIRE(fig2.rows.size() == 401);
    int flips = 0;
    std::string prev = row_text(fig2, 1, "regime");
    for (std::size_t i = 2; i < fig2.rows.size(); ++i) {
        const std::string cur = row_text(fig2, i, "regime");
        if (cur != prev) ++flips;
        prev = cur;
    }
    CHECK(flips == 1);

    cfg.preset = "fig9";
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("cmd crossover: record fields and the n = 1 identity case") {
    auto cfg = base_config(Command::crossover);
    cfg.n = 20;
    const Table table = run(cfg);
    const auto res = transition_time(20, cfg.params, cfg.quadrature, {1e-2, 1e4});
    CHECK(row_double(table, 0, "t_star") == res.t_star);
    CHECK(row_double(table, 0, "gamma_t_star") == res.gamma_t_star);
    CHECK(row_text(table, 0, "multiple_roots") == "false");

    cfg.n = 1;
    CHECK_THROWS_AS(run(cfg), NoCrossoverError);
}

TEST_CASE("cmd integral: asymptote columns and rejection of x <= 0") {
    auto cfg = base_config(Command::integral);
    cfg.grid = parse_grid("1e-4:1e4:9:log");
    const Table table = run(cfg);
    REQUIRE(table.rows.size() == 9);
    CHECK(std::abs(row_double(table, 0, "rel_dev_small")) <= 1e-2);
    CHECK(std::abs(row_double(table, 8, "rel_dev_large")) <= 1e-2);
    double prev = 1e300;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const double v = row_double(table, i, "integral");
        CHECK(v < prev);
        prev = v;
    }

    cfg.grid = GridSpec{-1.0, 1.0, 3, false};
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
    cfg.grid.reset();
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("determinism: identical configs render byte-identical output") {
    auto cfg = base_config(Command::sweep);
    cfg.n = 20;
    cfg.grid = parse_grid("0:5:21");
    const std::string a = render(run(cfg), OutputFormat::csv);
    const std::string b = render(run(cfg), OutputFormat::csv);
    CHECK(a == b);
    const std::string ja = render(run(cfg), OutputFormat::json);
    const std::string jb = render(run(cfg), OutputFormat::json);
    CHECK(ja == jb);
}

TEST_CASE("round-trip: CSV and JSON preserve all values") {
    auto cfg = base_config(Command::sweep);
    cfg.n = 20;
    cfg.grid = parse_grid("0:5:11");
    const Table table = run(cfg);

    // A whole-valued double comes back as an integer cell; the decimal value
    // itself is preserved exactly either way.
    auto as_double = [](const Cell& c) {
        if (const auto* d = std::get_if<double>(&c)) return *d;
        return static_cast<double>(std::get<long long>(c));
    };

    const Table csv_back = parse_csv(write_csv(table));
    REQUIRE(csv_back.rows.size() == table.rows.size());
    CHECK(csv_back.columns == table.columns);
    CHECK(csv_back.metadata == table.metadata);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            if (std::holds_alternative<double>(table.rows[i][j])) {
                CHECK(as_double(csv_back.rows[i][j]) == std::get<double>(table.rows[i][j]));
            }
        }
    }

    const Table json_back = parse_json(write_json(table));
    REQUIRE(json_back.rows.size() == table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            if (std::holds_alternative<double>(table.rows[i][j])) {
                CHECK(as_double(json_back.rows[i][j]) == std::get<double>(table.rows[i][j]));
            }
        }
    }
}

TEST_CASE("CSV layout: metadata preamble then header then rows") {
    auto cfg = base_config(Command::rate);
    cfg.t = 1.0;
    const std::string text = write_csv(run(cfg));
    CHECK(text.rfind("# tool = qzeno\n", 0) == 0);
    CHECK(text.find("\nt,r_single,r_repeated,regime,") != std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(text.find("\r") == std::string::npos);
}
