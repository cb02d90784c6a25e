#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "qzeno/response.hpp"

using namespace qzeno;

namespace {
const QuadratureConfig cfg{};

PhysicalParams params(double gamma, double mass = 1.0, double hbar = 1.0) {
    PhysicalParams p;
    p.gamma = gamma;
    p.mass = mass;
    p.hbar = hbar;
    return p;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    const double step = (std::log(hi) - std::log(lo)) / (n - 1);
    for (int i = 0; i < n; ++i) g.push_back(std::exp(std::log(lo) + i * step));
    return g;
}
}  // namespace

TEST_CASE("ohmic_response_im: direct substitutions") {
    const auto p = params(1.0);
    CHECK(ohmic_response_im(1.0, p) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ohmic_response_im(2.0, p) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("ohmic_response_im: omega^3 scaling at high frequency") {
    const auto p = params(0.7, 2.0);
    const double omega = 1e6;
    CHECK(ohmic_response_im(omega, p) * omega * omega * omega ==
          doctest::Approx(p.gamma / p.mass).epsilon(1e-10));
}

TEST_CASE("ohmic_response_im: domain errors") {
    CHECK_THROWS_AS(ohmic_response_im(0.0, params(1.0)), std::domain_error);
    CHECK_THROWS_AS(ohmic_response_im(-1.0, params(1.0)), std::domain_error);
    CHECK_THROWS_AS(ohmic_response_im(1.0, params(0.0)), std::domain_error);
}

TEST_CASE("green_function: values and limits") {
    CHECK(green_function(0.0, params(1.0)) == 0.0);
    CHECK(green_function(3.0, params(0.0)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(green_function(1.0, params(1.0)) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(green_function(1e3, params(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(green_function(-1.0, params(1.0)), std::domain_error);
}

TEST_CASE("green_function: concave and nondecreasing") {
    const auto p = params(0.7);
    double prev = 0.0, prev_diff = 1e300;
    for (double t = 0.0; t <= 10.0; t += 0.25) {
        const double g = green_function(t, p);
        CHECK(g >= prev);
        if (t > 0.0) {
            const double diff = g - prev;
            CHECK(diff <= prev_diff + 1e-15);
            prev_diff = diff;
        }
        prev = g;
    }
}

TEST_CASE("green_function: scale covariance in mass") {
    const auto p1 = params(0.3, 1.0);
    const auto pm = params(0.3, 5.0);
    for (double t : {0.1, 1.0, 7.0}) {
        CHECK(green_function(t, pm) ==
              doctest::Approx(green_function(t, p1) / 5.0).epsilon(1e-15));
    }
}

TEST_CASE("commutator_quadrature: examples against the Green function") {
    CHECK(commutator_quadrature(0.0, params(1.0), cfg).value == 0.0);

    const auto r1 = commutator_quadrature(1.0, params(1.0), cfg);
    CHECK(r1.converged);
    CHECK(std::abs(r1.value - (1.0 - std::exp(-1.0))) < 1e-8);

    const auto r2 = commutator_quadrature(4.0, params(0.5, 2.0), cfg);
    CHECK(std::abs(r2.value - (1.0 - std::exp(-2.0))) < 1e-8);
}

TEST_CASE("commutator_quadrature matches hbar G(t) across a log time grid") {
    for (double gamma : {0.1, 1.0, 10.0}) {
        const auto p = params(gamma);
        const double scale = p.hbar / (p.mass * p.gamma);
        for (double t : log_grid(1e-3 / gamma, 1e3 / gamma, 30)) {
            const auto r = commutator_quadrature(t, p, cfg);
            CHECK(std::abs(r.value - p.hbar * green_function(t, p)) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("commutator_quadrature: domain errors") {
    CHECK_THROWS_AS(commutator_quadrature(-1.0, params(1.0), cfg), std::domain_error);
    CHECK_THROWS_AS(commutator_quadrature(1.0, params(0.0), cfg), std::domain_error);
}

TEST_CASE("PhysicalParams validation") {
    PhysicalParams p;
    p.mass = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = PhysicalParams{};
    p.sigma_sq = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
