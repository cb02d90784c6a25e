#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qzeno/spreading.hpp"

namespace qzeno {

enum class Regime { zeno, anti_zeno, neutral };

std::string regime_name(Regime r);

/// Comparison tolerance below which r_repeated and r_single are considered
/// equal, to keep labels from flapping on quadrature noise near a crossover.
inline constexpr double kRegimeTolerance = 1e-12;

Regime classify_regime(double r_single, double r_repeated);

/// n instantaneous measurements over total time t, at intervals tau = t/n.
struct MeasurementSchedule {
    double total_time = 0.0;
    int n_measurements = 1;

    double interval() const { return total_time / n_measurements; }
    void validate() const;
};

struct RatePoint {
    double t = 0.0;
    double r_single = 1.0;
    double r_repeated = 1.0;
    Regime regime = Regime::neutral;
};

using RateCurve = std::vector<RatePoint>;

struct CrossoverResult {
    double t_star = 0.0;
    double gamma_t_star = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;
    int iterations = 0;
    /// Set when the bracketing scan saw more than one sign change; t_star is
    /// then the smallest root.
    bool multiple_roots = false;
};

/// Thrown when the repeated and single rates do not cross on the search
/// window; carries the rate difference at both window ends.
class NoCrossoverError : public std::runtime_error {
   public:
    NoCrossoverError(const std::string& what, double delta_lo, double delta_hi)
        : std::runtime_error(what), delta_lo_(delta_lo), delta_hi_(delta_hi) {}
    double delta_lo() const { return delta_lo_; }
    double delta_hi() const { return delta_hi_; }

   private:
    double delta_lo_;
    double delta_hi_;
};

/// R(t, gamma) = sqrt(sigma^2 / w^2(t)); R(0) = 1 and R is strictly
/// decreasing. The gamma = 0 path uses w^2 = sigma^2 + hbar^2 t^2 / (4 m^2 sigma^2).
double survival_ratio(double t, const PhysicalParams& p, const QuadratureConfig& cfg);

/// [R(t/n, gamma)]^n, evaluated as exp(n log R) so it stays finite and
/// positive up to very large n.
double repeated_rate(const MeasurementSchedule& s, const PhysicalParams& p,
                     const QuadratureConfig& cfg);

/// Small-gamma-tau closed form exp(-<v^2> t tau / 2 sigma^2) with <v^2>
/// evaluated at tau.
AsymptoticValue repeated_rate_small_gt(const MeasurementSchedule& s, const PhysicalParams& p);

/// Large-gamma-tau closed form exp{-(hbar n / pi m sigma^2 gamma)[log(gamma t / n) + gamma_E]},
/// valid while gamma tau >> 1 and the exponent magnitude stays << 1.
AsymptoticValue repeated_rate_large_gt(const MeasurementSchedule& s, const PhysicalParams& p);

/// Locates t* where [R(t/n)]^n crosses R(t) on the given window, by a
/// bracketing scan followed by bisection with secant acceleration.
/// Throws NoCrossoverError when the difference keeps one sign.
CrossoverResult transition_time(int n, const PhysicalParams& p, const QuadratureConfig& cfg,
                                std::pair<double, double> search_window);

/// Evaluates both rates over a strictly increasing time grid. A failing grid
/// point aborts with the offending t named in the exception message.
RateCurve sweep(const std::vector<double>& t_grid, int n, const PhysicalParams& p,
                const QuadratureConfig& cfg);

}  // namespace qzeno
