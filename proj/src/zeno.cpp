#include "qzeno/zeno.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qzeno {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// log R(t) = -1/2 log(w^2 / sigma^2), stable when w^2 barely exceeds sigma^2.
double log_survival_ratio(double t, const PhysicalParams& p, const QuadratureConfig& cfg) {
    const WidthBreakdown w = width_sq(t, p, cfg);
    return -0.5 * std::log1p((w.sigma_q_sq + w.msd) / w.sigma_sq);
}

}  // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::zeno: return "ZENO";
        case Regime::anti_zeno: return "ANTI_ZENO";
        case Regime::neutral: return "NEUTRAL";
    }
    return "NEUTRAL";
}

Regime classify_regime(double r_single, double r_repeated) {
    if (r_repeated - r_single > kRegimeTolerance) return Regime::zeno;
    if (r_single - r_repeated > kRegimeTolerance) return Regime::anti_zeno;
    return Regime::neutral;
}

void MeasurementSchedule::validate() const {
    if (n_measurements < 1)
        throw std::invalid_argument("MeasurementSchedule: n_measurements must be >= 1");
    if (!(total_time >= 0.0))
        throw std::invalid_argument("MeasurementSchedule: total_time must be >= 0");
}

double survival_ratio(double t, const PhysicalParams& p, const QuadratureConfig& cfg) {
    if (t == 0.0) {
        p.validate();
        return 1.0;
    }
    return std::exp(log_survival_ratio(t, p, cfg));
}

double repeated_rate(const MeasurementSchedule& s, const PhysicalParams& p,
                     const QuadratureConfig& cfg) {
    s.validate();
    if (s.total_time == 0.0) {
        p.validate();
        return 1.0;
    }
    return std::exp(s.n_measurements * log_survival_ratio(s.interval(), p, cfg));
}

AsymptoticValue repeated_rate_small_gt(const MeasurementSchedule& s, const PhysicalParams& p) {
    s.validate();
    if (s.total_time == 0.0) return {1.0, true};
    const double tau = s.interval();
    const AsymptoticValue v_sq = mean_sq_velocity(tau, p);
    const double exponent = v_sq.value * s.total_time * tau / (2.0 * p.sigma_sq);
    const bool in_range =
        v_sq.in_range && p.gamma * tau < 1.0 && v_sq.value * tau * tau < p.sigma_sq;
    return {std::exp(-exponent), in_range};
}

AsymptoticValue repeated_rate_large_gt(const MeasurementSchedule& s, const PhysicalParams& p) {
    s.validate();
    p.validate();
    if (!(p.gamma > 0.0 && s.total_time > 0.0))
        throw std::domain_error("repeated_rate_large_gt: requires gamma > 0 and t > 0");
    const double n = static_cast<double>(s.n_measurements);
    const double exponent = p.hbar * n / (kPi * p.mass * p.sigma_sq * p.gamma) *
                            (std::log(p.gamma * s.total_time / n) + kEulerGamma);
    const bool in_range = p.gamma * s.interval() > 1.0 && std::abs(exponent) < 1.0;
    return {std::exp(-exponent), in_range};
}

CrossoverResult transition_time(int n, const PhysicalParams& p, const QuadratureConfig& cfg,
                                std::pair<double, double> search_window) {
    p.validate();
    cfg.validate();
    if (n < 2) throw std::invalid_argument("transition_time: n must be >= 2");
    const double lo = search_window.first;
    const double hi = search_window.second;
    if (!(lo > 0.0 && hi > lo))
        throw std::invalid_argument("transition_time: window must satisfy 0 < a < b");

    auto delta = [&](double t) {
        return repeated_rate({t, n}, p, cfg) - survival_ratio(t, p, cfg);
    };

    // Bracketing scan on a log grid.
    constexpr int kScanPoints = 200;
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / (kScanPoints - 1);
    double prev_t = lo;
    double prev_d = delta(lo);
    const double d_at_lo = prev_d;
    double bracket_lo = 0.0, bracket_hi = 0.0, d_lo = 0.0, d_hi = 0.0;
    int sign_changes = 0;
    double d_at_hi = prev_d;
    for (int i = 1; i < kScanPoints; ++i) {
        const double t = (i == kScanPoints - 1) ? hi : std::exp(log_lo + i * step);
        const double d = delta(t);
        d_at_hi = d;
        if ((prev_d > 0.0) != (d > 0.0) || d == 0.0) {
            if (sign_changes == 0) {
                bracket_lo = prev_t;
                bracket_hi = t;
                d_lo = prev_d;
                d_hi = d;
            }
            ++sign_changes;
            // Skip the degenerate repeat when d == 0 lands exactly on a node.
            if (d == 0.0) prev_d = -prev_d;
        }
        prev_t = t;
        prev_d = d;
    }
    if (sign_changes == 0) {
        std::ostringstream msg;
        msg << "no QZE/AZE crossover on window (" << lo << ", " << hi << "): delta(" << lo
            << ") = " << d_at_lo << ", delta(" << hi << ") = " << d_at_hi;
        throw NoCrossoverError(msg.str(), d_at_lo, d_at_hi);
    }

    // Bisection with a secant step whenever it lands safely inside the bracket.
    constexpr double kResidualTol = 1e-10;
    double a = bracket_lo, b = bracket_hi, fa = d_lo, fb = d_hi;
    double t_star = 0.5 * (a + b);
    double residual = delta(t_star);
    int iterations = 1;
    while (std::abs(residual) > kResidualTol && (b - a) > 1e-15 * b && iterations < 200) {
        if ((fa > 0.0) == (residual > 0.0)) {
            a = t_star;
            fa = residual;
        } else {
            b = t_star;
            fb = residual;
        }
        double candidate = (fa != fb) ? a - fa * (b - a) / (fb - fa) : 0.5 * (a + b);
        const double margin = 0.01 * (b - a);
        if (!(candidate > a + margin && candidate < b - margin)) candidate = 0.5 * (a + b);
        t_star = candidate;
        residual = delta(t_star);
        ++iterations;
    }

    CrossoverResult out;
    out.t_star = t_star;
    out.gamma_t_star = p.gamma * t_star;
    out.bracket = {bracket_lo, bracket_hi};
    out.residual = residual;
    out.iterations = iterations;
    out.multiple_roots = sign_changes > 1;
    return out;
}

RateCurve sweep(const std::vector<double>& t_grid, int n, const PhysicalParams& p,
                const QuadratureConfig& cfg) {
    p.validate();
    if (t_grid.empty()) throw std::invalid_argument("sweep: empty time grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw std::invalid_argument("sweep: t_grid must be strictly increasing and >= 0");
    }

    RateCurve curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
        try {
            RatePoint pt;
            pt.t = t;
            pt.r_single = survival_ratio(t, p, cfg);
            pt.r_repeated = repeated_rate({t, n}, p, cfg);
            pt.regime = classify_regime(pt.r_single, pt.r_repeated);
            curve.push_back(pt);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "sweep failed at t = " << t << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    }
    return curve;
}

}  // namespace qzeno
