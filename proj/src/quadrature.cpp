#include "qzeno/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qzeno {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

[[noreturn]] void throw_nonfinite(double x, double fx) {
    std::ostringstream msg;
    msg << "integrand evaluated non-finite at y = " << x << " (f = " << fx << ")";
    throw std::domain_error(msg.str());
}

double eval_checked(const Integrand& f, double x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) throw_nonfinite(x, fx);
    return fx;
}

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// Single Gauss-Kronrod pass over [a, b]. The error estimate follows the
// QUADPACK scaling of |K15 - G7| against the integrand variation.
Panel gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = eval_checked(f, center);
    double res_gauss = fc * kWg[3];
    double res_kronrod = fc * kWgk[7];

    double fv[15];
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = eval_checked(f, center - dx);
        const double f2 = eval_checked(f, center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        res_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) res_gauss += kWg[j / 2] * (f1 + f2);
    }

    const double mean = 0.5 * res_kronrod;
    double res_abs = kWgk[7] * std::abs(fc);
    double res_asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        res_abs += kWgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
        res_asc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }
    res_abs *= std::abs(half);
    res_asc *= std::abs(half);

    double err = std::abs((res_kronrod - res_gauss) * half);
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    // Roundoff floor: the estimate cannot honestly drop below machine noise.
    constexpr double kEps = 2.220446049250313e-16;
    err = std::max(err, 50.0 * kEps * res_abs);
    return Panel{a, b, res_kronrod * half, err};
}

double tolerance_for(double value, const QuadratureConfig& cfg) {
    return std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol);
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be >= 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(split_point > 0.0))
        throw std::invalid_argument("QuadratureConfig: split_point must be > 0");
    if (tail_terms < 2) throw std::invalid_argument("QuadratureConfig: tail_terms must be >= 2");
}

IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("integrate_adaptive: requires finite a < b");

    std::priority_queue<Panel> panels;
    panels.push(gk15(f, a, b));
    double total_value = panels.top().value;
    double total_error = panels.top().error;
    int subdivisions = 0;

    while (total_error > tolerance_for(total_value, cfg) && subdivisions < cfg.max_subdivisions) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval exhausted at machine precision; keep its estimate.
            panels.push(Panel{worst.a, worst.b, worst.value, 0.0});
            total_error -= worst.error;
            continue;
        }
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    IntegralResult out;
    out.value = total_value;
    out.error_estimate = total_error;
    out.subdivisions_used = subdivisions;
    out.converged = total_error <= tolerance_for(total_value, cfg);
    return out;
}

namespace detail {

IntegralResult oscillatory_tail(const Integrand& envelope, double y0, Oscillation osc,
                                const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(y0 >= 0.0)) throw std::invalid_argument("oscillatory_tail: y0 must be >= 0");

    // Zeros of the weight: (k + 1/2) pi for cos, k pi for sin.
    const double phase = (osc == Oscillation::cosine) ? 0.5 * kPi : 0.0;
    auto zero_at = [phase](long k) { return phase + static_cast<double>(k) * kPi; };
    long k = static_cast<long>(std::ceil((y0 - phase) / kPi));
    if (k < (osc == Oscillation::cosine ? 0 : 1)) k = (osc == Oscillation::cosine ? 0 : 1);
    while (zero_at(k) <= y0) ++k;

    auto weighted = [&](double y) {
        return envelope(y) * (osc == Oscillation::cosine ? std::cos(y) : std::sin(y));
    };

    // Envelope preconditions checked at the segment boundaries.
    double prev_env = eval_checked(envelope, zero_at(k));
    if (!(prev_env >= 0.0))
        throw std::invalid_argument("oscillatory_tail: envelope must be positive");

    IntegralResult head;
    if (zero_at(k) > y0) {
        head = integrate_adaptive(weighted, y0, zero_at(k), cfg);
    } else {
        head.converged = true;
    }

    std::vector<double> partial_sums;
    partial_sums.reserve(cfg.tail_terms);
    double running = 0.0;
    double segment_error = 0.0;
    int subdivisions = head.subdivisions_used;
    bool segments_converged = head.converged;
    for (int i = 0; i < cfg.tail_terms; ++i) {
        const double lo = zero_at(k + i);
        const double hi = zero_at(k + i + 1);
        const double env_hi = eval_checked(envelope, hi);
        if (env_hi > prev_env)
            throw std::invalid_argument(
                "oscillatory_tail: envelope must be monotonically decreasing");
        prev_env = env_hi;

        const IntegralResult seg = integrate_adaptive(weighted, lo, hi, cfg);
        running += seg.value;
        segment_error += seg.error_estimate;
        subdivisions += seg.subdivisions_used;
        segments_converged = segments_converged && seg.converged;
        partial_sums.push_back(running);
    }

    // Euler transform by repeated averaging of the alternating partial sums.
    std::vector<double> row = partial_sums;
    double accel = row.back();
    double accel_prev = accel;
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
        accel_prev = accel;
        accel = row.front();
    }
    const double trunc_error = std::abs(accel - accel_prev);

    IntegralResult out;
    out.value = head.value + accel;
    out.error_estimate = head.error_estimate + segment_error + trunc_error;
    out.subdivisions_used = subdivisions;
    out.converged = segments_converged &&
                    out.error_estimate <= tolerance_for(out.value, cfg) * 10.0;
    return out;
}

}  // namespace detail

IntegralResult integrate_oscillatory_tail(const Integrand& envelope, double y0,
                                          const QuadratureConfig& cfg) {
    return detail::oscillatory_tail(envelope, y0, detail::Oscillation::cosine, cfg);
}

}  // namespace qzeno
