#include "qzeno/spreading.hpp"

#include <cmath>
#include <stdexcept>

namespace qzeno {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// 1 - cos y without cancellation at small y.
double one_minus_cos(double y) {
    const double s = std::sin(0.5 * y);
    return 2.0 * s * s;
}

double coth(double z) {
    if (z > 20.0) return 1.0;
    if (z < 1e-8) return 1.0 / z + z / 3.0;
    return 1.0 / std::tanh(z);
}

// coth(z) - 1 = 2 / (e^{2z} - 1), accurate where coth itself would cancel.
double coth_minus_one(double z) { return 2.0 / std::expm1(2.0 * z); }

}  // namespace

double zeno_integral(double x, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(x > 0.0))
        throw std::domain_error("zeno_integral: x must be > 0 (I diverges logarithmically at 0)");

    const double x_sq = x * x;
    auto integrand = [x_sq](double y) {
        if (y < 1e-8) return y / (2.0 * (y * y + x_sq));  // removable singularity
        return one_minus_cos(y) / (y * (y * y + x_sq));
    };
    auto envelope = [x_sq](double y) { return 1.0 / (y * (y * y + x_sq)); };

    const double y0 = cfg.split_point;
    const IntegralResult core = integrate_adaptive(integrand, 0.0, y0, cfg);
    // Int_{y0}^inf dy / (y (y^2 + x^2)) in closed form.
    const double tail_plain = std::log1p(x_sq / (y0 * y0)) / (2.0 * x_sq);
    const IntegralResult tail_cos = integrate_oscillatory_tail(envelope, y0, cfg);

    return core.value + tail_plain - tail_cos.value;
}

double msd_exact(double t, const PhysicalParams& p, const QuadratureConfig& cfg) {
    p.validate();
    if (t < 0.0) throw std::domain_error("msd_exact: t must be >= 0");
    if (!(p.gamma > 0.0)) throw std::domain_error("msd_exact: gamma must be > 0");
    if (t == 0.0) return 0.0;
    return 2.0 * p.hbar * p.gamma * t * t / (kPi * p.mass) * zeno_integral(p.gamma * t, cfg);
}

double msd_general(double t, const PhysicalParams& p, const QuadratureConfig& cfg) {
    p.validate();
    cfg.validate();
    if (t < 0.0) throw std::domain_error("msd_general: t must be >= 0");
    if (!(p.gamma > 0.0)) throw std::domain_error("msd_general: gamma must be > 0");
    if (t == 0.0) return 0.0;

    // y = omega t; thermal argument hbar omega / 2T becomes a*y.
    const double a = (p.temperature > 0.0) ? p.hbar / (2.0 * p.temperature * t) : 0.0;
    const double big_x = p.gamma * t;
    const double y0 = cfg.split_point;

    auto im_alpha = [&](double y) { return ohmic_response_im(y / t, p); };
    auto thermal = [&](double y) { return (a > 0.0) ? coth(a * y) : 1.0; };
    auto core_integrand = [&](double y) {
        if (y < 1e-8) {
            const double base = t * y / (2.0 * p.mass * p.gamma);
            return (a > 0.0) ? base * coth(a * y) : base;
        }
        return im_alpha(y) * thermal(y) * one_minus_cos(y);
    };
    auto envelope = [&](double y) { return im_alpha(y) * thermal(y); };

    const IntegralResult core = integrate_adaptive(core_integrand, 0.0, y0, cfg);

    // Non-oscillatory tail: the T = 0 part in closed form, plus an
    // exponentially decaying coth correction when T > 0.
    double tail_plain = p.gamma * t * t * t / p.mass * std::log1p(big_x * big_x / (y0 * y0)) /
                        (2.0 * big_x * big_x);
    if (a > 0.0) {
        const double y_cut = y0 + 25.0 / a;
        auto correction = [&](double y) { return im_alpha(y) * coth_minus_one(a * y); };
        tail_plain += integrate_adaptive(correction, y0, y_cut, cfg).value;
    }

    const IntegralResult tail_cos = integrate_oscillatory_tail(envelope, y0, cfg);

    return 2.0 * p.hbar / (kPi * t) * (core.value + tail_plain - tail_cos.value);
}

AsymptoticValue msd_small_gt(double t, const PhysicalParams& p) {
    p.validate();
    if (t < 0.0) throw std::domain_error("msd_small_gt: t must be >= 0");
    if (p.gamma == 0.0 || t == 0.0) return {0.0, true};
    const double gt = p.gamma * t;
    const double value =
        p.hbar * p.gamma * t * t / (kPi * p.mass) * (-std::log(gt) + 1.5 - kEulerGamma);
    // Formula turns negative once gamma t exceeds e^{3/2 - gamma_E}.
    return {value, gt < std::exp(1.5 - kEulerGamma)};
}

AsymptoticValue msd_large_gt(double t, const PhysicalParams& p) {
    p.validate();
    if (!(p.gamma > 0.0 && t > 0.0))
        throw std::domain_error("msd_large_gt: requires gamma > 0 and t > 0");
    const double gt = p.gamma * t;
    const double value = 2.0 * p.hbar / (kPi * p.mass * p.gamma) * (std::log(gt) + kEulerGamma);
    return {value, gt > 1.0};
}

double sigma_q_sq(double t, const PhysicalParams& p) {
    p.validate();
    if (t < 0.0) throw std::domain_error("sigma_q_sq: t must be >= 0");
    if (p.gamma == 0.0) {
        const double ht = p.hbar * t / p.mass;
        return ht * ht / (4.0 * p.sigma_sq);
    }
    const double g = -std::expm1(-p.gamma * t);
    const double hg = p.hbar * g / (p.mass * p.gamma);
    return hg * hg / (4.0 * p.sigma_sq);
}

WidthBreakdown width_sq(double t, const PhysicalParams& p, const QuadratureConfig& cfg) {
    p.validate();
    if (t < 0.0) throw std::domain_error("width_sq: t must be >= 0");
    WidthBreakdown w;
    w.sigma_sq = p.sigma_sq;
    w.sigma_q_sq = sigma_q_sq(t, p);
    w.msd = (p.gamma == 0.0 || t == 0.0) ? 0.0 : msd_exact(t, p, cfg);
    w.total = w.sigma_sq + w.sigma_q_sq + w.msd;
    return w;
}

AsymptoticValue mean_sq_velocity(double t, const PhysicalParams& p) {
    p.validate();
    const double base = p.hbar * p.hbar / (4.0 * p.mass * p.mass * p.sigma_sq);
    if (p.gamma == 0.0) return {base, true};
    if (!(t > 0.0)) throw std::domain_error("mean_sq_velocity: t must be > 0 for gamma > 0");
    const double gt = p.gamma * t;
    const double value =
        base + p.hbar * p.gamma / (kPi * p.mass) * (-std::log(gt) + 1.5 - kEulerGamma);
    return {value, gt < 1.0};
}

double probability_density(double x, double t, const PhysicalParams& p,
                           const QuadratureConfig& cfg) {
    const double w2 = width_sq(t, p, cfg).total;
    return std::exp(-x * x / (2.0 * w2)) / std::sqrt(2.0 * kPi * w2);
}

}  // namespace qzeno
