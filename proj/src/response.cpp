#include "qzeno/response.hpp"

#include <cmath>
#include <stdexcept>

namespace qzeno {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

void PhysicalParams::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("PhysicalParams: mass must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("PhysicalParams: gamma must be >= 0");
    if (!(sigma_sq > 0.0)) throw std::invalid_argument("PhysicalParams: sigma_sq must be > 0");
    if (!(temperature >= 0.0))
        throw std::invalid_argument("PhysicalParams: temperature must be >= 0");
}

double ohmic_response_im(double omega, const PhysicalParams& p) {
    p.validate();
    if (!(omega > 0.0)) throw std::domain_error("ohmic_response_im: omega must be > 0");
    if (p.gamma == 0.0)
        throw std::domain_error(
            "ohmic_response_im: response is singular at gamma = 0; use the "
            "dissipationless analytic path");
    return p.gamma / (p.mass * omega * (omega * omega + p.gamma * p.gamma));
}

double green_function(double t, const PhysicalParams& p) {
    p.validate();
    if (t < 0.0) throw std::domain_error("green_function: t must be >= 0");
    if (p.gamma == 0.0) return t / p.mass;
    // -expm1 keeps full precision for small gamma t.
    return -std::expm1(-p.gamma * t) / (p.mass * p.gamma);
}

IntegralResult commutator_quadrature(double t, const PhysicalParams& p,
                                     const QuadratureConfig& cfg) {
    p.validate();
    cfg.validate();
    if (t < 0.0) throw std::domain_error("commutator_quadrature: t must be >= 0");
    if (!(p.gamma > 0.0)) throw std::domain_error("commutator_quadrature: gamma must be > 0");
    if (t == 0.0) return IntegralResult{0.0, 0.0, 0, true};

    // Substituting y = omega t turns the integral into
    //   (2 hbar / pi t) Int_0^inf Im{alpha(y/t)} sin(y) dy
    // with sine zeros at y = k pi.
    const double prefactor = 2.0 * p.hbar / (kPi * t);
    auto im_alpha = [&](double y) { return ohmic_response_im(y / t, p); };
    auto core_integrand = [&](double y) {
        if (y < 1e-8) return t / (p.mass * p.gamma);  // Im{alpha} sin y -> t/(m gamma)
        return im_alpha(y) * std::sin(y);
    };

    const double y0 = cfg.split_point;
    const IntegralResult core = integrate_adaptive(core_integrand, 0.0, y0, cfg);
    const IntegralResult tail =
        detail::oscillatory_tail(im_alpha, y0, detail::Oscillation::sine, cfg);

    IntegralResult out;
    out.value = prefactor * (core.value + tail.value);
    out.error_estimate = prefactor * (core.error_estimate + tail.error_estimate);
    out.subdivisions_used = core.subdivisions_used + tail.subdivisions_used;
    out.converged = core.converged && tail.converged;
    return out;
}

}  // namespace qzeno
