#pragma once

#include "qzeno/quadrature.hpp"

namespace qzeno {

/// Symbol table shared by every formula in the library. Units are whatever
/// consistent system the caller works in; the defaults hbar = m = sigma = 1
/// leave only the dimensionless groups gamma*t and hbar*t/(m*sigma^2).
/// temperature carries the Boltzmann constant folded in (energy units).
struct PhysicalParams {
    double mass = 1.0;
    double hbar = 1.0;
    double gamma = 1.0;
    double sigma_sq = 1.0;
    double temperature = 0.0;

    void validate() const;
};

/// Im{alpha(omega + i0+)} for Ohmic friction: gamma / (m omega (omega^2 + gamma^2)).
/// Requires omega > 0 and gamma > 0; the gamma = 0 response is singular and
/// handled analytically by callers instead.
double ohmic_response_im(double omega, const PhysicalParams& p);

/// G(t) = (1 - e^{-gamma t}) / (m gamma), with the dissipationless limit t/m
/// at gamma = 0.
double green_function(double t, const PhysicalParams& p);

/// Magnitude of the position commutator [x(0), x(t)]/i evaluated by the
/// oscillatory quadrature (2 hbar / pi) * Int_0^inf Im{alpha} sin(omega t) domega.
/// Numerically equal to hbar * green_function(t); kept as the module's
/// two-sided self check.
IntegralResult commutator_quadrature(double t, const PhysicalParams& p,
                                     const QuadratureConfig& cfg);

}  // namespace qzeno
