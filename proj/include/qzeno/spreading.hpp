#pragma once

#include "qzeno/response.hpp"

namespace qzeno {

/// Euler-Mascheroni constant at full double precision.
inline constexpr double kEulerGamma = 0.57721566490153286;

/// Decomposition of the packet width: total = sigma_sq + sigma_q_sq + msd.
struct WidthBreakdown {
    double sigma_sq = 0.0;
    double sigma_q_sq = 0.0;
    double msd = 0.0;
    double total = 0.0;
};

/// Closed-form value paired with a validity flag; in_range = false signals
/// the asymptotic formula was evaluated outside its regime.
struct AsymptoticValue {
    double value = 0.0;
    bool in_range = true;
};

/// I(x) = Int_0^inf (1 - cos y) / (y (y^2 + x^2)) dy for x > 0.
/// Strictly positive and strictly decreasing; diverges logarithmically as
/// x -> 0, so x <= 0 is a domain error.
double zeno_integral(double x, const QuadratureConfig& cfg);

/// Mean-square displacement s(t) = (2 hbar gamma / pi m) t^2 I(gamma t).
double msd_exact(double t, const PhysicalParams& p, const QuadratureConfig& cfg);

/// s(t) from the general quadrature
///   (2 hbar / pi) Int_0^inf Im{alpha} coth(hbar omega / 2 T) (1 - cos omega t) domega.
/// At T = 0 this reproduces msd_exact and serves as its cross-check; the
/// T > 0 path is provided but experimental (unvalidated).
double msd_general(double t, const PhysicalParams& p, const QuadratureConfig& cfg);

/// Small-gamma-t closed form s(t) = (hbar gamma / pi m) t^2 (-log(gamma t) + 3/2 - gamma_E).
/// Out of range once gamma t >= e^{3/2 - gamma_E} where the formula turns negative.
AsymptoticValue msd_small_gt(double t, const PhysicalParams& p);

/// Large-gamma-t closed form s(t) = (2 hbar / pi m gamma) (log(gamma t) + gamma_E).
AsymptoticValue msd_large_gt(double t, const PhysicalParams& p);

/// Quantum spreading term sigma_q^2 = (hbar^2 / m^2 gamma^2) (1 - e^{-gamma t})^2 / (4 sigma^2),
/// with the gamma = 0 limit hbar^2 t^2 / (4 m^2 sigma^2).
double sigma_q_sq(double t, const PhysicalParams& p);

/// w^2(t) = sigma^2 + sigma_q^2 + s(t), with the exact component breakdown.
WidthBreakdown width_sq(double t, const PhysicalParams& p, const QuadratureConfig& cfg);

/// <v^2> = hbar^2 / (4 m^2 sigma^2) + (hbar gamma / pi m)(-log(gamma t) + 3/2 - gamma_E).
/// For gamma = 0 the second term vanishes exactly.
AsymptoticValue mean_sq_velocity(double t, const PhysicalParams& p);

/// P(x, t) = exp(-x^2 / 2 w^2(t)) / sqrt(2 pi w^2(t)).
double probability_density(double x, double t, const PhysicalParams& p,
                           const QuadratureConfig& cfg);

}  // namespace qzeno
