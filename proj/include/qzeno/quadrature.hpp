#pragma once

#include <functional>

namespace qzeno {

/// Controls for the adaptive integrator and the oscillatory tail summation.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 400;
    /// Abscissa separating the adaptive core from the semi-infinite tail.
    double split_point = 6.283185307179586;
    /// Half-periods summed before series acceleration of the tail.
    int tail_terms = 40;

    /// Throws std::invalid_argument on a malformed configuration.
    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7,15) integration of f over the finite
/// interval [a, b]. Removable endpoint singularities must be regularized by
/// the caller; interior nodes never touch a or b.
///
/// converged=false means max_subdivisions ran out, not that the value is
/// unusable; error_estimate stays honest either way.
IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg);

/// Computes the improper integral of envelope(y)*cos(y) over [y0, inf) for a
/// positive, monotonically decreasing, integrable envelope. Segments between
/// consecutive cosine zeros are summed as an alternating series and
/// accelerated by repeated averaging (Euler transform).
IntegralResult integrate_oscillatory_tail(const Integrand& envelope, double y0,
                                          const QuadratureConfig& cfg);

namespace detail {

enum class Oscillation { cosine, sine };

/// Shared machinery behind integrate_oscillatory_tail; also used for the
/// sin-weighted commutator tail where the zeros sit at k*pi.
IntegralResult oscillatory_tail(const Integrand& envelope, double y0,
                                Oscillation osc, const QuadratureConfig& cfg);

}  // namespace detail

}  // namespace qzeno
