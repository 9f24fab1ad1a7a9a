#ifndef UNILEVY_POTENTIAL_HPP
#define UNILEVY_POTENTIAL_HPP

#include <optional>

#include "unilevy/catalog.hpp"

namespace unilevy {

/// Pointwise potential density G(x): radial Fourier inversion of 1/psi, summed
/// in the Abel sense. Requires dim >= 3 and 1/psi integrable against r^{d-1}
/// near 0; throws transience_fail otherwise.
double green_density(const ProcessModel& model, double x_norm, const QuadratureConfig& cfg);

/// Potential mass of the centered ball G(B_r), evaluated as the single
/// Fourier-ball integral of 1/psi.
double green_ball(const ProcessModel& model, double radius, const QuadratureConfig& cfg);

/// Oracle route for G(B_r): c_d \int_0^r G(s) s^{d-1} ds by direct integration
/// of the pointwise density. Slower; kept for cross-checks.
double green_ball_by_density(const ProcessModel& model, double radius, const QuadratureConfig& cfg);

/// Laplace transform of f(r) = G({|x| <= sqrt(r)}):
/// 2^{1-d} Gamma(d/2)^{-1} lambda^{-1} \int_0^inf e^{-r^2/4} r^{d-1} / psi(r sqrt(lambda)) dr.
double laplace_green_ball(const ProcessModel& model, double lambda, const QuadratureConfig& cfg);

struct GreenRatios {
    double ball_ratio;                  // psi(1/r) G(B_r) / C~_{d,alpha}
    std::optional<double> point_ratio;  // r^d psi(1/r) G(r) / A~_{d,alpha}; absent when alpha = 0
};

/// Both normalized Green ratios at radius r against the constants for the
/// declared index on `side`. Throws missing_index.
GreenRatios green_asym_ratio(const ProcessModel& model, double r, LimitPoint side,
                             const QuadratureConfig& cfg);

} // namespace unilevy

#endif
