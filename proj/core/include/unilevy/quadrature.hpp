#ifndef UNILEVY_QUADRATURE_HPP
#define UNILEVY_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "unilevy/errors.hpp"

namespace unilevy {

using RadialFn = std::function<double(double)>;

/// Shared tolerances and controls for every integral evaluator.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_segments = 2000;           // cap on oscillatory partition length
    int oscillatory_accel_terms = 12;  // epsilon-table width for tail acceleration
    int grid_points_per_decade = 32;   // log grids of memoizers and estimators
    double divergence_threshold = 1e8; // Mellin values past this are flagged divergent

    void validate() const;
};

/// Adaptive Gauss-Kronrod over a finite interval; integrand smooth in the interior.
double integrate(const RadialFn& f, double a, double b, const QuadratureConfig& cfg);

/// tanh-sinh over a finite interval; tolerates integrable endpoint singularities.
double integrate_singular(const RadialFn& f, double a, double b, const QuadratureConfig& cfg);

/// integrate_singular with interior breakpoints (kinks, truncation radii).
double integrate_singular(const RadialFn& f, double a, double b, std::span<const double> breakpoints,
                          const QuadratureConfig& cfg);

/// \int_a^inf of an eventually decaying integrand. Panels double geometrically from
/// `scale` and stop once three consecutive panels are negligible and decreasing.
double integrate_to_infinity(const RadialFn& f, double a, double scale, const QuadratureConfig& cfg);

} // namespace unilevy

#endif
