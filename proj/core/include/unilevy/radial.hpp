#ifndef UNILEVY_RADIAL_HPP
#define UNILEVY_RADIAL_HPP

#include <span>

#include "unilevy/quadrature.hpp"

namespace unilevy {

/// Total surface measure of the unit sphere in R^d: c_d = 2 pi^{d/2} / Gamma(d/2).
double surface_measure(int dim);

/// Spherical cosine kernel k(r) = int_{S^{d-1}} (1 - cos(r<u0,u>)) sigma(du).
/// Closed form sigma_d - (2 pi)^{d/2} J_{d/2-1}(r) r^{1-d/2}; an even Taylor
/// series takes over below a switch radius where the closed form cancels.
double kernel_k(double r, int dim);

/// Provable envelope min(2, r^2/(2d)) * sigma_d; kernel_k never exceeds it.
double kernel_upper_bound(double r, int dim);

/// Dimension tag bundling the surface constant (spec'd aggregate).
struct RadialKernel {
    int dim;
    double surface;

    explicit RadialKernel(int d) : dim(d), surface(surface_measure(d)) {}
    double operator()(double r) const { return kernel_k(r, dim); }
};

/// Mellin transform of k on the real axis of its strip 0 < z < 2.
double mellin_k(double z, int dim, const QuadratureConfig& cfg);

struct MellinKResult {
    double value;
    bool divergent; // |value| crossed cfg.divergence_threshold (z at a strip edge)
};
MellinKResult mellin_k_checked(double z, int dim, const QuadratureConfig& cfg);

/// \int_a^inf f(r) J_nu(omega r) r^power dr, partitioned at the Bessel zeros with
/// epsilon acceleration of the alternating partial sums (Abel sense where the
/// plain integral is only conditionally convergent). `scale` hints where f stops
/// varying; pass 0 for an automatic probe. `breakpoints` force extra partition
/// boundaries (kinks of f).
double bessel_series_integral(const RadialFn& f, double nu, double omega, double power, double a,
                              double scale, const QuadratureConfig& cfg,
                              std::span<const double> breakpoints = {});

/// Radial Fourier inversion: (2 pi)^{-d/2} |x|^{1-d/2} \int_0^inf f(r) J_{d/2-1}(r|x|) r^{d/2} dr.
/// Probes the tail first: throws slow_decay when the segment envelope cannot be summed.
double hankel_inverse(const RadialFn& f, double x_norm, int dim, const QuadratureConfig& cfg,
                      double scale = 0.0);

/// M(f,g)(x) = \int_0^inf f(x/t) g(t) dt/t via a log substitution; probes decay on
/// both flanks and throws no_convergence when either probe fails.
double mellin_convolution(const RadialFn& f, const RadialFn& g, double x, const QuadratureConfig& cfg);

} // namespace unilevy

#endif
