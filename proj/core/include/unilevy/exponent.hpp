#ifndef UNILEVY_EXPONENT_HPP
#define UNILEVY_EXPONENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unilevy/quadrature.hpp"

namespace unilevy {

enum class LimitPoint { zero, infinity };

/// Radial Levy-Khintchine exponent psi(r) = psi_jump(r) + eta r^2 on [0, inf).
/// Immutable after construction; evaluation is pure and safe to share.
class IsotropicExponent {
public:
    IsotropicExponent(std::string name, int dim, RadialFn pure_jump_psi, double gaussian_coeff = 0.0,
                      std::optional<double> rv_index_zero = {}, std::optional<double> rv_index_inf = {},
                      bool monotone_hint = false);

    double operator()(double r) const;

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    double gaussian_coeff() const { return eta_; }
    std::optional<double> rv_index_zero() const { return idx_zero_; }
    std::optional<double> rv_index_inf() const { return idx_inf_; }
    bool monotone_hint() const { return monotone_; }

    IsotropicExponent with_monotone_hint(bool hint) const;
    IsotropicExponent with_indices(std::optional<double> zero, std::optional<double> inf) const;

private:
    std::string name_;
    int dim_;
    RadialFn jump_;
    double eta_;
    std::optional<double> idx_zero_, idx_inf_;
    bool monotone_;
};

/// Running supremum psi*(u) = sup_{s in [0,u]} psi(s): 256-point log grid on
/// [u*1e-6, u] plus golden-section refinement around the top grid maxima.
/// Monotone-hinted exponents short-circuit to psi(u) (identical value there).
double psi_star(const IsotropicExponent& psi, double u);
double psi_star(const IsotropicExponent& psi, double u, int base_grid_points);

/// Generalized inverse psi^-(u) = min{r >= 0 : psi*(r) >= u}. Geometric bracket
/// expansion from r = 1 (factor 4) followed by 80 bisection steps. Throws
/// unreachable_level when psi* cannot reach u anywhere in the numeric range.
double psi_inverse(const IsotropicExponent& psi, double u);

struct RegularVariationEstimate {
    double index_hat = 0.0;
    double r_lo = 0.0, r_hi = 0.0; // abscissa window used
    double residual = 0.0;         // RMS residual of the log-log fit
    LimitPoint limit_point = LimitPoint::zero;
};

struct RvEstimateOptions {
    double anchor_zero = 1e-3; // window [anchor*10^-decades, anchor]
    double anchor_inf = 1e3;   // window [anchor, anchor*10^decades]
    int points_per_decade = 32;
};

/// Least-squares slope of log psi vs log r over `decades` decades approaching the
/// limit point. Throws numeric_range when psi under/overflows in the window.
RegularVariationEstimate rv_index_estimate(const IsotropicExponent& psi, LimitPoint at, int decades,
                                           const RvEstimateOptions& opt = {});

/// Largest delta (from a log-spaced candidate ladder capped at 1) such that the
/// Potter inequality l(x) <= C l(y) max(x/y, y/x)^eps holds for all sampled
/// pairs with x, y <= delta (at zero) or x, y >= 1/delta (at infinity), where
/// l(r) = psi(r) r^{-alpha}. Returns 0 when no candidate passes.
double potter_check(const IsotropicExponent& psi, double C, double eps, LimitPoint at);

/// Radial density of an isotropic unimodal Levy measure.
class LevyDensityProfile {
public:
    LevyDensityProfile(int dim, RadialFn nu, std::optional<double> singular_index_hint = {},
                       std::vector<double> breakpoints = {});

    double operator()(double r) const { return nu_(r); }
    int dim() const { return dim_; }
    std::optional<double> singular_index_hint() const { return hint_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// \int_0^inf min(1, r^2) nu(r) r^{d-1} dr, the Levy integrability functional.
    double levy_integral(const QuadratureConfig& cfg) const;

private:
    int dim_;
    RadialFn nu_;
    std::optional<double> hint_;
    std::vector<double> breakpoints_;
};

/// Pure-jump exponent value psi(r) = \int_0^inf k(r s) nu(s) s^{d-1} ds. The
/// integral splits at s = 1/r: quadratic kernel regime below, the oscillatory
/// remainder k = sigma - h above. Throws nonintegrable when the Levy
/// integrability pre-check fails.
double exponent_from_levy_density(const LevyDensityProfile& profile, double r, const QuadratureConfig& cfg);

struct MemoRange {
    double r_min = 1e-6;
    double r_max = 1e10;
};

/// Eagerly tabulates the kernel transform of `profile` on a log grid and wraps a
/// monotone-cubic log-log interpolant (power-law continuation beyond the grid)
/// as an exponent. Used for catalog families without a closed form.
IsotropicExponent memoized_exponent_from_levy(std::string name, const LevyDensityProfile& profile,
                                              const QuadratureConfig& cfg, const MemoRange& range = {},
                                              std::optional<double> rv_index_zero = {},
                                              std::optional<double> rv_index_inf = {});

} // namespace unilevy

#endif
