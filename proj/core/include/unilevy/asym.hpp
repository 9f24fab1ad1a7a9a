#ifndef UNILEVY_ASYM_HPP
#define UNILEVY_ASYM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unilevy/catalog.hpp"

namespace unilevy {

enum class ConstantKind { A, C, C_tilde, A_tilde };

/// Closed-form limit constants:
///   A(d,a)  = a 2^{a-1} pi^{-d/2-1} sin(a pi/2) Gamma(a/2) Gamma((d+a)/2),  a in (0,2)
///   C(d,a)  = 2^a  Gamma((d+a)/2) / (Gamma(d/2) Gamma(1-a/2)),              a in [0,2)
///   C~(d,a) = 2^-a Gamma((d-a)/2) / (Gamma(d/2) Gamma(1+a/2)),              a in [0,2], d >= 3
///   A~(d,a) = 2^-a pi^{-d/2} Gamma((d-a)/2) / Gamma(a/2),                   a in (0,2], d >= 3
struct AsymConstant {
    ConstantKind kind;
    int dim;
    double index;
    double value;
};

AsymConstant constant(ConstantKind kind, int dim, double alpha); // throws domain_error

/// Verifies A = a C Gamma(d/2) / (2 pi^{d/2}), the tilde twin (d >= 3), and the
/// kernel reciprocal A(d,a) * kcheck(a) = 1 against the numeric Mellin transform.
/// Returns false (with a report when requested) instead of throwing.
bool constant_identities(int dim, double alpha, const QuadratureConfig& cfg, std::string* report = nullptr);

enum class Verdict { converged, inconclusive, diverged };
const char* verdict_name(Verdict v) noexcept;

struct ConvergenceReport {
    std::vector<double> control;  // driven parameter s per level
    std::vector<double> ratios;   // mean measured ratio per level
    std::vector<double> spreads;  // worst |ratio - mean| across the r-grid per level
    double extrapolated = 0.0;
    double error_estimate = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::optional<double> target; // constant the ratios should approach, when known
};

enum class ProbePath { t_psi_to_zero, t_psi_to_inf };

struct LimitProbeOptions {
    std::vector<double> levels;             // strictly monotone, >= 3 values
    std::vector<double> r_grid;             // abscissae approaching the limit point
    double converged_threshold = 0.05;      // relative to max(|extrapolated|, |target|)
    std::optional<double> target;
};

/// Drives ratio_fn(t, r) along t = s / scale(r) for every level s and r in the
/// grid, extrapolates the per-level means in the level sequence, and reports.
ConvergenceReport limit_probe(const std::function<double(double, double)>& ratio_fn,
                              const std::function<double(double)>& scale, ProbePath path,
                              const LimitProbeOptions& opt);

/// nu(|x|) / (|x|^{-d} psi(1/|x|)). Throws no_levy_density.
double levy_ratio(const ProcessModel& model, double x_norm, const QuadratureConfig& cfg);

/// p(t, x) / (t nu(x)), the vague-limit diagnostic.
double density_levy_ratio(const ProcessModel& model, double t, double x_norm, const QuadratureConfig& cfg);

struct ComparabilityConstants {
    double c_low;
    double c_high;
};

/// Empirical inf and sup of p(t,x) / min{p(t,0), t |x|^{-d} psi(1/|x|)} over the
/// (t, r) grid.
ComparabilityConstants bgr_check(const ProcessModel& model, std::span<const double> t_grid,
                                 std::span<const double> r_grid, const QuadratureConfig& cfg);

/// Rebuilds psi from the model's Levy density via the kernel transform and
/// estimates its regular-variation index at `at` - a numerical witness of the
/// index-recovery direction.
RegularVariationEstimate index_recovery_from_levy(const ProcessModel& model, LimitPoint at,
                                                  const QuadratureConfig& cfg);

} // namespace unilevy

#endif
