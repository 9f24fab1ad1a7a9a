#include "unilevy/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace unilevy {

namespace {

const char* errc_names[] = {
    "UNREACHABLE_LEVEL", "NUMERIC_RANGE",   "MISSING_INDEX",  "INDEX_RANGE",
    "PARAM_RANGE",       "NONINTEGRABLE",   "NOT_INTEGRABLE", "STRIP_VIOLATION",
    "DIVERGENT",         "SLOW_DECAY",      "NO_CONVERGENCE", "TRANSIENCE_FAIL",
    "NO_LEVY_DENSITY",   "DOMAIN",          "CONFIG",
};

} // namespace

const char* errc_name(Errc code) noexcept { return errc_names[static_cast<int>(code)]; }

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) raise(Errc::config_error, "rel_tol must be in (0, 1)");
    if (!(abs_tol > 0.0)) raise(Errc::config_error, "abs_tol must be positive");
    if (max_segments <= 0) raise(Errc::config_error, "max_segments must be positive");
    if (oscillatory_accel_terms <= 0) raise(Errc::config_error, "oscillatory_accel_terms must be positive");
    if (grid_points_per_decade <= 0) raise(Errc::config_error, "grid_points_per_decade must be positive");
    if (!(divergence_threshold > 0.0)) raise(Errc::config_error, "divergence_threshold must be positive");
}

double integrate(const RadialFn& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 14, cfg.rel_tol, &err);
    return v;
}

double integrate_singular(const RadialFn& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(b > a)) return 0.0;
    boost::math::quadrature::tanh_sinh<double> ts(13);
    return ts.integrate(f, a, b, std::max(cfg.rel_tol * 0.1, 1e-13));
}

double integrate_singular(const RadialFn& f, double a, double b, std::span<const double> breakpoints,
                          const QuadratureConfig& cfg) {
    std::vector<double> cuts{a};
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_singular(f, cuts[i], cuts[i + 1], cfg);
    return total;
}

double integrate_to_infinity(const RadialFn& f, double a, double scale, const QuadratureConfig& cfg) {
    if (scale <= 0.0) scale = std::max(a, 1.0);
    double lo = a;
    double hi = std::max(a + scale, a * 2.0);
    double total = 0.0;
    int quiet = 0;          // consecutive negligible panels
    double prev = HUGE_VAL; // |previous panel|
    for (int panel = 0; panel < 200; ++panel) {
        double piece = integrate(f, lo, hi, cfg);
        total += piece;
        double cutoff = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) * 0.01;
        if (std::abs(piece) < cutoff && std::abs(piece) <= prev) {
            if (++quiet >= 3) return total;
        } else {
            quiet = 0;
        }
        prev = std::abs(piece);
        lo = hi;
        hi = 2.0 * hi;
        if (!std::isfinite(hi)) break;
    }
    raise(Errc::no_convergence, "semi-infinite integral did not settle");
}

} // namespace unilevy
