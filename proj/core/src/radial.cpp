#include "unilevy/radial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "unilevy/acceleration.hpp"

namespace unilevy {

namespace {

/// switch radius below which kernel_k uses its even Taylor series; the closed
/// form loses ~7 digits to cancellation there
const double KERNEL_SERIES_SWITCH = 1e-3;
const int KERNEL_SERIES_TERMS = 4;

/// envelope growth exponent past which the alternating segment series is not
/// Abel-summable in practice
const double MAX_ENVELOPE_GROWTH = 0.98;

/// fraction of the peak envelope treated as "support" when probing decay
const double SUPPORT_FRACTION = 1e-3;

double bessel_j(double nu, double x) {
    if (nu == -0.5) return std::sqrt(2.0 / (M_PI * x)) * std::cos(x);
    if (nu == 0.5) return std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
    return boost::math::cyl_bessel_j(nu, x);
}

double bessel_j_zero(double nu, int m) {
    if (nu == -0.5) return (m - 0.5) * M_PI;
    if (nu == 0.5) return m * M_PI;
    return boost::math::cyl_bessel_j_zero(nu, m);
}

double gauss30(const RadialFn& g, double a, double b) {
    return boost::math::quadrature::gauss<double, 30>::integrate(g, a, b);
}

double segment_integral(const RadialFn& g, double a, double b, std::span<const double> breakpoints) {
    double total = 0.0;
    double lo = a;
    for (double c : breakpoints) {
        if (c > lo && c < b) {
            total += gauss30(g, lo, c);
            lo = c;
        }
    }
    return total + gauss30(g, lo, b);
}

} // namespace

double surface_measure(int dim) {
    if (dim < 1) raise(Errc::domain_error, "surface_measure needs dim >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double kernel_k(double r, int dim) {
    if (dim < 1) raise(Errc::domain_error, "kernel_k needs dim >= 1");
    if (r < 0.0) raise(Errc::domain_error, "kernel_k needs r >= 0");
    if (dim == 1) {
        double s = std::sin(0.5 * r);
        return 4.0 * s * s;
    }
    const double sigma = surface_measure(dim);
    if (r < KERNEL_SERIES_SWITCH) {
        // sigma * r^2/(2d) * (1 - r^2/(4(d+2)) * (1 - ...)) with the recurrence
        // term_{j+1}/term_j = -r^2 / ((d+2j)(2j+2))
        double term = sigma * r * r / (2.0 * dim);
        double sum = term;
        for (int j = 1; j < KERNEL_SERIES_TERMS; ++j) {
            term *= -r * r / ((dim + 2.0 * j) * (2.0 * j + 2.0));
            sum += term;
        }
        return sum;
    }
    double nu = 0.5 * dim - 1.0;
    double value = sigma - std::pow(2.0 * M_PI, 0.5 * dim) * bessel_j(nu, r) * std::pow(r, 1.0 - 0.5 * dim);
    return value;
}

double kernel_upper_bound(double r, int dim) {
    return std::min(2.0, r * r / (2.0 * dim)) * surface_measure(dim);
}

// ---------------------------------------------------------------------------
// oscillatory engine
// ---------------------------------------------------------------------------

namespace {

struct SupportProbe {
    double radius;  // where the envelope has fallen below SUPPORT_FRACTION of its peak
    bool localized; // false when the envelope is still significant at the probe cap
};

// scan |f(r)| r^power on a geometric grid between lo and hi
SupportProbe probe_support(const RadialFn& f, double power, double lo, double hi) {
    double peak = 0.0;
    std::vector<std::pair<double, double>> samples;
    for (double r = lo; r <= hi * 1.000001; r *= 2.0) {
        double e = std::abs(f(r)) * std::pow(r, power);
        if (std::isfinite(e)) peak = std::max(peak, e);
        samples.emplace_back(r, e);
    }
    if (peak <= 0.0) return {lo, true};
    double radius = hi;
    for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
        if (std::isfinite(it->second) && it->second > SUPPORT_FRACTION * peak) {
            radius = it->first;
            break;
        }
        radius = it->first;
    }
    bool localized = samples.back().second <= SUPPORT_FRACTION * peak || !std::isfinite(samples.back().second);
    return {radius, localized};
}

} // namespace

double bessel_series_integral(const RadialFn& f, double nu, double omega, double power, double a,
                              double scale, const QuadratureConfig& cfg,
                              std::span<const double> breakpoints) {
    if (!(omega > 0.0)) raise(Errc::domain_error, "bessel_series_integral needs omega > 0");
    cfg.validate();

    auto g = [&](double r) { return f(r) * bessel_j(nu, omega * r) * std::pow(r, power); };

    // first Bessel zero past a
    int k0 = 1;
    double z = bessel_j_zero(nu, k0) / omega;
    while (z <= a) z = bessel_j_zero(nu, ++k0) / omega;

    // head region [a, z): if the integrand support ends well before the first
    // oscillation, split the head so tanh-sinh is not asked to find a spike
    double support = scale;
    if (support <= 0.0) {
        SupportProbe p = probe_support(f, power, std::max(a, z * 1e-12) + (a > 0.0 ? 0.0 : z * 1e-12), z);
        support = p.radius;
    }
    double head_end = std::min(z, std::max(8.0 * support, a > 0.0 ? a * 1.0000001 : 0.0));
    double total = integrate_singular(f ? RadialFn(g) : RadialFn(g), a, head_end, breakpoints, cfg);

    // bridge from the head to the first zero in doubling panels
    {
        double lo = head_end;
        int quiet = 0;
        while (lo < z * 0.9999999) {
            double hi = std::min(2.0 * lo, z);
            double piece = segment_integral(g, lo, hi, breakpoints);
            total += piece;
            if (std::abs(piece) < 0.01 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
                ++quiet;
            else
                quiet = 0;
            lo = hi;
            if (quiet >= 60) break; // decayed long ago; remaining panels are noise
        }
    }

    // alternating segment series between consecutive zeros, epsilon-accelerated
    std::vector<double> sums;
    sums.reserve(64);
    double tail = 0.0;
    double prev_eps_err = HUGE_VAL;
    double last_term = HUGE_VAL;
    int settled = 0;
    for (int k = 0; k < cfg.max_segments; ++k) {
        double z_next = bessel_j_zero(nu, k0 + k + 1) / omega;
        double term = segment_integral(g, z, z_next, breakpoints);
        z = z_next;
        tail += term;
        sums.push_back(tail);

        double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total + tail));
        if (std::abs(term) < 0.25 * target && last_term < 0.25 * target) return total + tail;
        last_term = std::abs(term);

        if (sums.size() >= 5) {
            EpsilonResult eps = epsilon_limit(sums, cfg.oscillatory_accel_terms);
            double est = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total + eps.value));
            if (eps.error_estimate < 0.5 * est && prev_eps_err < 0.5 * est) return total + eps.value;
            prev_eps_err = eps.error_estimate;
            if (eps.error_estimate < 0.5 * est) ++settled;
        }
    }

    EpsilonResult eps = epsilon_limit(sums, cfg.oscillatory_accel_terms);
    if (eps.error_estimate < std::sqrt(cfg.rel_tol) * std::max(std::abs(total + eps.value), 1e-300))
        return total + eps.value;
    raise(Errc::no_convergence, "oscillatory tail did not converge within max_segments");
}

double hankel_inverse(const RadialFn& f, double x_norm, int dim, const QuadratureConfig& cfg, double scale) {
    if (dim < 1) raise(Errc::domain_error, "hankel_inverse needs dim >= 1");
    if (!(x_norm > 0.0)) raise(Errc::domain_error, "hankel_inverse needs |x| > 0");

    const double power = 0.5 * dim;

    // tail probe: the zero-partition envelope behaves like |f(r)| r^{power-1/2};
    // reject when it grows too fast to sum, or when f does not decay at all
    {
        double r0 = 1048576.0 * std::max(scale > 0.0 ? scale : 1.0 / x_norm, 1.0 / x_norm);
        double v0 = std::abs(f(r0));
        double floor_ref = std::abs(f(std::max(scale > 0.0 ? scale : 1.0 / x_norm, 1e-8)));
        if (v0 > cfg.abs_tol + 1e-300 * floor_ref || floor_ref == 0.0) {
            double slope = 0.0;
            int used = 0;
            double prev = v0, r = r0;
            for (int j = 0; j < 3; ++j) {
                r *= 4.0;
                double v = std::abs(f(r));
                if (prev > 0.0 && v > 0.0) {
                    slope += std::log2(v / prev) / 2.0; // per doubling
                    ++used;
                }
                prev = v;
            }
            if (used == 0 && v0 > 0.0) raise(Errc::slow_decay, "tail probe: f vanished inconsistently");
            if (used > 0) {
                slope /= used;
                if (slope > -0.02) raise(Errc::slow_decay, "tail probe: f(r) does not decay");
                if (slope + power - 0.5 > MAX_ENVELOPE_GROWTH)
                    raise(Errc::slow_decay, "tail probe: envelope grows too fast to sum");
            }
        }
    }

    double nu = 0.5 * dim - 1.0;
    double integral = bessel_series_integral(f, nu, x_norm, power, 0.0, scale, cfg);
    return std::pow(2.0 * M_PI, -0.5 * dim) * std::pow(x_norm, 1.0 - 0.5 * dim) * integral;
}

// ---------------------------------------------------------------------------
// Mellin machinery
// ---------------------------------------------------------------------------

double mellin_k(double z, int dim, const QuadratureConfig& cfg) {
    if (!(z > 0.0 && z < 2.0)) raise(Errc::strip_violation, "mellin_k needs 0 < z < 2");
    double head = integrate_singular([&](double t) { return std::pow(t, -z - 1.0) * kernel_k(t, dim); },
                                     0.0, 1.0, cfg);
    const double sigma = surface_measure(dim);
    if (dim == 1) {
        // tail of 2(1-cos t): sigma/z minus the cosine part
        double osc = bessel_series_integral([](double) { return 1.0; }, -0.5, 1.0, -z - 0.5, 1.0, 1.0, cfg);
        return head + sigma / z - std::sqrt(2.0 * M_PI) * osc;
    }
    double nu = 0.5 * dim - 1.0;
    double osc = bessel_series_integral([](double) { return 1.0; }, nu, 1.0, -z - 0.5 * dim, 1.0, 1.0, cfg);
    return head + sigma / z - std::pow(2.0 * M_PI, 0.5 * dim) * osc;
}

MellinKResult mellin_k_checked(double z, int dim, const QuadratureConfig& cfg) {
    double v = mellin_k(z, dim, cfg);
    return {v, std::abs(v) > cfg.divergence_threshold};
}

double mellin_convolution(const RadialFn& f, const RadialFn& g, double x, const QuadratureConfig& cfg) {
    if (!(x > 0.0)) raise(Errc::domain_error, "mellin_convolution needs x > 0");
    auto h = [&](double u) { return f(x * std::exp(-u)) * g(std::exp(u)); };

    double ref = 0.0;
    for (int i = -4; i <= 4; ++i) ref = std::max(ref, std::abs(h(0.5 * i)));
    bool decays_right = false, decays_left = false;
    for (double u : {8.0, 16.0, 32.0, 64.0, 128.0}) {
        if (!decays_right && std::abs(h(u)) < 1e-6 * ref + cfg.abs_tol) decays_right = true;
        if (!decays_left && std::abs(h(-u)) < 1e-6 * ref + cfg.abs_tol) decays_left = true;
    }
    if (ref > 0.0 && (!decays_right || !decays_left))
        raise(Errc::no_convergence, "mellin_convolution probe: integrand does not decay");

    double total = 0.0;
    for (int dir : {+1, -1}) {
        int quiet = 0;
        for (int j = 0; j < 700; ++j) {
            double lo = dir > 0 ? j : -(j + 1.0);
            double piece = integrate(h, lo, lo + 1.0, cfg);
            total += piece;
            if (std::abs(piece) < 0.01 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
    }
    return total;
}

} // namespace unilevy
