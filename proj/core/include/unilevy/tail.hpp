#ifndef UNILEVY_TAIL_HPP
#define UNILEVY_TAIL_HPP

#include "unilevy/catalog.hpp"

namespace unilevy {

struct TailQuery {
    double t;      // time, > 0
    double radius; // threshold, > 0 (plain radius; conversions to the sqrt
                   // convention of the Laplace functional happen internally)
};

struct TailProbResult {
    double value; // clamped to [0, 1]
    double raw;   // as integrated
};

/// P(|X_t| >= radius). Small tails are computed directly as the Fourier-ball
/// integral of 1 - e^{-t psi} (no 1-minus cancellation); bulk tails as the
/// complement of the ball mass.
double tail_prob(const ProcessModel& model, const TailQuery& q, const QuadratureConfig& cfg);
TailProbResult tail_prob_raw(const ProcessModel& model, const TailQuery& q, const QuadratureConfig& cfg);

/// lambda * (Laplace transform of F_t)(lambda) with F_t(r) = P(|X_t| >= sqrt(r)):
/// 2^{1-d} Gamma(d/2)^{-1} \int_0^inf (1 - e^{-t psi(r sqrt(lambda))}) e^{-r^2/4} r^{d-1} dr.
/// Bounded by 1; needs no density inversion.
double laplace_functional(const ProcessModel& model, double t, double lambda, const QuadratureConfig& cfg);

/// P(|X_t| >= 1/r) / (t psi(r)). `side` names the limit point of the declared
/// index (zero: r -> 0+, infinity: r -> inf). Throws missing_index, or
/// index_range when alpha = 2 (excluded by the tail limit theorems).
double tail_ratio(const ProcessModel& model, double t, double r, LimitPoint side,
                  const QuadratureConfig& cfg);

} // namespace unilevy

#endif
