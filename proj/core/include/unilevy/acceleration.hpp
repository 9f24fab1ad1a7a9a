#ifndef UNILEVY_ACCELERATION_HPP
#define UNILEVY_ACCELERATION_HPP

#include <span>

namespace unilevy {

struct EpsilonResult {
    double value = 0.0;          // best extrapolant
    double error_estimate = 0.0; // |last change| across even epsilon columns
    int columns = 0;             // even columns actually used
};

/// Wynn's epsilon algorithm on a sequence of partial sums (equivalently, iterated
/// Aitken extrapolation). Sums the alternating segment series of oscillatory
/// integrals, including Abel-summable ones whose terms do not decay, and
/// extrapolates limit-probe level sequences.
EpsilonResult epsilon_limit(std::span<const double> partial_sums, int max_columns);

} // namespace unilevy

#endif
