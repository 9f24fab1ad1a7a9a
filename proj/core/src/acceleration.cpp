#include "unilevy/acceleration.hpp"

#include <cmath>
#include <vector>

namespace unilevy {

// Classic two-row epsilon scheme. Even columns carry the extrapolants; the error
// estimate is the change across the last two usable even columns. Degenerate
// denominators end the recursion at the deepest column reached so far.
EpsilonResult epsilon_limit(std::span<const double> partial_sums, int max_columns) {
    const int n = static_cast<int>(partial_sums.size());
    EpsilonResult out;
    if (n == 0) return out;
    out.value = partial_sums.back();
    if (n == 1) return out;

    std::vector<double> cur(partial_sums.begin(), partial_sums.end());
    std::vector<double> prev(n, 0.0); // epsilon_{-1} = 0
    std::vector<double> next;

    double best = cur.back();
    double prev_best = cur.front();
    int used = 0;

    const int max_even = std::min(max_columns, (n - 1) / 2);
    for (int k = 1; k <= 2 * max_even; ++k) {
        const int m = n - k;
        next.assign(m, 0.0);
        bool degenerate = false;
        for (int i = 0; i < m; ++i) {
            double diff = cur[i + 1] - cur[i];
            if (diff == 0.0 || !std::isfinite(diff)) {
                degenerate = true;
                break;
            }
            next[i] = prev[i + 1] + 1.0 / diff;
            if (!std::isfinite(next[i])) {
                degenerate = true;
                break;
            }
        }
        if (degenerate) break;
        prev.swap(cur);
        cur.swap(next);
        if (k % 2 == 0) {
            prev_best = best;
            best = cur.back();
            used = k / 2;
        }
    }

    out.value = best;
    out.error_estimate = std::abs(best - prev_best);
    out.columns = used;
    return out;
}

} // namespace unilevy
