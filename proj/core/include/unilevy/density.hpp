#ifndef UNILEVY_DENSITY_HPP
#define UNILEVY_DENSITY_HPP

#include "unilevy/catalog.hpp"

namespace unilevy {

struct DensityQuery {
    double t;      // time, > 0
    double x_norm; // radius |x|, >= 0
};

/// Transition density p(t, x) by radial Fourier inversion of e^{-t psi}.
/// Falls back to the origin formula when |x| psi^-(1/t) < 1e-3 (the inversion
/// loses accuracy exactly where eq-31-style control makes the gap negligible).
/// Throws not_integrable when the e^{-t psi} integrability probe fails.
double density_at(const ProcessModel& model, const DensityQuery& q, const QuadratureConfig& cfg);

/// p(t, 0) = 2^{1-d} pi^{-d/2} Gamma(d/2)^{-1} \int_0^inf e^{-t psi(r)} r^{d-1} dr.
double density_at_origin(const ProcessModel& model, double t, const QuadratureConfig& cfg);

/// p(t,0) / (psi^-(1/t))^d normalized by 2^{1-d} Gamma(1+d/alpha) / (d pi^{d/2} Gamma(d/2)).
/// `t_limit` selects the index side: zero-index for t -> inf, infinity-index for
/// t -> 0+. Throws missing_index / index_range (alpha = 0 is out of scope).
double origin_karamata_ratio(const ProcessModel& model, double t, LimitPoint t_limit,
                             const QuadratureConfig& cfg);

/// p(t, x) / p(t, 0).
double srlt_ratio(const ProcessModel& model, const DensityQuery& q, const QuadratureConfig& cfg);

} // namespace unilevy

#endif
