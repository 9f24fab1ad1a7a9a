#ifndef UNILEVY_CATALOG_HPP
#define UNILEVY_CATALOG_HPP

#include <map>
#include <optional>
#include <string>

#include "unilevy/exponent.hpp"

namespace unilevy {

enum class Family {
    stable,         // psi = r^alpha, nu = A_{d,alpha} r^{-d-alpha}
    relativistic,   // psi = (r^2+1)^{alpha/2} - 1
    tempered,       // nu = r^{-d-alpha} e^{-r}
    truncated,      // nu = r^{-d-alpha} on (0,1)
    lamperti,       // nu = r^{1-d} e^{delta r} (e^r - 1)^{-alpha-1}
    layered,        // nu = r^{-d-alpha} on (0,1), r^{-d-alpha1} beyond
    log_exponent,   // psi = r^alpha log^beta(1 + r^gamma)
    loglevy,        // nu = r^{-d-alpha} log^beta(1 + e^beta + r)
    gamma_variance, // psi = log(1 + r^2)
    brownian,       // psi = eta r^2
};

const char* family_name(Family f) noexcept;
std::optional<Family> family_from_name(const std::string& name); // accepts the "cauchy" alias

/// Named bundle of exponent, optional Levy density and metadata.
struct ProcessModel {
    std::string name;
    int dim = 1;
    Family family = Family::stable;
    std::map<std::string, double> params;
    IsotropicExponent exponent;
    std::optional<LevyDensityProfile> levy;
    bool unimodal = true;

    double psi(double r) const { return exponent(r); }
};

/// Instantiates a catalog family. Exponents without a closed form (tempered,
/// truncated, lamperti, layered, loglevy) are memoized kernel transforms of
/// their Levy density. Throws param_range for out-of-range parameters.
ProcessModel catalog(Family family, int dim, const std::map<std::string, double>& params,
                     const QuadratureConfig& cfg = {});
ProcessModel catalog(const std::string& family, int dim, const std::map<std::string, double>& params,
                     const QuadratureConfig& cfg = {});

} // namespace unilevy

#endif
