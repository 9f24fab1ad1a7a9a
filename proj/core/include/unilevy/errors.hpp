#ifndef UNILEVY_ERRORS_HPP
#define UNILEVY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unilevy {

/// Failure codes surfaced by the numerical operations. The CLI reports the
/// canonical token (errc_name) in its machine-readable error output.
enum class Errc {
    unreachable_level,  // bracket expansion exhausted without psi* reaching the level
    numeric_range,      // under/overflow inside an estimation window
    missing_index,      // no declared or estimable regular-variation index
    index_range,        // index outside the domain of the requested limit theorem
    param_range,        // catalog parameters outside their admissible range
    nonintegrable,      // Levy integrability pre-check failed
    not_integrable,     // e^{-t psi} fails the integrability probe
    strip_violation,    // Mellin transform requested outside (0, 2)
    divergent,          // Mellin transform past the configured divergence threshold
    slow_decay,         // tail probe detected non-summable decay
    no_convergence,     // quadrature or series acceleration stalled
    transience_fail,    // potential-theory operation on a non-transient setting
    no_levy_density,    // model carries no Levy density profile
    domain_error,       // argument outside an operation's domain
    config_error,       // malformed configuration or model spec
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace unilevy

#endif
