#ifndef QSIG_ERRORS_HPP
#define QSIG_ERRORS_HPP

#include <stdexcept>

namespace qsig {

// Error taxonomy shared across the library. The CLI maps anything derived
// from parameter_error to exit status 2 (inadmissible parameters).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error {
    using error::error;
};

struct parameter_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct resource_error : error {
    using error::error;
};

// Settings that leak enough information for the attacker to win outright.
struct insecure_parameters_error : parameter_error {
    using parameter_error::parameter_error;
};

struct degenerate_bound_error : error {
    using error::error;
};

struct sweep_error : parameter_error {
    using parameter_error::parameter_error;
};

} // namespace qsig

#endif
