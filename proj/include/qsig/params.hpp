#ifndef QSIG_PARAMS_HPP
#define QSIG_PARAMS_HPP

#include <cmath>
#include <cstdint>

#include "qsig/coding.hpp"

namespace qsig {

// Full parameter block of the nonbinary scheme. S, N, K and theta live in
// `code`; alpha, ell and phi are derived. Structural validity (divisibility,
// threshold ordering) is checked by validate(); the stronger engineering
// constraints alpha*N <= z_acc < z_rej <= 2*theta*N are enforced where the
// parameters are derived, so that hand-built toy configurations (e.g. a
// vacuous z_acc = N threshold in a test) remain constructible.
struct SchemeParams {
    std::int64_t d = 0;        // Hilbert-space dimension == private-key length
    int T = 0;                 // number of verifiers / public-key copies
    CodeSpec code;
    std::int64_t z_acc = 0;    // tally <= z_acc  -> transferable accept
    std::int64_t z_rej = 0;    // tally >= z_rej  -> reject
    double eps_c = 0.0;        // correctness error budget
    double eps_f = 0.0;        // forgery error budget
    double nu = 0.0;           // margin constant in theta = (alpha/2)(1+nu)

    std::int64_t S() const { return code.alphabet_size; }
    std::int64_t hidden_length() const { return d / S(); }
    std::int64_t ell() const { return d - hidden_length(); }
    double alpha() const { return 1.0 / static_cast<double>(S()); }
    // Attacker information per hidden substring, relative to d.
    double phi() const { return static_cast<double>(T) * std::log2(static_cast<double>(d)) / static_cast<double>(d); }

    void validate() const;
};

} // namespace qsig

#endif
