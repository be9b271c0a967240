#ifndef QSIG_CONJECTURE_HPP
#define QSIG_CONJECTURE_HPP

#include <cstdint>
#include <gmpxx.h>

namespace qsig {

// Exact big-integer verification of the monotonicity conjecture for the
// normalized ball mean
//
//     f(x,r) = (1/r) * sum_{w<=r} w*C(x,w) / sum_{w<=r} C(x,w),   1 <= r <= x/2,
//
// claimed decreasing in r, plus the closed-form identities and tail bounds
// the forgery analysis leans on. Everything here is exact rational/integer
// arithmetic; floating point only appears in the tail-sandwich bounds, which
// are compared in log2 space.

mpq_class shell_mean(std::int64_t x, std::int64_t r);

// f(2z, z) = 1 / (1 + C(2z,z)/2^(2z)), as an exact rational.
mpq_class shell_mean_half(std::int64_t z);

// Exact check of f(2z,z) >= 1/(1 + 1/sqrt(3z+1)), equivalent after squaring
// to C(2z,z)^2 * (3z+1) <= 2^(4z).
bool shell_mean_half_bound_holds(std::int64_t z);

struct MonotonicityReport {
    bool holds = true;
    std::int64_t x = 0, radius = 0;      // first counterexample when !holds
    mpq_class f_at_r, f_at_r_next;
    std::int64_t largest_x = 0;          // largest x actually examined
};

// Verify f(x, r+1) <= f(x, r) for every 1 <= r < x/2 at one x. The verdict
// is always exact: a rigorous truncated-integer interval comparison screens
// each step and falls back to full cross-multiplication when inconclusive.
MonotonicityReport radius_monotonic(std::int64_t x);

// Reference path that cross-multiplies every comparison in full. Slower;
// kept as the check on the screened version.
MonotonicityReport radius_monotonic_exact(std::int64_t x);

// Exhaustive scan over 2 <= x <= x_max; reports the smallest-x counterexample.
MonotonicityReport scan_radius_monotonic(std::int64_t x_max);          // OpenMP
MonotonicityReport scan_radius_monotonic_serial(std::int64_t x_max);

// Two-sided estimate of sum_{k<=r} C(n,k) for r <= n/2:
//   2^(n*h(r/n)) / sqrt(8r(1-r/n))  <=  sum  <=  2^(n*h(r/n)).
// Values can exceed double range, so the comparison runs on log2 forms;
// lower/upper are +inf when not representable.
struct TailSandwich {
    mpz_class exact;
    double exact_log2 = 0.0;
    double lower_log2 = 0.0, upper_log2 = 0.0;
    double lower = 0.0, upper = 0.0;
    bool holds = false;
};

TailSandwich binomial_tail_sandwich(std::int64_t n, std::int64_t r);

} // namespace qsig

#endif
