#ifndef QSIG_ANALYSIS_HPP
#define QSIG_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsig/params.hpp"

namespace qsig {

// Figures of merit and parameter engineering: entropy helpers, Chernoff
// bounds, the repudiation algebra, correctness/forgery probabilities, the
// derived scheme settings, and qubit-per-bit accounting.

// Binary entropy h(p) = p log2(1/p) + (1-p) log2(1/(1-p)); h(0) = h(1) = 0.
double binary_entropy(double p);
// Left inverse of h onto [0, 1/2], by bisection; |h(h_inv(y)) - y| <= 1e-12.
double binary_entropy_inverse(double y);

// Pr[X >= mu(1+delta)] <= exp(-delta^2 mu / (2+delta))  (upper tail)
// Pr[X <= mu(1-delta)] <= exp(-delta^2 mu / 2)          (lower tail)
double chernoff_upper(double mu, double delta);
double chernoff_lower(double mu, double delta);

// Per-verification outcome law (reject / plain accept / transferable accept).
struct OutcomeDistribution {
    double q_r = 0.0, q_0 = 0.0, q_1 = 0.0;
    void validate() const;
};

// Probability that among T independent verifiers at least one rejects and at
// least one transferably accepts:
//   exact     = 1 - (1-q_r)^T - (1-q_1)^T + q_0^T
//   bound_pow = 1 - (1 - min(q_r,q_1))^T
//   bound_lin = T * min(q_r,q_1)
struct RepudiationBounds {
    double exact = 0.0, bound_pow = 0.0, bound_lin = 0.0;
};
RepudiationBounds repudiation_probability(const OutcomeDistribution& dist, int T);

// T * max(eps1, eps2), capped at 1.
double repudiation_from_eps(double eps1, double eps2, int T);

// Pr[Binomial(N, G) <= z_acc], absolute error <= 1e-12.
double genuine_accept_probability(std::int64_t N, double G, std::int64_t z_acc);

// Threshold formulas used by derive_parameters, exposed for direct checks:
//   accept:  ceil(N alpha + sqrt(N alpha) * sqrt(3 ln 1/eps_c))
//   reject:  floor(E - sqrt(E) * sqrt(2 ln 1/eps_f)),
//            E = (1-2 theta) N alpha + 2 theta N (1-p1)
std::int64_t accept_threshold(std::int64_t N, double alpha, double eps_c);
std::int64_t reject_threshold(std::int64_t N, double alpha, double theta, double p1, double eps_f);

// Scheme settings derived from (alpha, d, T, nu, eps_c, eps_f):
//   theta = (alpha/2)(1+nu)
//   N     = alpha^-3 * ((sqrt(3 ln 1/eps_c) + sqrt(1+4 theta) sqrt(2 ln 1/eps_f))
//           / (gap/alpha))^2
//   z_acc = ceil(N alpha + sqrt(N alpha) sqrt(3 ln 1/eps_c))
//   z_rej = floor(E - sqrt(E) sqrt(2 ln 1/eps_f)),  E = (1-2theta)N alpha + 2theta N(1-p1)
// Enforces alpha*N <= z_acc < z_rej <= 2*theta*N and names the violated
// constraint otherwise. p1_correction toggles the finite-size
// sqrt(8/3)*sqrt(d-ell)/ell term inside the forgery bound.
SchemeParams derive_parameters(double alpha, std::int64_t d, int T, double nu,
                               double eps_c, double eps_f, bool p1_correction = true);

// Lower bound on the reject probability under the cheapest forgery, via the
// lower-tail Chernoff bound at mean E and threshold z_rej.
double forgery_reject_probability(const SchemeParams& params);

// T * max(eps_f^(nu^2), eps_c^(nu^2)), capped at 1. The multiplicative
// 1+O(alpha) slack of the underlying bound is omitted; output metadata in the
// CLI says so.
double scheme_repudiation_bound(const SchemeParams& params);

struct QubitCost {
    double exact = 0.0;        // N log2(d) / (K log2 S)
    double asymptotic = 0.0;   // (log2 d / log2 S) / (1 - h(theta))
};
QubitCost qubits_per_bit(const SchemeParams& params);

struct FiguresOfMerit {
    double g = 0.0;                  // per-qudit false-reject rate (== alpha)
    double j = 0.0;                  // guaranteed per-qudit true-reject rate (1-p1)
    double p1 = 0.0;
    double gap = 0.0;                // j - g == 1 - p1 - alpha
    QubitCost qubits;
    double repudiation_bound = 0.0;
};
FiguresOfMerit figures_of_merit(const SchemeParams& params, bool p1_correction = true);

// One (alpha, d) point of the tradeoff table. Inadmissible points carry the
// violated constraint in `admissible` and NaN/-1 numeric fields.
struct SweepRow {
    double alpha = 0.0;
    std::int64_t d_requested = 0;    // before snapping to a multiple of S
    std::int64_t d = 0;              // snapped value actually evaluated
    double theta = 0.0;
    std::int64_t n_codeword = -1;
    double p1 = 0.0, gap = 0.0;
    double qubits_per_bit = 0.0;
    double gc_qubits_per_bit = 0.0;  // GC01 baseline at the same d, beta = theta, reuse on
    std::string admissible;          // "yes" or the violated constraint
};

enum class SweepAxis { gap, codelength };

struct SweepConfig {
    int T = 0;
    std::vector<double> alphas;
    std::int64_t d_min = 0, d_max = 0;
    int points = 0;
    double nu = 0.2, eps_c = 1e-9, eps_f = 1e-12;
    SweepAxis axis = SweepAxis::gap;
    bool p1_correction = true;
};

// Rows grouped by alpha (in the order given), each group ordered by the
// chosen axis; inadmissible rows follow their group in d order. Throws
// sweep_error when no point is admissible.
std::vector<SweepRow> sweep(const SweepConfig& config);          // OpenMP
std::vector<SweepRow> sweep_serial(const SweepConfig& config);

} // namespace qsig

#endif
