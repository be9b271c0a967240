#ifndef QSIG_ADVERSARY_HPP
#define QSIG_ADVERSARY_HPP

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <vector>

#include "qsig/bitstring.hpp"

namespace qsig {

// Worst-case forgery model: the attacker holding T public-key copies learns
// at most T log2(d) bits about the d-ell hidden bits, and the extremal
// strategy under that min-entropy constraint spreads its guess uniformly
// over a Hamming ball around the most likely hidden substring. Simulated
// forgery rates are therefore attack-side lower bounds to compare against
// the analytic acceptance bound p1.

// Ball radius consistent with the information constraint:
// ceil((d-ell) * h_inv(1 - phi/alpha)), clamped to [0, (d-ell)/2].
// Throws insecure_parameters_error when phi >= alpha (the attacker can learn
// the whole hidden substring).
std::int64_t optimal_radius(double alpha, std::int64_t d, int T);

// Exact mean Hamming distance of the ball distribution:
// sum w*C(n,w) / sum C(n,w) over w <= r. Equals r * shell_mean(n, r).
mpq_class ball_expected_distance(std::int64_t hidden_length, std::int64_t r);

struct ForgeryBound {
    double p1 = 0.0;    // upper bound on per-qudit accept probability when forging
    double gap = 0.0;   // 1 - p1 - alpha
};

// p1 = (1-alpha) * [ (1 - (alpha/(1-alpha)) * 2 h_inv(1 - phi/alpha))^2
//                    + sqrt(8/3) * sqrt(d-ell)/ell ],
// the last term dropped when include_correction is false. Always satisfies
// p1 > 1 - 3 alpha.
ForgeryBound forgery_bound(double alpha, std::int64_t d, int T, bool include_correction = true);

struct BallForgeryModel {
    std::int64_t hidden_length = 0;
    std::int64_t radius = 0;
    std::vector<double> shell_cdf;   // Pr[W <= w], w = 0..radius

    static BallForgeryModel make(std::int64_t hidden_length, std::int64_t radius);
    std::int64_t sample_distance(std::mt19937_64& g) const;
};

struct ForgeAttempt {
    BitString guess;
    std::int64_t realized_distance = 0;
};

// Sample a guess for the hidden substring: draw W from the ball distribution
// and flip W uniformly chosen positions of the true value.
ForgeAttempt forge_attempt(const BitString& true_hidden, const BallForgeryModel& model,
                           std::uint64_t seed);

} // namespace qsig

#endif
