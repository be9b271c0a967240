#include "qsig/gc_baseline.hpp"

#include <cmath>

#include "qsig/analysis.hpp"
#include "qsig/errors.hpp"

namespace qsig {

double gc_delta(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 0.25)) throw domain_error("gc_delta: gamma must lie in [0, 1/4]");
    return 1.0 - 4.0 * gamma;
}

GCForgery gc_forge1(const GCParams& params) {
    if (params.d < 2) throw parameter_error("gc_forge1: d must be >= 2");
    const double delta = gc_delta(params.gamma);
    const double log_d = std::log2(static_cast<double>(params.d));
    const double key_bits = static_cast<double>(params.d) * (1.0 - binary_entropy(params.gamma));
    const double margin = key_bits - static_cast<double>(params.T) * log_d;
    if (!(margin > 0.0))
        throw insecure_parameters_error("gc_forge1: key length L must exceed T*log2(d)");
    const double guess = std::exp2(-margin);
    GCForgery out;
    out.p_forge1 = guess + (1.0 - guess) * delta * delta;
    out.j_gc = 1.0 - out.p_forge1;
    return out;
}

GCMinDimension gc_min_dimension(int T, double gamma) {
    if (T < 2) throw parameter_error("gc_min_dimension: T must be >= 2");
    const double rate = 1.0 - binary_entropy(gamma);
    if (!(rate > 0.0)) throw domain_error("gc_min_dimension: embedding rate vanished");
    const double threshold = static_cast<double>(T) / rate;   // >= 2

    const auto above = [threshold](std::int64_t d) {
        return static_cast<double>(d) / std::log2(static_cast<double>(d)) > threshold;
    };
    // d/log2(d) dips at d=3 and grows from there on; with threshold >= 2 the
    // predicate is false at d=2, so bisection over [2, hi) is safe.
    std::int64_t hi = 4;
    while (!above(hi)) hi *= 2;
    std::int64_t lo = 2;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (above(mid)) hi = mid;
        else lo = mid;
    }
    GCMinDimension out;
    out.solved = hi;
    out.approx = std::llround(static_cast<double>(T) * std::log2(static_cast<double>(T)));
    return out;
}

double gc_min_codeword(double beta, double j_gc, double q_r_target) {
    if (!(beta > 0.0)) throw domain_error("gc_min_codeword: beta must be positive");
    if (!(j_gc > 0.0)) throw degenerate_bound_error("gc_min_codeword: J must be positive");
    if (!(q_r_target >= 0.0 && q_r_target < 1.0))
        throw domain_error("gc_min_codeword: target probability must lie in [0,1)");
    const double ln_term = -std::log1p(-q_r_target);   // ln 1/(1-q)
    return ln_term / (beta * j_gc);
}

double gc_rejection_threshold(double beta, double j_gc, double q_r_target, double N) {
    if (!(N > 0.0)) throw domain_error("gc_rejection_threshold: N must be positive");
    if (!(beta > 0.0)) throw domain_error("gc_rejection_threshold: beta must be positive");
    if (!(j_gc > 0.0)) throw degenerate_bound_error("gc_rejection_threshold: J must be positive");
    if (!(q_r_target >= 0.0 && q_r_target < 1.0))
        throw domain_error("gc_rejection_threshold: target probability must lie in [0,1)");
    const double ln_term = -std::log1p(-q_r_target);
    const double mean_half = beta * N * j_gc;
    return 2.0 * mean_half - 2.0 * std::sqrt(mean_half) * std::sqrt(ln_term);
}

double gc_qubits_per_bit(std::int64_t d, double beta, bool reuse) {
    if (d < 2) throw domain_error("gc_qubits_per_bit: d must be >= 2");
    if (!(beta > 0.0 && beta < 0.5)) throw domain_error("gc_qubits_per_bit: beta must lie in (0, 1/2)");
    const double copies = reuse ? 1.0 : 2.0;
    return copies * std::log2(static_cast<double>(d)) / (1.0 - binary_entropy(beta));
}

} // namespace qsig
