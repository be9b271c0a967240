#ifndef QSIG_GC_BASELINE_HPP
#define QSIG_GC_BASELINE_HPP

#include <cstdint>

namespace qsig {

// Analytic cost model of the Gottesman-Chuang (GC01) signature scheme with
// codewords and fingerprinting-state embedding, used as the efficiency
// baseline. Asymptotic code rates are used throughout (embedding code:
// L/d = 1 - h(gamma); message code: K/N = 1 - h(beta)); no GC01 protocol run
// is ever simulated.

struct GCParams {
    std::int64_t d = 0;        // qudit dimension
    double gamma = 0.0;        // correctable rate of the embedding code
    double beta = 0.0;         // correctable rate of the message code
    int T = 0;                 // number of public-key copies
    bool reuse = false;        // re-use unopened public keys (halves the cost)
    double q_r_target = 0.0;   // target whole-message forgery detection probability
};

// Worst-case overlap between distinct public keys: delta = 1 - 4*gamma.
double gc_delta(double gamma);

struct GCForgery {
    double p_forge1 = 0.0;   // single-qudit forgery acceptance bound
    double j_gc = 0.0;       // 1 - p_forge1; the gap, since GC01 has G = 0
};

// p_forge1 = 2^-(L - T log2 d) + (1 - 2^-(L - T log2 d)) * delta^2 with
// L = d*(1-h(gamma)). Requires L > T log2 d.
GCForgery gc_forge1(const GCParams& params);

struct GCMinDimension {
    std::int64_t solved = 0;   // smallest d with d/log2(d) > T/(1-h(gamma))
    std::int64_t approx = 0;   // round(T log2 T)
};
GCMinDimension gc_min_dimension(int T, double gamma);

// Smallest codeword length with a positive rejection threshold:
// N_min = ln(1/(1 - q_r_target)) / (beta * j_gc).
double gc_min_codeword(double beta, double j_gc, double q_r_target);

// Rejection threshold at codeword length N:
// z_rej = 2 beta N j - 2 sqrt(beta N j) sqrt(ln 1/(1-q_r_target)).
// Positive exactly when N exceeds gc_min_codeword.
double gc_rejection_threshold(double beta, double j_gc, double q_r_target, double N);

// (2 - reuse) * log2(d) / (1 - h(beta)) qubits per signed message bit.
double gc_qubits_per_bit(std::int64_t d, double beta, bool reuse);

} // namespace qsig

#endif
