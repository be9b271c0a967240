#ifndef QSIG_PROTOCOL_HPP
#define QSIG_PROTOCOL_HPP

#include <cstdint>
#include <vector>

#include "qsig/analysis.hpp"
#include "qsig/bitstring.hpp"
#include "qsig/params.hpp"

namespace qsig {

// Signer and verifier machinery. Public keys are never materialized as
// amplitude vectors: every verification measurement is a binary projector on
// a pure product state, so each qudit outcome is an independent Bernoulli
// draw with the exactly computed acceptance probability.

struct KeySet {
    std::vector<BitString> keys;   // N private keys of length d
};

struct Signature {
    std::vector<BitString> revealed;   // N substrings of length ell
};

enum class Verdict { rej, acc0, acc1 };

struct VerifyOutcome {
    std::int64_t tally = 0;   // number of failed qudit projections
    Verdict verdict = Verdict::rej;
};

// N uniform independent d-bit keys; key i comes from substream i of `seed`.
KeySet keygen(const SchemeParams& params, std::uint64_t seed);

// Encode the message and reveal, per position i, the key bits outside the
// hidden block of codeword symbol c_i (increasing index order).
Signature sign(const KeySet& keys, const SymbolString& message, const SchemeParams& params);

// Statistically exact single verification of possibly corrupted data.
VerifyOutcome verify_simulate(const KeySet& keys, const SymbolString& message,
                              const Signature& sig, const SchemeParams& params,
                              std::uint64_t seed);

Verdict verdict_of(std::int64_t tally, const SchemeParams& params);

enum class Scenario { genuine, forgery, tuned_repudiation };

// Aggregate of trials * T verifications.
struct TrialStats {
    std::int64_t trials = 0;
    int verifiers = 0;
    std::int64_t n_rej = 0, n_acc0 = 0, n_acc1 = 0;
    std::int64_t repudiation_trials = 0;          // >=1 acc1 and >=1 rej among the T verdicts
    std::vector<std::int64_t> tally_histogram;    // index z = 0..N

    bool operator==(const TrialStats&) const = default;

    std::int64_t verifications() const { return trials * verifiers; }
    OutcomeDistribution empirical() const;
    double stderr_of(double q) const;             // binomial standard error over verifications
    double mean_tally() const;
    double repudiation_rate() const { return static_cast<double>(repudiation_trials) / static_cast<double>(trials); }
};

// Monte Carlo over independent protocol runs. Per-qudit error rates:
//   genuine            alpha everywhere
//   forgery            alpha outside the round(2*theta*N) modified positions,
//                      ball-attacker rate 1-(1-alpha)(1-2W/ell)^2 inside them
//   tuned_repudiation  (z_acc+z_rej)/(2N) everywhere
// Trial t uses substream t+1 of `seed`; substream 0 picks the modified
// positions. Results do not depend on the thread count.
TrialStats run_trials(Scenario scenario, const SchemeParams& params, std::int64_t trials,
                      std::uint64_t seed);
TrialStats run_trials_serial(Scenario scenario, const SchemeParams& params, std::int64_t trials,
                             std::uint64_t seed);

} // namespace qsig

#endif
