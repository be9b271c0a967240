#include "qsig/protocol.hpp"

#include <cmath>
#include <omp.h>

#include "qsig/adversary.hpp"
#include "qsig/errors.hpp"
#include "qsig/fingerprint.hpp"
#include "qsig/rng.hpp"

namespace qsig {

KeySet keygen(const SchemeParams& params, std::uint64_t seed) {
    params.validate();
    KeySet set;
    set.keys.reserve(static_cast<std::size_t>(params.code.codeword_length));
    for (std::int64_t i = 0; i < params.code.codeword_length; ++i) {
        auto engine = make_engine(seed, static_cast<std::uint64_t>(i));
        set.keys.push_back(BitString::random(params.d, engine));
    }
    return set;
}

Signature sign(const KeySet& keys, const SymbolString& message, const SchemeParams& params) {
    params.validate();
    if (static_cast<std::int64_t>(keys.keys.size()) != params.code.codeword_length)
        throw parameter_error("sign: key count != N");
    const SymbolString codeword = encode(params.code, message);
    Signature sig;
    sig.revealed.reserve(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const IndexSet hidden = hidden_index_set(codeword[i], params.d, params.ell());
        sig.revealed.push_back(keys.keys[i].gather(hidden.complement()));
    }
    return sig;
}

Verdict verdict_of(std::int64_t tally, const SchemeParams& params) {
    if (tally <= params.z_acc) return Verdict::acc1;
    if (tally >= params.z_rej) return Verdict::rej;
    return Verdict::acc0;
}

VerifyOutcome verify_simulate(const KeySet& keys, const SymbolString& message,
                              const Signature& sig, const SchemeParams& params,
                              std::uint64_t seed) {
    params.validate();
    const std::int64_t n = params.code.codeword_length;
    if (static_cast<std::int64_t>(keys.keys.size()) != n)
        throw parameter_error("verify_simulate: key count != N");
    if (static_cast<std::int64_t>(sig.revealed.size()) != n)
        throw parameter_error("verify_simulate: signature has wrong number of substrings");
    for (const auto& k : sig.revealed)
        if (k.size() != params.ell())
            throw parameter_error("verify_simulate: revealed substring length != ell");

    const SymbolString codeword = encode(params.code, message);
    auto engine = make_engine(seed, 0);
    VerifyOutcome out;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const IndexSet hidden = hidden_index_set(codeword[i], params.d, params.ell());
        const double p = accept_probability(keys.keys[i], hidden, sig.revealed[i]);
        if (!bernoulli(engine, p)) ++out.tally;
    }
    out.verdict = verdict_of(out.tally, params);
    return out;
}

namespace {

struct ScenarioSetup {
    // Accept probability at unmodified positions.
    double p_base = 0.0;
    // Forgery only: which positions the attacker must re-sign, and the ball
    // model governing the guess distance there.
    std::vector<bool> modified;
    BallForgeryModel ball;
    std::int64_t ell = 0, d = 0;
    bool has_modified = false;
};

ScenarioSetup make_setup(Scenario scenario, const SchemeParams& params, std::uint64_t seed) {
    ScenarioSetup setup;
    const std::int64_t n = params.code.codeword_length;
    const double alpha = params.alpha();
    setup.ell = params.ell();
    setup.d = params.d;
    switch (scenario) {
    case Scenario::genuine:
        setup.p_base = 1.0 - alpha;
        break;
    case Scenario::forgery: {
        setup.p_base = 1.0 - alpha;
        const auto flips = static_cast<std::int64_t>(
            std::llround(2.0 * params.code.theta * static_cast<double>(n)));
        setup.modified.assign(static_cast<std::size_t>(n), false);
        if (flips > 0) {
            auto engine = make_engine(seed, 0);
            for (auto pos : sample_distinct(engine, n, flips))
                setup.modified[static_cast<std::size_t>(pos)] = true;
            setup.ball = BallForgeryModel::make(params.hidden_length(),
                                                optimal_radius(alpha, params.d, params.T));
            setup.has_modified = true;
        }
        break;
    }
    case Scenario::tuned_repudiation: {
        const double j_star = std::min(
            1.0, static_cast<double>(params.z_acc + params.z_rej) / (2.0 * static_cast<double>(n)));
        setup.p_base = 1.0 - j_star;
        break;
    }
    }
    return setup;
}

// One protocol run: fix the forgery guesses (if any), then let each of the T
// verifiers measure an independent copy position by position.
void run_one_trial(const ScenarioSetup& setup, const SchemeParams& params,
                   std::mt19937_64& engine, TrialStats& stats,
                   std::vector<double>& p_buf) {
    const std::int64_t n = params.code.codeword_length;
    const double* p_per_position = nullptr;
    if (setup.has_modified) {
        for (std::int64_t i = 0; i < n; ++i) {
            if (!setup.modified[static_cast<std::size_t>(i)]) {
                p_buf[static_cast<std::size_t>(i)] = setup.p_base;
                continue;
            }
            const std::int64_t w = setup.ball.sample_distance(engine);
            const std::int64_t num = (setup.ell - 2 * w) * (setup.ell - 2 * w);
            p_buf[static_cast<std::size_t>(i)] =
                static_cast<double>(num) /
                (static_cast<double>(setup.ell) * static_cast<double>(setup.d));
        }
        p_per_position = p_buf.data();
    }

    bool any_acc1 = false, any_rej = false;
    for (int v = 0; v < params.T; ++v) {
        std::int64_t tally = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            const double p = p_per_position ? p_per_position[i] : setup.p_base;
            if (!bernoulli(engine, p)) ++tally;
        }
        ++stats.tally_histogram[static_cast<std::size_t>(tally)];
        switch (verdict_of(tally, params)) {
        case Verdict::rej: ++stats.n_rej; any_rej = true; break;
        case Verdict::acc0: ++stats.n_acc0; break;
        case Verdict::acc1: ++stats.n_acc1; any_acc1 = true; break;
        }
    }
    if (any_acc1 && any_rej) ++stats.repudiation_trials;
}

TrialStats run_impl(Scenario scenario, const SchemeParams& params, std::int64_t trials,
                    std::uint64_t seed, bool parallel) {
    params.validate();
    if (trials < 1) throw parameter_error("run_trials: trials must be >= 1");
    const std::int64_t n = params.code.codeword_length;
    const ScenarioSetup setup = make_setup(scenario, params, seed);

    TrialStats total;
    total.trials = trials;
    total.verifiers = params.T;
    total.tally_histogram.assign(static_cast<std::size_t>(n) + 1, 0);

    // Integer aggregates only, so merging thread partials is exact and
    // independent of scheduling.
    #pragma omp parallel if (parallel)
    {
        TrialStats local;
        local.tally_histogram.assign(static_cast<std::size_t>(n) + 1, 0);
        std::vector<double> p_buf(static_cast<std::size_t>(n), 0.0);
        #pragma omp for schedule(static)
        for (std::int64_t t = 0; t < trials; ++t) {
            auto engine = make_engine(seed, static_cast<std::uint64_t>(t) + 1);
            run_one_trial(setup, params, engine, local, p_buf);
        }
        #pragma omp critical
        {
            total.n_rej += local.n_rej;
            total.n_acc0 += local.n_acc0;
            total.n_acc1 += local.n_acc1;
            total.repudiation_trials += local.repudiation_trials;
            for (std::size_t z = 0; z < total.tally_histogram.size(); ++z)
                total.tally_histogram[z] += local.tally_histogram[z];
        }
    }
    return total;
}

} // namespace

OutcomeDistribution TrialStats::empirical() const {
    const auto v = static_cast<double>(verifications());
    OutcomeDistribution dist;
    dist.q_r = static_cast<double>(n_rej) / v;
    dist.q_0 = static_cast<double>(n_acc0) / v;
    dist.q_1 = static_cast<double>(n_acc1) / v;
    return dist;
}

double TrialStats::stderr_of(double q) const {
    return std::sqrt(q * (1.0 - q) / static_cast<double>(verifications()));
}

double TrialStats::mean_tally() const {
    double sum = 0.0;
    for (std::size_t z = 0; z < tally_histogram.size(); ++z)
        sum += static_cast<double>(z) * static_cast<double>(tally_histogram[z]);
    return sum / static_cast<double>(verifications());
}

TrialStats run_trials(Scenario scenario, const SchemeParams& params, std::int64_t trials,
                      std::uint64_t seed) {
    return run_impl(scenario, params, trials, seed, true);
}

TrialStats run_trials_serial(Scenario scenario, const SchemeParams& params, std::int64_t trials,
                             std::uint64_t seed) {
    return run_impl(scenario, params, trials, seed, false);
}

} // namespace qsig
