#include <cmath>
#include <doctest.h>
#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "qsig/errors.hpp"
#include "qsig/fingerprint.hpp"
#include "qsig/protocol.hpp"
#include "qsig/rng.hpp"

using namespace qsig;

namespace {

// End-to-end runnable toy instance: GF(16) Reed-Solomon, d = 64.
SchemeParams toy_params() {
    SchemeParams p;
    p.d = 64;                                   // hidden block of 4, ell = 60
    p.T = 3;
    p.code = CodeSpec::reed_solomon(16, 15, 9); // theta = 0.2, 2*theta*N = 6
    p.z_acc = 3;                                // alpha*N = 0.9375
    p.z_rej = 6;
    p.eps_c = 0.01;
    p.eps_f = 0.01;
    p.nu = 0.3;
    return p;
}

// Statistical harness instance with hand-picked thresholds.
SchemeParams harness_params(std::int64_t n, std::int64_t z_acc, std::int64_t z_rej, int T) {
    SchemeParams p;
    p.d = 1024;
    p.T = T;
    p.code = CodeSpec::synthetic(4, n, 0.1625);
    p.z_acc = z_acc;
    p.z_rej = z_rej;
    p.eps_c = 0.05;
    p.eps_f = 0.05;
    p.nu = 0.3;
    return p;
}

SymbolString toy_message(std::uint64_t seed) {
    auto g = make_engine(seed, 0);
    SymbolString m(9);
    for (auto& v : m) v = static_cast<std::int32_t>(uint64_below(g, 16));
    return m;
}

} // namespace

TEST_CASE("keygen determinism and statistics") {
    const auto params = toy_params();
    const auto k1 = keygen(params, 42);
    const auto k2 = keygen(params, 42);
    CHECK(k1.keys.size() == 15);
    CHECK(k1.keys == k2.keys);
    CHECK(keygen(params, 43).keys != k1.keys);

    // mean Hamming weight of uniform keys: N=100 keys of length 1024,
    // mean should sit within 4 sigma of 512 (sigma of the mean = 16/sqrt(100))
    SchemeParams big = harness_params(100, 30, 40, 1);
    const auto keys = keygen(big, 7);
    double mean = 0.0;
    for (const auto& k : keys.keys) mean += static_cast<double>(k.weight());
    mean /= 100.0;
    CHECK(std::abs(mean - 512.0) <= 4.0 * 16.0 / std::sqrt(100.0));
}

TEST_CASE("signing reveals the right blocks") {
    // d=8, S=4: hidden blocks of size 2
    SchemeParams p;
    p.d = 8;
    p.T = 1;
    p.code = CodeSpec::reed_solomon(4, 3, 2);
    p.z_acc = 1;
    p.z_rej = 2;
    p.eps_c = 0.1;
    p.eps_f = 0.1;
    p.nu = 0.3;
    const auto keys = keygen(p, 5);
    SymbolString msg{1, 2};
    const auto codeword = encode(p.code, msg);
    const auto sig = sign(keys, msg, p);
    REQUIRE(sig.revealed.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(sig.revealed[i].size() == 6);
        // symbol 0 hides {0,1}: revealed must equal key bits at 2..7
        // symbol s hides {2s, 2s+1}
        const auto s = codeword[i];
        std::vector<std::int64_t> expect_positions;
        for (std::int64_t b = 0; b < 8; ++b)
            if (b < 2 * s || b > 2 * s + 1) expect_positions.push_back(b);
        CHECK(sig.revealed[i] == keys.keys[i].gather(expect_positions));
    }
}

TEST_CASE("honest signature matches at every position") {
    const auto params = toy_params();
    const auto keys = keygen(params, 9);
    const auto msg = toy_message(1);
    const auto sig = sign(keys, msg, params);
    const auto codeword = encode(params.code, msg);
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const auto hidden = hidden_index_set(codeword[i], params.d, params.ell());
        // W = 0: acceptance probability is exactly ell/d = 1 - alpha
        CHECK(accept_probability(keys.keys[i], hidden, sig.revealed[i]) ==
              doctest::Approx(60.0 / 64.0).epsilon(1e-15));
    }
}

TEST_CASE("verification verdicts and edge cases") {
    const auto params = toy_params();
    const auto keys = keygen(params, 10);
    const auto msg = toy_message(2);
    const auto sig = sign(keys, msg, params);

    // vacuous acceptance threshold
    auto vacuous = params;
    vacuous.z_acc = 15;
    vacuous.z_rej = 16;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(verify_simulate(keys, msg, sig, vacuous, seed).verdict == Verdict::acc1);

    // flipping ell/2 revealed bits kills every projector
    auto hostile = sig;
    for (auto& r : hostile.revealed)
        for (std::int64_t b = 0; b < 30; ++b) r.flip(b);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto out = verify_simulate(keys, msg, hostile, params, seed);
        CHECK(out.tally == 15);
        CHECK(out.verdict == Verdict::rej);
    }

    // wrong message length is a parameter error, not a guess
    CHECK_THROWS_AS(verify_simulate(keys, SymbolString{1}, sig, params, 0), parameter_error);
    auto short_sig = sig;
    short_sig.revealed.pop_back();
    CHECK_THROWS_AS(verify_simulate(keys, msg, short_sig, params, 0), parameter_error);

    // verdict partition is monotone in the tally
    for (std::int64_t z = 0; z <= 15; ++z) {
        const auto v = verdict_of(z, params);
        if (z <= params.z_acc) CHECK(v == Verdict::acc1);
        else if (z >= params.z_rej) CHECK(v == Verdict::rej);
        else CHECK(v == Verdict::acc0);
    }
}

TEST_CASE("genuine trials follow the binomial law") {
    const auto params = harness_params(1000, 275, 325, 1);
    const auto stats = run_trials(Scenario::genuine, params, 100000, 2025);

    // mean tally near N*alpha = 250
    const double sigma_mean = std::sqrt(1000 * 0.25 * 0.75 / 100000.0);
    CHECK(std::abs(stats.mean_tally() - 250.0) <= 4.0 * sigma_mean);

    // histogram totals
    std::int64_t total = 0;
    for (auto c : stats.tally_histogram) total += c;
    CHECK(total == stats.verifications());
}

TEST_CASE("genuine tally distribution passes a chi-square test") {
    const std::int64_t n = 100;
    const auto params = harness_params(n, 30, 40, 1);
    const std::int64_t trials = 100000;
    const auto stats = run_trials(Scenario::genuine, params, trials, 77);

    // expected counts from Binomial(100, 1/4); pool cells with expectation < 5
    const boost::math::binomial_distribution<double> law(static_cast<double>(n), 0.25);
    double chi2 = 0.0;
    double pooled_expected = 0.0;
    std::int64_t pooled_observed = 0;
    int dof = -1;   // one constraint: totals match
    for (std::int64_t z = 0; z <= n; ++z) {
        const double expected = static_cast<double>(trials) * boost::math::pdf(law, static_cast<double>(z));
        const auto observed = stats.tally_histogram[static_cast<std::size_t>(z)];
        pooled_expected += expected;
        pooled_observed += observed;
        if (pooled_expected >= 5.0) {
            const double diff = static_cast<double>(pooled_observed) - pooled_expected;
            chi2 += diff * diff / pooled_expected;
            ++dof;
            pooled_expected = 0.0;
            pooled_observed = 0;
        }
    }
    if (pooled_expected > 0.0) {
        const double diff = static_cast<double>(pooled_observed) - pooled_expected;
        chi2 += diff * diff / std::max(pooled_expected, 1e-9);
        ++dof;
    }
    const boost::math::chi_squared_distribution<double> chi_law(static_cast<double>(dof));
    const double critical = boost::math::quantile(chi_law, 1.0 - 1e-3);
    CHECK(chi2 < critical);
}

TEST_CASE("zero-rate forgery is indistinguishable from genuine") {
    SchemeParams p = harness_params(400, 110, 130, 2);
    p.code.theta = 0.0;   // nothing to modify
    const auto genuine = run_trials(Scenario::genuine, p, 20000, 99);
    const auto forged = run_trials(Scenario::forgery, p, 20000, 99);
    CHECK(genuine == forged);
}

TEST_CASE("forgery trials shift the tally upward") {
    const auto params = harness_params(1000, 275, 325, 1);
    const auto stats = run_trials(Scenario::forgery, params, 20000, 5);
    // 2*theta*N = 325 positions carry at least j = 1-p1 failure probability;
    // the mean tally must exceed the genuine 250 by a clear margin
    CHECK(stats.mean_tally() > 270.0);
    CHECK(stats.n_rej > 0);
}

TEST_CASE("tuned repudiation centers the tally between the thresholds") {
    const auto params = harness_params(1000, 275, 325, 1);
    const auto stats = run_trials(Scenario::tuned_repudiation, params, 50000, 11);
    const double target = (275.0 + 325.0) / 2.0;
    const double j_star = target / 1000.0;
    const double sigma_mean = std::sqrt(1000.0 * j_star * (1.0 - j_star) / 50000.0);
    CHECK(std::abs(stats.mean_tally() - target) <= 4.0 * sigma_mean);
}

TEST_CASE("acceptance rate on genuine runs meets the correctness budget") {
    // desk-scale budgets for statistical power
    const auto params = derive_parameters(0.25, 1024, 2, 0.3, 0.05, 0.05);
    const auto stats = run_trials(Scenario::genuine, params, 20000, 31);
    const auto dist = stats.empirical();
    CHECK(dist.q_1 >= 1.0 - 0.05 - 3.0 * stats.stderr_of(dist.q_1));
}

TEST_CASE("empirical outcome law reproduces the repudiation identity") {
    const auto params = harness_params(100, 30, 40, 4);
    const auto stats = run_trials(Scenario::tuned_repudiation, params, 40000, 13);
    const auto dist = stats.empirical();
    const auto bounds = repudiation_probability(dist, 4);
    const double observed = stats.repudiation_rate();
    const double sigma = std::sqrt(observed * (1.0 - observed) / static_cast<double>(stats.trials));
    CHECK(std::abs(bounds.exact - observed) <= 5.0 * sigma + 1e-3);
}

TEST_CASE("repudiation frequency stays under the scheme bound") {
    const auto params = derive_parameters(0.25, 1024, 2, 0.3, 0.05, 0.05);
    const auto stats = run_trials(Scenario::tuned_repudiation, params, 10000, 17);
    const double observed = stats.repudiation_rate();
    const double sigma = std::sqrt(std::max(observed * (1.0 - observed), 1e-9) /
                                   static_cast<double>(stats.trials));
    CHECK(observed <= scheme_repudiation_bound(params) + 3.0 * sigma);
}

TEST_CASE("trial count validation") {
    const auto params = harness_params(100, 30, 40, 1);
    CHECK_THROWS_AS(run_trials(Scenario::genuine, params, 0, 1), parameter_error);
}
