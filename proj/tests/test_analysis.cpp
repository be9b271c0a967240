#include <cmath>
#include <doctest.h>

#include "oracles.hpp"
#include "qsig/analysis.hpp"
#include "qsig/errors.hpp"
#include "qsig/gc_baseline.hpp"
#include "qsig/rng.hpp"

using namespace qsig;

TEST_CASE("binary entropy and its inverse") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.11) == doctest::Approx(0.4999).epsilon(1e-3));

    CHECK(binary_entropy_inverse(0.0) == 0.0);
    CHECK(binary_entropy_inverse(1.0) == 0.5);
    CHECK(binary_entropy_inverse(0.5) == doctest::Approx(0.11).epsilon(1e-2));

    // round trip at 1e4 points
    for (int i = 0; i <= 10000; ++i) {
        const double y = static_cast<double>(i) / 10000.0;
        CHECK(std::abs(binary_entropy(binary_entropy_inverse(y)) - y) <= 1e-12);
    }
    CHECK_THROWS_AS(binary_entropy(-0.1), domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), domain_error);
    CHECK_THROWS_AS(binary_entropy_inverse(1.5), domain_error);
}

TEST_CASE("chernoff tails") {
    CHECK(chernoff_upper(100.0, 0.1) == doctest::Approx(std::exp(-1.0 / 2.1)).epsilon(1e-12));
    CHECK(chernoff_lower(100.0, 0.1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(chernoff_upper(50.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(chernoff_lower(50.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(chernoff_upper(100.0, 0.0), domain_error);
    CHECK_THROWS_AS(chernoff_lower(100.0, -1.0), domain_error);
    CHECK_THROWS_AS(chernoff_upper(0.0, 0.1), domain_error);
}

TEST_CASE("repudiation probability identity and bounds") {
    OutcomeDistribution even{0.5, 0.0, 0.5};
    const auto two = repudiation_probability(even, 2);
    CHECK(two.exact == doctest::Approx(0.5).epsilon(1e-15));

    // T = 1: a single verifier cannot produce both verdicts
    OutcomeDistribution some{0.3, 0.2, 0.5};
    CHECK(repudiation_probability(some, 1).exact == 0.0);

    // no rejects, no repudiation
    for (int T = 1; T <= 8; ++T) {
        OutcomeDistribution no_rej{0.0, 0.25, 0.75};
        CHECK(repudiation_probability(no_rej, T).exact == doctest::Approx(0.0).epsilon(1e-15));
    }

    CHECK_THROWS_AS(repudiation_probability(even, 0), domain_error);
    OutcomeDistribution bad{0.5, 0.5, 0.5};
    CHECK_THROWS_AS(repudiation_probability(bad, 2), domain_error);
}

TEST_CASE("closed form matches multinomial enumeration up to T=6") {
    auto g = make_engine(2024, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const double u = uniform01(g), v = uniform01(g);
        OutcomeDistribution dist;
        dist.q_r = std::min(u, v);
        dist.q_1 = 1.0 - std::max(u, v);
        dist.q_0 = 1.0 - dist.q_r - dist.q_1;
        for (int T = 1; T <= 6; ++T) {
            const auto bounds = repudiation_probability(dist, T);
            const double oracle = oracles::repudiation_enumeration(dist.q_r, dist.q_0, dist.q_1, T);
            CHECK(std::abs(bounds.exact - oracle) <= 1e-12);
        }
    }
}

TEST_CASE("bound ordering on a random grid") {
    auto g = make_engine(555, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        const double u = uniform01(g), v = uniform01(g);
        OutcomeDistribution dist;
        dist.q_r = std::min(u, v);
        dist.q_1 = 1.0 - std::max(u, v);
        dist.q_0 = 1.0 - dist.q_r - dist.q_1;
        const int T = 1 + static_cast<int>(uint64_below(g, 12));
        const auto bounds = repudiation_probability(dist, T);
        CHECK(bounds.exact <= bounds.bound_pow + 1e-12);
        if (bounds.bound_lin <= 1.0) CHECK(bounds.bound_pow <= bounds.bound_lin + 1e-12);
    }
}

TEST_CASE("repudiation from component errors") {
    CHECK(repudiation_from_eps(0.0, 0.0, 5) == 0.0);
    CHECK(repudiation_from_eps(1e-9, 1e-12, 10) == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(repudiation_from_eps(0.5, 0.1, 10) == 1.0);
}

TEST_CASE("genuine accept probability (binomial tail)") {
    CHECK(genuine_accept_probability(10, 0.3, 10) == 1.0);
    CHECK(genuine_accept_probability(2, 0.5, 1) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(genuine_accept_probability(100, 0.0, 0) == 1.0);

    // exact rational oracle
    auto g = make_engine(99, 0);
    for (auto [num, den] : {std::pair<int, int>{1, 4}, {1, 3}, {7, 100}}) {
        const mpq_class gq(num, den);
        const double gd = gq.get_d();
        for (std::int64_t n : {10, 37, 100}) {
            for (int rep = 0; rep < 8; ++rep) {
                const auto z = static_cast<std::int64_t>(uint64_below(g, static_cast<std::uint64_t>(n + 1)));
                const double exact = oracles::binomial_tail_exact(n, gq, z).get_d();
                CHECK(std::abs(genuine_accept_probability(n, gd, z) - exact) <= 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(genuine_accept_probability(10, 0.5, 11), domain_error);
    CHECK_THROWS_AS(genuine_accept_probability(10, 1.5, 5), domain_error);
}

TEST_CASE("threshold formulas") {
    // N=1e4, alpha=0.01, eps_c=e^-3: 100 + 10*3 = 130
    CHECK(accept_threshold(10000, 0.01, std::exp(-3.0)) == 130);
    // reject threshold sits below the forgery mean by sqrt(E)-scaled margin
    const double p1 = 0.7, theta = 0.06, alpha = 0.1;
    const double mean = (1 - 2 * theta) * 1e6 * alpha + 2 * theta * 1e6 * (1 - p1);
    const auto z = reject_threshold(1000000, alpha, theta, p1, 1e-12);
    CHECK(static_cast<double>(z) < mean);
    CHECK(z == static_cast<std::int64_t>(
                   std::floor(mean - std::sqrt(mean) * std::sqrt(2.0 * std::log(1e12)))));
}

TEST_CASE("derived scheme settings") {
    // theta formula
    const auto p = derive_parameters(0.1, 163840, 10, 0.2, 1e-9, 1e-12);
    CHECK(p.code.theta == doctest::Approx(0.06).epsilon(1e-15));

    // the worked point: alpha=1/4, d=1024, T=10, nu=0.3
    const auto q = derive_parameters(0.25, 1024, 10, 0.3, 1e-9, 1e-12);
    CHECK(q.code.theta == doctest::Approx(0.1625).epsilon(1e-15));
    CHECK(q.code.codeword_length == 89090);
    CHECK(q.z_acc == 23450);
    CHECK(q.z_rej == 24464);
    const auto fom = figures_of_merit(q);
    CHECK(fom.p1 == doctest::Approx(0.6331828017).epsilon(1e-9));
    CHECK(fom.gap == doctest::Approx(0.1168171983).epsilon(1e-9));
    CHECK(fom.g == doctest::Approx(0.25).epsilon(1e-15));

    // engineering constraints hold
    const double alpha = q.alpha();
    CHECK(static_cast<double>(q.z_acc) >= alpha * static_cast<double>(q.code.codeword_length));
    CHECK(q.z_acc < q.z_rej);
    CHECK(static_cast<double>(q.z_rej) <=
          2.0 * q.code.theta * static_cast<double>(q.code.codeword_length));

    CHECK_THROWS_AS(derive_parameters(0.3, 1000, 10, 0.4, 1e-9, 1e-12), parameter_error);
    CHECK_THROWS_AS(derive_parameters(0.25, 1002, 10, 0.4, 1e-9, 1e-12), parameter_error);
    CHECK_THROWS_AS(derive_parameters(0.25, 1024, 10, 0.2, 1e-9, 1e-12), parameter_error);   // nu <= alpha
    CHECK_THROWS_WITH_AS(derive_parameters(0.25, 1024, 30, 0.3, 1e-9, 1e-12),
                         doctest::Contains("phi"), insecure_parameters_error);
}

TEST_CASE("forgery reject probability bound") {
    const auto p = derive_parameters(0.25, 1024, 10, 0.3, 1e-9, 1e-12);
    CHECK(forgery_reject_probability(p) >= 1.0 - 1e-12);

    auto degenerate = p;
    degenerate.z_rej = p.code.codeword_length + 1;
    CHECK_THROWS_AS(forgery_reject_probability(degenerate), degenerate_bound_error);
}

TEST_CASE("scheme repudiation bound") {
    SchemeParams p;
    p.d = 1024;
    p.T = 10;
    p.code = CodeSpec::synthetic(4, 1000, 0.1625);
    p.z_acc = 1;
    p.z_rej = 2;
    p.eps_c = 1e-9;
    p.eps_f = 1e-12;
    p.nu = 1.0;   // exponent nu^2 = 1
    CHECK(scheme_repudiation_bound(p) == doctest::Approx(1e-8).epsilon(1e-9));

    p.nu = 1e-9;   // exponent vanishes, bound caps at 1
    CHECK(scheme_repudiation_bound(p) == 1.0);

    p.nu = 0.5;
    p.eps_c = 1e-6;
    p.eps_f = 1e-6;
    CHECK(scheme_repudiation_bound(p) ==
          doctest::Approx(10.0 * std::pow(1e-6, 0.25)).epsilon(1e-12));
}

TEST_CASE("qubit accounting") {
    SchemeParams p;
    p.d = std::int64_t{1} << 20;
    p.T = 1;
    p.code = CodeSpec::synthetic(1024, 1000, 0.001);
    p.z_acc = 1;
    p.z_rej = 2;
    p.eps_c = 0.01;
    p.eps_f = 0.01;
    p.nu = 0.5;
    const auto cost = qubits_per_bit(p);
    CHECK(cost.asymptotic == doctest::Approx(2.023).epsilon(1e-3));
    CHECK(cost.exact == doctest::Approx(2.022).epsilon(1e-3));

    // GC01 at the same d and beta = theta costs exactly log2(S) times more
    CHECK(gc_qubits_per_bit(p.d, p.code.theta, true) ==
          doctest::Approx(cost.asymptotic * 10.0).epsilon(1e-12));
}

TEST_CASE("sweep rows") {
    SweepConfig cfg;
    cfg.T = 100;
    cfg.alphas = {0.01, 0.1};
    cfg.d_min = 100000;
    cfg.d_max = 10000000;
    cfg.points = 12;
    const auto rows = sweep(cfg);
    CHECK(rows.size() == 24);

    int admissible = 0;
    for (const auto& r : rows) {
        if (r.admissible != "yes") continue;
        ++admissible;
        CHECK(r.gap == 1.0 - r.p1 - r.alpha);         // bitwise identity
        CHECK(r.p1 > 1.0 - 3.0 * r.alpha);
        CHECK(r.d % std::llround(1.0 / r.alpha) == 0);
        CHECK(r.n_codeword > 0);
    }
    CHECK(admissible > 0);

    // codelength axis orders by N
    cfg.axis = SweepAxis::codelength;
    const auto by_n = sweep(cfg);
    std::int64_t prev = -1;
    for (const auto& r : by_n) {
        if (r.alpha != 0.01 || r.admissible != "yes") continue;
        if (prev >= 0) CHECK(r.n_codeword >= prev);
        prev = r.n_codeword;
    }

    SweepConfig bad = cfg;
    bad.alphas = {0.5};
    bad.d_min = 4;
    bad.d_max = 8;
    bad.points = 3;
    CHECK_THROWS_AS(sweep(bad), sweep_error);
}
