// The OpenMP kernels must reproduce their serial references bit for bit;
// the per-trial substream rule makes the results schedule-independent.

#include <doctest.h>

#include "qsig/analysis.hpp"
#include "qsig/conjecture.hpp"
#include "qsig/protocol.hpp"
#include "qsig/table_io.hpp"

using namespace qsig;

namespace {

SchemeParams harness_params(int T) {
    SchemeParams p;
    p.d = 1024;
    p.T = T;
    p.code = CodeSpec::synthetic(4, 500, 0.1625);
    p.z_acc = 140;
    p.z_rej = 162;
    p.eps_c = 0.05;
    p.eps_f = 0.05;
    p.nu = 0.3;
    return p;
}

} // namespace

TEST_CASE("trial statistics match the serial reference") {
    for (auto scenario :
         {Scenario::genuine, Scenario::forgery, Scenario::tuned_repudiation}) {
        const auto params = harness_params(3);
        const auto parallel = run_trials(scenario, params, 3000, 12345);
        const auto serial = run_trials_serial(scenario, params, 3000, 12345);
        CHECK(parallel == serial);
    }
}

TEST_CASE("conjecture scan matches the serial reference") {
    const auto parallel = scan_radius_monotonic(1024);
    const auto serial = scan_radius_monotonic_serial(1024);
    CHECK(parallel.holds == serial.holds);
    CHECK(parallel.largest_x == serial.largest_x);
}

TEST_CASE("sweep matches the serial reference byte for byte") {
    SweepConfig cfg;
    cfg.T = 100;
    cfg.alphas = {0.01, 0.04, 0.1};
    cfg.d_min = 50000;
    cfg.d_max = 50000000;
    cfg.points = 60;
    CHECK(sweep_csv(sweep(cfg)) == sweep_csv(sweep_serial(cfg)));

    cfg.axis = SweepAxis::codelength;
    CHECK(sweep_csv(sweep(cfg)) == sweep_csv(sweep_serial(cfg)));
}
