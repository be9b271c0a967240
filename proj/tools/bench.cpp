// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Also cross-checks that both paths produce identical
// results, which the seeding rule guarantees by construction.

#include <cstdio>
#include <functional>
#include <omp.h>
#include <string>

#include "qsig/analysis.hpp"
#include "qsig/conjecture.hpp"
#include "qsig/protocol.hpp"
#include "qsig/table_io.hpp"

namespace {

double time_it(const std::function<void()>& fn) {
    const double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   results %s\n",
                name.c_str(), serial_s, parallel_s, serial_s / parallel_s,
                equal ? "identical" : "DIFFER");
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    // Monte Carlo verification trials.
    {
        const auto params = qsig::derive_parameters(0.25, 1024, 2, 0.3, 0.01, 0.01);
        const std::int64_t trials = 20000;
        qsig::TrialStats serial_stats, parallel_stats;
        const double ts = time_it([&] {
            serial_stats = qsig::run_trials_serial(qsig::Scenario::genuine, params, trials, 1);
        });
        const double tp = time_it([&] {
            parallel_stats = qsig::run_trials(qsig::Scenario::genuine, params, trials, 1);
        });
        report("run_trials (genuine)", ts, tp, serial_stats == parallel_stats);
    }
    {
        const auto params = qsig::derive_parameters(0.25, 1024, 2, 0.3, 0.01, 0.01);
        const std::int64_t trials = 20000;
        qsig::TrialStats serial_stats, parallel_stats;
        const double ts = time_it([&] {
            serial_stats = qsig::run_trials_serial(qsig::Scenario::forgery, params, trials, 1);
        });
        const double tp = time_it([&] {
            parallel_stats = qsig::run_trials(qsig::Scenario::forgery, params, trials, 1);
        });
        report("run_trials (forgery)", ts, tp, serial_stats == parallel_stats);
    }

    // Exhaustive conjecture scan.
    {
        const std::int64_t x_max = 4096;
        qsig::MonotonicityReport rs, rp;
        const double ts = time_it([&] { rs = qsig::scan_radius_monotonic_serial(x_max); });
        const double tp = time_it([&] { rp = qsig::scan_radius_monotonic(x_max); });
        report("conjecture scan (x<=4096)", ts, tp, rs.holds == rp.holds);
    }

    // Tradeoff sweep.
    {
        qsig::SweepConfig cfg;
        cfg.T = 100;
        cfg.alphas = {0.01, 0.04, 0.1};
        cfg.d_min = 100000;
        cfg.d_max = 100000000;
        cfg.points = 400;
        std::vector<qsig::SweepRow> rs, rp;
        const double ts = time_it([&] { rs = qsig::sweep_serial(cfg); });
        const double tp = time_it([&] { rp = qsig::sweep(cfg); });
        report("parameter sweep (1200 pts)", ts, tp,
               qsig::sweep_csv(rs) == qsig::sweep_csv(rp));
    }
    return 0;
}
