#include "qsig/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <boost/math/distributions/binomial.hpp>
#include <omp.h>

#include "qsig/adversary.hpp"
#include "qsig/errors.hpp"
#include "qsig/gc_baseline.hpp"

namespace qsig {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw domain_error("binary_entropy: p must lie in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binary_entropy_inverse(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw domain_error("binary_entropy_inverse: y must lie in [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double chernoff_upper(double mu, double delta) {
    if (!(mu > 0.0)) throw domain_error("chernoff_upper: mu must be positive");
    if (!(delta > 0.0)) throw domain_error("chernoff_upper: delta must be positive");
    return std::exp(-delta * delta * mu / (2.0 + delta));
}

double chernoff_lower(double mu, double delta) {
    if (!(mu > 0.0)) throw domain_error("chernoff_lower: mu must be positive");
    if (!(delta > 0.0)) throw domain_error("chernoff_lower: delta must be positive");
    return std::exp(-0.5 * delta * delta * mu);
}

void OutcomeDistribution::validate() const {
    for (double q : {q_r, q_0, q_1})
        if (!(q >= 0.0 && q <= 1.0)) throw domain_error("OutcomeDistribution: probability out of [0,1]");
    if (std::abs(q_r + q_0 + q_1 - 1.0) > 1e-12)
        throw domain_error("OutcomeDistribution: probabilities must sum to 1");
}

RepudiationBounds repudiation_probability(const OutcomeDistribution& dist, int T) {
    dist.validate();
    if (T < 1) throw domain_error("repudiation_probability: T must be >= 1");
    RepudiationBounds out;
    const double q_min = std::min(dist.q_r, dist.q_1);
    // One verifier cannot both reject and transferably accept.
    if (T == 1) out.exact = 0.0;
    else {
        out.exact = 1.0 - std::pow(1.0 - dist.q_r, T) - std::pow(1.0 - dist.q_1, T) +
                    std::pow(dist.q_0, T);
        out.exact = std::max(0.0, out.exact);
    }
    out.bound_pow = 1.0 - std::pow(1.0 - q_min, T);
    out.bound_lin = static_cast<double>(T) * q_min;
    if (out.exact > out.bound_pow + 1e-12)
        throw error("repudiation_probability: exact value exceeded its power bound");
    if (out.bound_lin <= 1.0 && out.bound_pow > out.bound_lin + 1e-12)
        throw error("repudiation_probability: power bound exceeded its linear bound");
    return out;
}

double repudiation_from_eps(double eps1, double eps2, int T) {
    for (double e : {eps1, eps2})
        if (!(e >= 0.0 && e <= 1.0)) throw domain_error("repudiation_from_eps: eps out of [0,1]");
    if (T < 1) throw domain_error("repudiation_from_eps: T must be >= 1");
    return std::min(1.0, static_cast<double>(T) * std::max(eps1, eps2));
}

double genuine_accept_probability(std::int64_t N, double G, std::int64_t z_acc) {
    if (N < 1) throw domain_error("genuine_accept_probability: N must be >= 1");
    if (!(G >= 0.0 && G <= 1.0)) throw domain_error("genuine_accept_probability: G out of [0,1]");
    if (z_acc < 0 || z_acc > N) throw domain_error("genuine_accept_probability: z_acc out of [0,N]");
    if (G == 0.0) return 1.0;
    if (G == 1.0) return z_acc == N ? 1.0 : 0.0;
    if (z_acc == N) return 1.0;
    const boost::math::binomial_distribution<double> dist(static_cast<double>(N), G);
    // Evaluate the smaller tail and complement, so the absolute error stays
    // near machine precision on both ends.
    const double direct = boost::math::cdf(dist, static_cast<double>(z_acc));
    if (direct <= 0.5) return direct;
    return 1.0 - boost::math::cdf(boost::math::complement(dist, static_cast<double>(z_acc)));
}

void SchemeParams::validate() const {
    code.validate();
    if (d < 2) throw parameter_error("SchemeParams: d must be >= 2");
    if (S() < 2 || d % S() != 0) throw parameter_error("S must be an integer dividing d");
    if (T < 1) throw parameter_error("SchemeParams: T must be >= 1");
    if (z_acc < 0 || z_acc >= z_rej || z_rej > code.codeword_length + 1)
        throw parameter_error("SchemeParams: need 0 <= z_acc < z_rej <= N+1");
    for (double e : {eps_c, eps_f})
        if (!(e > 0.0 && e < 1.0)) throw parameter_error("SchemeParams: error budgets must lie in (0,1)");
}

std::int64_t accept_threshold(std::int64_t N, double alpha, double eps_c) {
    if (N < 1) throw parameter_error("accept_threshold: N must be >= 1");
    const double mean = static_cast<double>(N) * alpha;
    return static_cast<std::int64_t>(
        std::ceil(mean + std::sqrt(mean) * std::sqrt(3.0 * std::log(1.0 / eps_c))));
}

std::int64_t reject_threshold(std::int64_t N, double alpha, double theta, double p1,
                              double eps_f) {
    if (N < 1) throw parameter_error("reject_threshold: N must be >= 1");
    const double mean = (1.0 - 2.0 * theta) * static_cast<double>(N) * alpha +
                        2.0 * theta * static_cast<double>(N) * (1.0 - p1);
    return static_cast<std::int64_t>(
        std::floor(mean - std::sqrt(mean) * std::sqrt(2.0 * std::log(1.0 / eps_f))));
}

SchemeParams derive_parameters(double alpha, std::int64_t d, int T, double nu,
                               double eps_c, double eps_f, bool p1_correction) {
    if (!(alpha > 0.0 && alpha <= 0.5)) throw parameter_error("alpha must lie in (0, 1/2]");
    const auto S = static_cast<std::int64_t>(std::llround(1.0 / alpha));
    if (S < 2 || std::abs(1.0 / alpha - static_cast<double>(S)) > 1e-9 || d % S != 0)
        throw parameter_error("S must be an integer dividing d");
    if (T < 1) throw parameter_error("T must be >= 1");
    if (!(nu > alpha)) throw parameter_error("nu must exceed alpha");
    if (!(nu < 1.0)) throw parameter_error("nu must be below 1");
    for (double e : {eps_c, eps_f})
        if (!(e > 0.0 && e < 1.0)) throw parameter_error("error budgets must lie in (0,1)");

    // forgery_bound enforces phi < alpha.
    const ForgeryBound fb = forgery_bound(alpha, d, T, p1_correction);
    if (!(fb.gap > 0.0)) throw parameter_error("gap = 1 - p1 - alpha must be positive");

    const double theta = 0.5 * alpha * (1.0 + nu);
    const double ln_c = std::log(1.0 / eps_c);
    const double ln_f = std::log(1.0 / eps_f);
    const double numerator = std::sqrt(3.0 * ln_c) + std::sqrt(1.0 + 4.0 * theta) * std::sqrt(2.0 * ln_f);
    const double n_real = std::pow(numerator / (fb.gap / alpha), 2.0) / std::pow(alpha, 3.0);
    if (!(n_real < 9.0e18)) throw parameter_error("codeword length N overflows");
    const auto N = static_cast<std::int64_t>(std::ceil(n_real));

    const double mean_genuine = static_cast<double>(N) * alpha;

    SchemeParams params;
    params.d = d;
    params.T = T;
    params.code = CodeSpec::synthetic(S, N, theta);
    params.z_acc = accept_threshold(N, alpha, eps_c);
    params.z_rej = reject_threshold(N, alpha, theta, fb.p1, eps_f);
    params.eps_c = eps_c;
    params.eps_f = eps_f;
    params.nu = nu;

    if (!(static_cast<double>(params.z_acc) >= mean_genuine))
        throw parameter_error("z_acc fell below alpha*N");
    if (params.z_acc >= params.z_rej)
        throw parameter_error("thresholds z_acc < z_rej do not separate");
    if (!(static_cast<double>(params.z_rej) <= 2.0 * theta * static_cast<double>(N)))
        throw parameter_error("z_rej exceeds 2*theta*N");
    params.validate();
    return params;
}

double forgery_reject_probability(const SchemeParams& params) {
    params.validate();
    const double alpha = params.alpha();
    const double theta = params.code.theta;
    const auto N = static_cast<double>(params.code.codeword_length);
    const ForgeryBound fb = forgery_bound(alpha, params.d, params.T, true);
    const double j_floor = 1.0 - fb.p1;
    const double mean = (1.0 - 2.0 * theta) * N * alpha + 2.0 * theta * N * j_floor;
    if (!(static_cast<double>(params.z_rej) < mean))
        throw degenerate_bound_error(
            "forgery_reject_probability: z_rej is not below the forgery mean tally");
    const double delta = (mean - static_cast<double>(params.z_rej)) / mean;
    return 1.0 - chernoff_lower(mean, delta);
}

double scheme_repudiation_bound(const SchemeParams& params) {
    const double exponent = params.nu * params.nu;
    return std::min(1.0, static_cast<double>(params.T) *
                             std::max(std::pow(params.eps_f, exponent),
                                      std::pow(params.eps_c, exponent)));
}

QubitCost qubits_per_bit(const SchemeParams& params) {
    params.validate();
    const auto K = params.code.message_length;
    if (K == 0) throw domain_error("qubits_per_bit: K must be positive");
    const double log_d = std::log2(static_cast<double>(params.d));
    const double log_s = std::log2(static_cast<double>(params.S()));
    QubitCost cost;
    cost.exact = static_cast<double>(params.code.codeword_length) * log_d /
                 (static_cast<double>(K) * log_s);
    cost.asymptotic = (log_d / log_s) / (1.0 - binary_entropy(params.code.theta));
    // When the information constraint d-ell >= T log2 d holds, the cost obeys
    // the floor (1 + (log2 T + log2 log2 d)/log2 S) * N/K.
    if (static_cast<double>(params.hidden_length()) >= params.T * log_d && params.d > 2) {
        const double floor_val =
            (1.0 + (std::log2(static_cast<double>(params.T)) + std::log2(log_d)) / log_s) *
            static_cast<double>(params.code.codeword_length) / static_cast<double>(K);
        if (cost.exact < floor_val * (1.0 - 1e-9))
            throw error("qubits_per_bit: cost fell below its information floor");
    }
    return cost;
}

FiguresOfMerit figures_of_merit(const SchemeParams& params, bool p1_correction) {
    params.validate();
    const ForgeryBound fb = forgery_bound(params.alpha(), params.d, params.T, p1_correction);
    FiguresOfMerit fom;
    fom.g = params.alpha();
    fom.p1 = fb.p1;
    fom.j = 1.0 - fb.p1;
    fom.gap = fb.gap;
    fom.qubits = qubits_per_bit(params);
    fom.repudiation_bound = scheme_repudiation_bound(params);
    return fom;
}

namespace {

std::vector<std::int64_t> log_sampled_dimensions(std::int64_t d_min, std::int64_t d_max, int points) {
    if (points < 1) throw parameter_error("sweep: points must be >= 1");
    if (d_min < 2 || d_max < d_min) throw parameter_error("sweep: need 2 <= d_min <= d_max");
    std::vector<std::int64_t> out(static_cast<std::size_t>(points));
    const double lo = std::log(static_cast<double>(d_min));
    const double hi = std::log(static_cast<double>(d_max));
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        out[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(std::llround(std::exp(lo + t * (hi - lo))));
    }
    return out;
}

SweepRow evaluate_point(double alpha, std::int64_t d_requested, const SweepConfig& cfg) {
    SweepRow row;
    row.alpha = alpha;
    row.d_requested = d_requested;
    row.theta = 0.5 * alpha * (1.0 + cfg.nu);
    row.p1 = std::numeric_limits<double>::quiet_NaN();
    row.gap = std::numeric_limits<double>::quiet_NaN();
    row.qubits_per_bit = std::numeric_limits<double>::quiet_NaN();
    row.gc_qubits_per_bit = std::numeric_limits<double>::quiet_NaN();

    const auto S = static_cast<std::int64_t>(std::llround(1.0 / alpha));
    if (S < 2 || std::abs(1.0 / alpha - static_cast<double>(S)) > 1e-9) {
        row.d = d_requested;
        row.admissible = "S must be an integer dividing d";
        return row;
    }
    // Snap to the nearest multiple of S so the point is evaluable at all.
    std::int64_t d = std::llround(static_cast<double>(d_requested) / static_cast<double>(S)) * S;
    if (d < S) d = S;
    row.d = d;
    try {
        const SchemeParams params =
            derive_parameters(alpha, d, cfg.T, cfg.nu, cfg.eps_c, cfg.eps_f, cfg.p1_correction);
        const ForgeryBound fb = forgery_bound(alpha, d, cfg.T, cfg.p1_correction);
        row.n_codeword = params.code.codeword_length;
        row.p1 = fb.p1;
        row.gap = fb.gap;
        row.qubits_per_bit = qubits_per_bit(params).exact;
        row.gc_qubits_per_bit = gc_qubits_per_bit(d, row.theta, true);
        row.admissible = "yes";
    } catch (const error& e) {
        row.admissible = e.what();
    }
    return row;
}

std::vector<SweepRow> sweep_impl(const SweepConfig& cfg, bool parallel) {
    if (cfg.alphas.empty()) throw parameter_error("sweep: alpha list is empty");
    if (cfg.T < 1) throw parameter_error("sweep: T must be >= 1");
    const auto dims = log_sampled_dimensions(cfg.d_min, cfg.d_max, cfg.points);

    const std::size_t per_alpha = dims.size();
    std::vector<SweepRow> rows(cfg.alphas.size() * per_alpha);
    const auto total = static_cast<std::int64_t>(rows.size());
    // Row slots are preassigned, so the parallel fill is order-independent.
    #pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const std::size_t a = static_cast<std::size_t>(idx) / per_alpha;
        const std::size_t k = static_cast<std::size_t>(idx) % per_alpha;
        rows[static_cast<std::size_t>(idx)] = evaluate_point(cfg.alphas[a], dims[k], cfg);
    }

    bool any_admissible = false;
    for (const auto& row : rows) any_admissible = any_admissible || row.admissible == "yes";
    if (!any_admissible) throw sweep_error("sweep: no admissible points in the requested range");

    // Order each alpha group by the requested axis; inadmissible rows go to
    // the back of their group in d order.
    for (std::size_t a = 0; a < cfg.alphas.size(); ++a) {
        const auto first = rows.begin() + static_cast<std::ptrdiff_t>(a * per_alpha);
        const auto last = first + static_cast<std::ptrdiff_t>(per_alpha);
        std::stable_sort(first, last, [&cfg](const SweepRow& x, const SweepRow& y) {
            const bool xa = x.admissible == "yes", ya = y.admissible == "yes";
            if (xa != ya) return xa;
            if (!xa) return x.d < y.d;
            if (cfg.axis == SweepAxis::codelength) return x.n_codeword < y.n_codeword;
            return x.gap < y.gap;
        });
    }
    return rows;
}

} // namespace

std::vector<SweepRow> sweep(const SweepConfig& config) { return sweep_impl(config, true); }

std::vector<SweepRow> sweep_serial(const SweepConfig& config) { return sweep_impl(config, false); }

} // namespace qsig
