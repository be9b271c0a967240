#include "qsig/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "qsig/analysis.hpp"
#include "qsig/errors.hpp"
#include "qsig/rng.hpp"

namespace qsig {

namespace {

struct SchemeGeometry {
    std::int64_t S, hidden, ell;
    double phi;
};

SchemeGeometry geometry(double alpha, std::int64_t d, int T) {
    if (!(alpha > 0.0 && alpha <= 0.5)) throw parameter_error("alpha must lie in (0, 1/2]");
    const auto S = static_cast<std::int64_t>(std::llround(1.0 / alpha));
    if (S < 2 || std::abs(1.0 / alpha - static_cast<double>(S)) > 1e-9 || d % S != 0)
        throw parameter_error("S must be an integer dividing d");
    if (T < 0) throw parameter_error("T must be nonnegative");
    SchemeGeometry g;
    g.S = S;
    g.hidden = d / S;
    g.ell = d - g.hidden;
    g.phi = static_cast<double>(T) * std::log2(static_cast<double>(d)) / static_cast<double>(d);
    if (g.phi >= alpha)
        throw insecure_parameters_error(
            "phi = T*log2(d)/d must stay below alpha (attacker learns the whole hidden substring)");
    return g;
}

} // namespace

std::int64_t optimal_radius(double alpha, std::int64_t d, int T) {
    const auto g = geometry(alpha, d, T);
    const double hinv = binary_entropy_inverse(1.0 - g.phi / alpha);
    // Guard against float noise pushing an exact integer boundary upward.
    auto r = static_cast<std::int64_t>(std::ceil(static_cast<double>(g.hidden) * hinv - 1e-9));
    r = std::clamp<std::int64_t>(r, 0, g.hidden / 2);
    return r;
}

mpq_class ball_expected_distance(std::int64_t hidden_length, std::int64_t r) {
    if (hidden_length < 1) throw parameter_error("ball_expected_distance: empty hidden substring");
    if (r < 0 || 2 * r > hidden_length)
        throw parameter_error("ball_expected_distance: radius out of [0, hidden/2]");
    if (r == 0) return mpq_class(0);
    mpz_class c = 1, total = 1, weighted = 0;
    for (std::int64_t w = 1; w <= r; ++w) {
        c *= (hidden_length - w + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(w));
        total += c;
        weighted += c * w;
    }
    mpq_class mean(weighted, total);
    mean.canonicalize();
    return mean;
}

ForgeryBound forgery_bound(double alpha, std::int64_t d, int T, bool include_correction) {
    const auto g = geometry(alpha, d, T);
    const double hinv = binary_entropy_inverse(1.0 - g.phi / alpha);
    const double first = 1.0 - alpha / (1.0 - alpha) * 2.0 * hinv;
    double p1 = first * first;
    if (include_correction) {
        p1 += std::sqrt(8.0 / 3.0) * std::sqrt(static_cast<double>(g.hidden)) /
              static_cast<double>(g.ell);
    }
    p1 *= (1.0 - alpha);
    ForgeryBound out;
    out.p1 = p1;
    out.gap = 1.0 - p1 - alpha;
    if (!(out.p1 > 1.0 - 3.0 * alpha))
        throw error("forgery_bound: p1 fell below its 1-3*alpha floor");
    return out;
}

BallForgeryModel BallForgeryModel::make(std::int64_t hidden_length, std::int64_t radius) {
    if (hidden_length < 1) throw parameter_error("BallForgeryModel: empty hidden substring");
    if (radius < 0 || 2 * radius > hidden_length)
        throw parameter_error("BallForgeryModel: radius out of [0, hidden/2]");
    BallForgeryModel model;
    model.hidden_length = hidden_length;
    model.radius = radius;

    // Shell weights C(n,w) normalized to a CDF; exact rationals converted to
    // double once at the end.
    std::vector<mpz_class> shells(static_cast<std::size_t>(radius) + 1);
    shells[0] = 1;
    mpz_class total = 1;
    for (std::int64_t w = 1; w <= radius; ++w) {
        shells[static_cast<std::size_t>(w)] = shells[static_cast<std::size_t>(w - 1)] * (hidden_length - w + 1);
        mpz_divexact_ui(shells[static_cast<std::size_t>(w)].get_mpz_t(),
                        shells[static_cast<std::size_t>(w)].get_mpz_t(),
                        static_cast<unsigned long>(w));
        total += shells[static_cast<std::size_t>(w)];
    }
    model.shell_cdf.resize(static_cast<std::size_t>(radius) + 1);
    mpz_class prefix = 0;
    for (std::int64_t w = 0; w <= radius; ++w) {
        prefix += shells[static_cast<std::size_t>(w)];
        mpq_class frac(prefix, total);
        frac.canonicalize();
        model.shell_cdf[static_cast<std::size_t>(w)] = frac.get_d();
    }
    model.shell_cdf.back() = 1.0;
    return model;
}

std::int64_t BallForgeryModel::sample_distance(std::mt19937_64& g) const {
    const double u = uniform01(g);
    const auto it = std::upper_bound(shell_cdf.begin(), shell_cdf.end(), u);
    return static_cast<std::int64_t>(it - shell_cdf.begin());
}

ForgeAttempt forge_attempt(const BitString& true_hidden, const BallForgeryModel& model,
                           std::uint64_t seed) {
    if (true_hidden.size() != model.hidden_length)
        throw dimension_error("forge_attempt: hidden substring length mismatch");
    auto engine = make_engine(seed, 0);
    const std::int64_t w = model.sample_distance(engine);
    ForgeAttempt attempt{true_hidden, w};
    for (auto pos : sample_distinct(engine, model.hidden_length, w)) attempt.guess.flip(pos);
    return attempt;
}

} // namespace qsig
