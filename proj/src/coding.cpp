#include "qsig/coding.hpp"

#include <cmath>

#include "qsig/analysis.hpp"
#include "qsig/errors.hpp"
#include "qsig/gf.hpp"
#include "qsig/rng.hpp"

namespace qsig {

CodeSpec CodeSpec::reed_solomon(std::int64_t S, std::int64_t N, std::int64_t K) {
    int p = 0, m = 0;
    if (!GaloisField::factor_prime_power(S, p, m))
        throw parameter_error("reed_solomon: alphabet size must be a prime power");
    if (K < 1 || K > N) throw parameter_error("reed_solomon: need 1 <= K <= N");
    if (N > S - 1) throw parameter_error("reed_solomon: need N <= S-1");
    CodeSpec spec;
    spec.backend = CodeBackend::reed_solomon;
    spec.alphabet_size = S;
    spec.message_length = K;
    spec.codeword_length = N;
    spec.theta = static_cast<double>(N - K) / (2.0 * static_cast<double>(N));
    return spec;
}

CodeSpec CodeSpec::synthetic(std::int64_t S, std::int64_t N, double theta) {
    if (S < 2) throw parameter_error("synthetic code: alphabet size must be >= 2");
    if (N < 1) throw parameter_error("synthetic code: codeword length must be >= 1");
    if (!(theta > 0.0 && theta < 0.5)) throw parameter_error("synthetic code: theta must be in (0, 1/2)");
    CodeSpec spec;
    spec.backend = CodeBackend::synthetic;
    spec.alphabet_size = S;
    spec.codeword_length = N;
    spec.theta = theta;
    const double rate = 1.0 - binary_entropy(theta);
    spec.message_length = std::max<std::int64_t>(1, std::llround(rate * static_cast<double>(N)));
    return spec;
}

void CodeSpec::validate() const {
    if (alphabet_size < 2) throw parameter_error("CodeSpec: alphabet size must be >= 2");
    if (message_length < 1 || message_length > codeword_length)
        throw parameter_error("CodeSpec: need 1 <= K <= N");
    if (!(theta >= 0.0 && theta < 0.5)) throw parameter_error("CodeSpec: theta out of range");
}

SymbolString encode(const CodeSpec& spec, const SymbolString& x) {
    spec.validate();
    if (spec.backend != CodeBackend::reed_solomon)
        throw parameter_error("encode: synthetic backend has no concrete encoder");
    if (static_cast<std::int64_t>(x.size()) != spec.message_length)
        throw parameter_error("encode: message length mismatch");
    for (auto s : x)
        if (s < 0 || s >= spec.alphabet_size) throw parameter_error("encode: symbol out of alphabet");

    // Evaluation encoding: the message is a polynomial of degree < K,
    // evaluated at N distinct nonzero field points (powers of a generator).
    // Linear, injective, and distinct codewords differ in >= N-K+1 positions.
    const GaloisField gf(spec.alphabet_size);
    SymbolString c(static_cast<std::size_t>(spec.codeword_length));
    for (std::int64_t i = 0; i < spec.codeword_length; ++i) {
        const std::int32_t point = gf.generator_power(i);
        std::int32_t acc = 0;
        for (std::int64_t j = spec.message_length - 1; j >= 0; --j) {
            acc = gf.add(gf.mul(acc, point), x[static_cast<std::size_t>(j)]);
        }
        c[static_cast<std::size_t>(i)] = acc;
    }
    return c;
}

SymbolString minimal_forgery_codeword(const CodeSpec& spec, const SymbolString& c,
                                      std::uint64_t seed) {
    spec.validate();
    if (static_cast<std::int64_t>(c.size()) != spec.codeword_length)
        throw parameter_error("minimal_forgery_codeword: codeword length mismatch");
    const double flips_real = 2.0 * spec.theta * static_cast<double>(spec.codeword_length);
    if (flips_real < 1.0)
        throw parameter_error("minimal_forgery_codeword: code cannot separate messages (2*theta*N < 1)");
    const std::int64_t flips = std::llround(flips_real);

    auto engine = make_engine(seed, 0);
    const auto positions = sample_distinct(engine, spec.codeword_length, flips);
    SymbolString out = c;
    for (auto pos : positions) {
        const auto offset = static_cast<std::int32_t>(
            1 + uint64_below(engine, static_cast<std::uint64_t>(spec.alphabet_size - 1)));
        auto& sym = out[static_cast<std::size_t>(pos)];
        sym = static_cast<std::int32_t>((sym + offset) % spec.alphabet_size);
    }
    return out;
}

} // namespace qsig
