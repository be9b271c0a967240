#ifndef QSIG_RNG_HPP
#define QSIG_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace qsig {

// Reproducible randomness.
//
// All seeded operations derive independent substreams from a single 64-bit
// seed with the rule
//
//     engine(seed, i) = mt19937_64( mix64(seed + (i+1) * 0x9e3779b97f4a7c15) )
//
// where mix64 is the SplitMix64 finalizer (Steele/Lea/Vigna). Trial i of a
// Monte Carlo run uses substream i+1; substream 0 is reserved for run-level
// setup such as choosing which codeword positions a forger modifies. The
// rule is fixed so that results are bit-reproducible regardless of thread
// count and can be re-derived by an independent implementation.

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(substream_seed(seed, index));
}

// Uniform double in [0,1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& g, double p) {
    return uniform01(g) < p;
}

// Unbiased integer in [0,n) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so streams are portable.
std::uint64_t uint64_below(std::mt19937_64& g, std::uint64_t n);

// m distinct values from [0,n), obtained by a partial Fisher-Yates shuffle.
std::vector<std::int64_t> sample_distinct(std::mt19937_64& g, std::int64_t n, std::int64_t m);

} // namespace qsig

#endif
