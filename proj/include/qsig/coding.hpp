#ifndef QSIG_CODING_HPP
#define QSIG_CODING_HPP

#include <cstdint>
#include <vector>

namespace qsig {

// Nonbinary error-correcting code abstraction. Verification re-encodes the
// received message, so no decoder exists anywhere in the scheme. Two
// backends:
//   reed_solomon  - concrete evaluation-style encoder over GF(S); runnable
//                   end to end when S is a prime power and N <= S-1.
//   synthetic     - distance model only, parameterized by (N, theta); used by
//                   the analysis paths and for alphabets that are not prime
//                   powers.
enum class CodeBackend { reed_solomon, synthetic };

using SymbolString = std::vector<std::int32_t>;

struct CodeSpec {
    CodeBackend backend = CodeBackend::synthetic;
    std::int64_t alphabet_size = 0;   // S
    std::int64_t message_length = 0;  // K
    std::int64_t codeword_length = 0; // N
    double theta = 0.0;               // correctable symbol error rate

    static CodeSpec reed_solomon(std::int64_t S, std::int64_t N, std::int64_t K);
    // K is derived from the asymptotic rate K = round(N*(1-h(theta))).
    static CodeSpec synthetic(std::int64_t S, std::int64_t N, double theta);

    void validate() const;
};

// Deterministic, linear encoding of a K-symbol message into an N-symbol
// codeword (Reed-Solomon backend only).
SymbolString encode(const CodeSpec& spec, const SymbolString& x);

// Distance-model string for the cheapest forgery: differs from c in exactly
// round(2*theta*N) positions, chosen by seeded randomness. Works for both
// backends; it never needs the encoder.
SymbolString minimal_forgery_codeword(const CodeSpec& spec, const SymbolString& c,
                                      std::uint64_t seed);

} // namespace qsig

#endif
