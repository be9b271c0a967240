#ifndef QSIG_FINGERPRINT_HPP
#define QSIG_FINGERPRINT_HPP

#include <cstdint>
#include <vector>

#include "qsig/bitstring.hpp"

namespace qsig {

// Exact amplitude arithmetic for fingerprinting states: the d-dimensional
// state (1/sqrt d) sum_j (-1)^{x_j} |j> that encodes a d-bit string x, the
// verification vectors built from a revealed substring, and a dense-vector
// brute-force oracle usable at small d.

// Set of positions kept hidden when a symbol is signed.
struct IndexSet {
    std::vector<std::int64_t> indices;   // strictly increasing, in [0, ambient)
    std::int64_t ambient = 0;            // d

    void validate() const;
    // The revealed positions [0,d) \ indices, increasing.
    std::vector<std::int64_t> complement() const;
};

// <mu(y)|mu(x)> = 1 - 2*hamming(x,y)/d.
double inner_product(const BitString& x, const BitString& y);

// Block of d-ell consecutive positions encoding a symbol: the hidden
// positions for symbol s are {s*(d-ell), ..., (s+1)*(d-ell)-1}. Distinct
// symbols get disjoint blocks and the blocks cover [0,d), which requires
// (d-ell) to divide d.
IndexSet hidden_index_set(std::int64_t symbol, std::int64_t d, std::int64_t ell);

// Probability that the public-key qudit |mu(key)> passes projection onto the
// verification vector built from `hidden` and the revealed bits `revealed`.
// With W the Hamming distance between `revealed` and the key on the revealed
// positions (increasing order), this equals (ell-2W)^2/(ell*d), computed in
// integer arithmetic and converted to double at the end.
double accept_probability(const BitString& key, const IndexSet& hidden,
                          const BitString& revealed);

// Dense amplitude vector of |mu(x)>; entry j is (-1)^{x_j}/sqrt(d).
// Oracle-scale only (d <= 2^20).
std::vector<double> fingerprint_amplitudes(const BitString& x);

// Verification vector in closed form: supported on the revealed positions,
// entry (1/sqrt ell)*(-1)^{revealed_j} at the j-th revealed position.
std::vector<double> verification_amplitudes(const IndexSet& hidden,
                                            const BitString& revealed);

// Same vector obtained the slow way: normalized sum of |mu(k)> over all 2^{d-ell}
// keys k consistent with the revealed bits. Requires d-ell <= 20.
std::vector<double> verification_amplitudes_enumerated(const IndexSet& hidden,
                                                       const BitString& revealed);

double dot(const std::vector<double>& a, const std::vector<double>& b);

} // namespace qsig

#endif
