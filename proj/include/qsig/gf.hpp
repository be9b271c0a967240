#ifndef QSIG_GF_HPP
#define QSIG_GF_HPP

#include <cstdint>
#include <vector>

namespace qsig {

// GF(p^m) arithmetic for prime-power orders up to 2^20. Elements are the
// integers 0..q-1, read as base-p digit vectors (polynomial coefficients over
// GF(p), lowest degree first). Multiplication runs on exp/log tables over a
// generator of the multiplicative group.
class GaloisField {
public:
    explicit GaloisField(std::int64_t order);

    std::int64_t order() const { return q_; }
    int characteristic() const { return p_; }
    int extension_degree() const { return m_; }

    std::int32_t add(std::int32_t a, std::int32_t b) const;
    std::int32_t sub(std::int32_t a, std::int32_t b) const;
    std::int32_t mul(std::int32_t a, std::int32_t b) const;
    // generator^k for 0 <= k < q-1; all values distinct and nonzero.
    std::int32_t generator_power(std::int64_t k) const;

    static bool factor_prime_power(std::int64_t s, int& p, int& m);

private:
    std::int64_t q_ = 0;
    int p_ = 0, m_ = 0;
    std::vector<std::int32_t> exp_;   // size q-1
    std::vector<std::int32_t> log_;   // size q, log_[0] unused

    void check_element(std::int32_t a) const;
};

} // namespace qsig

#endif
