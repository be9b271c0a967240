#include "qsig/rng.hpp"

#include "qsig/errors.hpp"

namespace qsig {

std::uint64_t uint64_below(std::mt19937_64& g, std::uint64_t n) {
    if (n == 0) throw domain_error("uint64_below: empty range");
    const std::uint64_t limit = n * (~std::uint64_t{0} / n);
    std::uint64_t v;
    do {
        v = g();
    } while (v >= limit);
    return v % n;
}

std::vector<std::int64_t> sample_distinct(std::mt19937_64& g, std::int64_t n, std::int64_t m) {
    if (m < 0 || m > n) throw parameter_error("sample_distinct: m out of range");
    std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (std::int64_t j = 0; j < m; ++j) {
        const std::int64_t k = j + static_cast<std::int64_t>(
            uint64_below(g, static_cast<std::uint64_t>(n - j)));
        std::swap(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(k)]);
    }
    idx.resize(static_cast<std::size_t>(m));
    return idx;
}

} // namespace qsig
