#include "qsig/fingerprint.hpp"

#include <cmath>

#include "qsig/errors.hpp"

namespace qsig {

namespace {
constexpr std::int64_t kDenseLimit = std::int64_t{1} << 20;
constexpr int kEnumLimit = 20;   // max hidden bits for the 2^(d-ell) sum
} // namespace

void IndexSet::validate() const {
    if (ambient < 1) throw dimension_error("IndexSet: ambient dimension must be positive");
    if (indices.empty()) throw dimension_error("IndexSet: empty");
    std::int64_t prev = -1;
    for (auto i : indices) {
        if (i <= prev || i >= ambient) throw dimension_error("IndexSet: not strictly increasing in [0,d)");
        prev = i;
    }
}

std::vector<std::int64_t> IndexSet::complement() const {
    validate();
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(ambient - static_cast<std::int64_t>(indices.size())));
    std::size_t k = 0;
    for (std::int64_t i = 0; i < ambient; ++i) {
        if (k < indices.size() && indices[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

double inner_product(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw dimension_error("inner_product: length mismatch");
    const std::int64_t d = x.size();
    const std::int64_t w = x.distance(y);
    return static_cast<double>(d - 2 * w) / static_cast<double>(d);
}

IndexSet hidden_index_set(std::int64_t symbol, std::int64_t d, std::int64_t ell) {
    const std::int64_t hidden = d - ell;
    if (d < 2 || hidden < 1 || d % hidden != 0)
        throw parameter_error("hidden_index_set: alphabet size must divide d");
    const std::int64_t s_count = d / hidden;
    if (symbol < 0 || symbol >= s_count)
        throw parameter_error("hidden_index_set: symbol out of range");
    IndexSet set;
    set.ambient = d;
    set.indices.reserve(static_cast<std::size_t>(hidden));
    for (std::int64_t i = symbol * hidden; i < (symbol + 1) * hidden; ++i) set.indices.push_back(i);
    return set;
}

double accept_probability(const BitString& key, const IndexSet& hidden,
                          const BitString& revealed) {
    hidden.validate();
    const std::int64_t d = hidden.ambient;
    const std::int64_t ell = d - static_cast<std::int64_t>(hidden.indices.size());
    if (key.size() != d) throw dimension_error("accept_probability: key length != d");
    if (revealed.size() != ell) throw dimension_error("accept_probability: revealed length != ell");
    const BitString key_revealed = key.gather(hidden.complement());
    const std::int64_t w = key_revealed.distance(revealed);
    const std::int64_t num = (ell - 2 * w) * (ell - 2 * w);
    return static_cast<double>(num) / (static_cast<double>(ell) * static_cast<double>(d));
}

std::vector<double> fingerprint_amplitudes(const BitString& x) {
    const std::int64_t d = x.size();
    if (d > kDenseLimit) throw resource_error("fingerprint_amplitudes: d too large for dense oracle");
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<double> v(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] = x.get(j) ? -a : a;
    return v;
}

std::vector<double> verification_amplitudes(const IndexSet& hidden, const BitString& revealed) {
    hidden.validate();
    const std::int64_t d = hidden.ambient;
    const std::int64_t ell = d - static_cast<std::int64_t>(hidden.indices.size());
    if (revealed.size() != ell) throw dimension_error("verification_amplitudes: revealed length != ell");
    if (d > kDenseLimit) throw resource_error("verification_amplitudes: d too large for dense oracle");
    std::vector<double> v(static_cast<std::size_t>(d), 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(ell));
    const auto rev = hidden.complement();
    for (std::size_t j = 0; j < rev.size(); ++j) {
        v[static_cast<std::size_t>(rev[j])] = revealed.get(static_cast<std::int64_t>(j)) ? -a : a;
    }
    return v;
}

std::vector<double> verification_amplitudes_enumerated(const IndexSet& hidden,
                                                       const BitString& revealed) {
    hidden.validate();
    const std::int64_t d = hidden.ambient;
    const auto n_hidden = static_cast<int>(hidden.indices.size());
    const std::int64_t ell = d - n_hidden;
    if (revealed.size() != ell)
        throw dimension_error("verification_amplitudes_enumerated: revealed length != ell");
    if (n_hidden > kEnumLimit)
        throw resource_error("verification_amplitudes_enumerated: 2^(d-ell) sum too large");

    // Base key: revealed bits placed at their positions, hidden bits zero.
    BitString key(d);
    const auto rev = hidden.complement();
    for (std::size_t j = 0; j < rev.size(); ++j)
        key.set(rev[j], revealed.get(static_cast<std::int64_t>(j)));

    std::vector<double> sum(static_cast<std::size_t>(d), 0.0);
    const std::uint64_t combos = std::uint64_t{1} << n_hidden;
    for (std::uint64_t a = 0; a < combos; ++a) {
        for (int b = 0; b < n_hidden; ++b) key.set(hidden.indices[static_cast<std::size_t>(b)], (a >> b) & 1u);
        const auto mu = fingerprint_amplitudes(key);
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += mu[j];
    }
    double norm2 = 0.0;
    for (double v : sum) norm2 += v * v;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : sum) v *= inv;
    return sum;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace qsig
