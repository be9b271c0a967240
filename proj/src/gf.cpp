#include "qsig/gf.hpp"

#include <algorithm>

#include "qsig/errors.hpp"

namespace qsig {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

using Poly = std::vector<int>;   // coefficients over GF(p), lowest degree first

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// a mod b, b monic-normalizable (leading coefficient inverted mod p).
Poly poly_mod(Poly a, const Poly& b, int p) {
    const int db = poly_degree(b);
    const int lead = b[static_cast<std::size_t>(db)];
    // inverse of lead mod p by exhaustive search (p is small)
    int inv = 1;
    for (int i = 1; i < p; ++i)
        if ((lead * i) % p == 1) { inv = i; break; }
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int factor = (a[static_cast<std::size_t>(da)] * inv) % p;
        for (int j = 0; j <= db; ++j) {
            auto& coef = a[static_cast<std::size_t>(da - db + j)];
            coef = (coef - factor * b[static_cast<std::size_t>(j)]) % p;
            if (coef < 0) coef += p;
        }
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

Poly decode_poly(std::int64_t code, int p, int len) {
    Poly a(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i) {
        a[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
        code /= p;
    }
    return a;
}

// Monic irreducible polynomial of degree m over GF(p), found by trial
// division against every monic polynomial of degree 1..m/2.
Poly find_irreducible(int p, int m) {
    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    for (std::int64_t tail = 0; tail < pm; ++tail) {
        Poly f = decode_poly(tail, p, m + 1);
        f[static_cast<std::size_t>(m)] = 1;
        bool irreducible = true;
        for (int dd = 1; irreducible && 2 * dd <= m; ++dd) {
            std::int64_t pd = 1;
            for (int i = 0; i < dd; ++i) pd *= p;
            for (std::int64_t t2 = 0; t2 < pd; ++t2) {
                Poly g = decode_poly(t2, p, dd + 1);
                g[static_cast<std::size_t>(dd)] = 1;
                if (poly_is_zero(poly_mod(f, g, p))) { irreducible = false; break; }
            }
        }
        if (irreducible) return f;
    }
    throw error("GaloisField: no irreducible polynomial found");   // unreachable
}

std::int64_t encode_poly(const Poly& a, int p, int m) {
    std::int64_t code = 0, scale = 1;
    for (int i = 0; i < m; ++i) {
        code += scale * a[static_cast<std::size_t>(i)];
        scale *= p;
    }
    return code;
}

} // namespace

bool GaloisField::factor_prime_power(std::int64_t s, int& p, int& m) {
    if (s < 2) return false;
    std::int64_t base = s;
    for (std::int64_t f = 2; f * f <= base; ++f) {
        if (base % f == 0) { base = f; break; }
    }
    // base is now the smallest prime factor (or s itself if prime)
    std::int64_t v = s;
    int count = 0;
    while (v % base == 0) { v /= base; ++count; }
    if (v != 1) return false;
    p = static_cast<int>(base);
    m = count;
    return true;
}

GaloisField::GaloisField(std::int64_t order) : q_(order) {
    if (order > kMaxOrder) throw resource_error("GaloisField: order too large");
    if (!factor_prime_power(order, p_, m_))
        throw parameter_error("GaloisField: order must be a prime power");

    const Poly modulus = find_irreducible(p_, m_);
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    log_.assign(static_cast<std::size_t>(q_), -1);

    // Find a generator: an element whose powers enumerate all q-1 nonzero
    // elements. Fill exp/log along the way; retry with the next candidate on
    // a short cycle.
    for (std::int32_t cand = 2; cand < q_; ++cand) {
        std::fill(log_.begin(), log_.end(), -1);
        Poly g = decode_poly(cand, p_, m_);
        Poly cur(static_cast<std::size_t>(m_), 0);
        cur[0] = 1;
        bool full_cycle = true;
        for (std::int64_t k = 0; k < q_ - 1; ++k) {
            const std::int64_t code = encode_poly(cur, p_, m_);
            if (log_[static_cast<std::size_t>(code)] != -1) { full_cycle = false; break; }
            exp_[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(code);
            log_[static_cast<std::size_t>(code)] = static_cast<std::int32_t>(k);
            Poly next = poly_mod(poly_mul(cur, g, p_), modulus, p_);
            next.resize(static_cast<std::size_t>(m_), 0);
            cur = next;
        }
        if (full_cycle) return;
    }
    throw error("GaloisField: no generator found");   // unreachable for true prime powers
}

void GaloisField::check_element(std::int32_t a) const {
    if (a < 0 || a >= q_) throw parameter_error("GaloisField: element out of range");
}

std::int32_t GaloisField::add(std::int32_t a, std::int32_t b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    std::int32_t out = 0, scale = 1;
    for (int i = 0; i < m_; ++i) {
        const int da = (a / scale) % p_, db_ = (b / scale) % p_;
        out += scale * ((da + db_) % p_);
        scale *= p_;
    }
    return out;
}

std::int32_t GaloisField::sub(std::int32_t a, std::int32_t b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    std::int32_t out = 0, scale = 1;
    for (int i = 0; i < m_; ++i) {
        const int da = (a / scale) % p_, db_ = (b / scale) % p_;
        out += scale * ((da - db_ + p_) % p_);
        scale *= p_;
    }
    return out;
}

std::int32_t GaloisField::mul(std::int32_t a, std::int32_t b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    const std::int64_t k = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
    return exp_[static_cast<std::size_t>(k % (q_ - 1))];
}

std::int32_t GaloisField::generator_power(std::int64_t k) const {
    if (k < 0 || k >= q_ - 1) throw parameter_error("GaloisField: exponent out of range");
    return exp_[static_cast<std::size_t>(k)];
}

} // namespace qsig
