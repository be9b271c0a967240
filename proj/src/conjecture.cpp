#include "qsig/conjecture.hpp"

#include <cmath>
#include <omp.h>

#include "qsig/analysis.hpp"
#include "qsig/errors.hpp"

namespace qsig {

namespace {

void check_domain(std::int64_t x, std::int64_t r) {
    if (r < 1) throw domain_error("shell_mean: r must be >= 1");
    if (2 * r > x) throw domain_error("shell_mean: r must not exceed x/2");
}

// Prefix sums B = sum C(x,w), A = sum w*C(x,w) for w <= r, advanced one r at
// a time; c holds C(x,r).
struct ShellSums {
    mpz_class c, a, b;
    std::int64_t x, r;

    explicit ShellSums(std::int64_t x_) : c(x_), a(x_), b(x_ + 1), x(x_), r(1) {}

    void advance() {
        // c <- C(x, r+1)
        c *= (x - r);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(r + 1));
        ++r;
        a += c * r;
        b += c;
    }
};

// Rigorous interval comparison of m1*P1*P2 <= m2*P3*P4 on truncated
// mantissas; returns -1 (definitely <=), 1 (definitely >), 0 inconclusive.
class ProductComparer {
public:
    int compare(unsigned long m1, const mpz_class& p1, const mpz_class& p2,
                unsigned long m2, const mpz_class& p3, const mpz_class& p4) {
        const long e1 = take_top(p1, t1_), e2 = take_top(p2, t2_);
        const long e3 = take_top(p3, t3_), e4 = take_top(p4, t4_);
        const long el = e1 + e2, er = e3 + e4;

        // upper(lhs) <= lower(rhs) ?
        hi_ = t1_ + 1;
        hi_ *= t2_ + 1;
        hi_ *= m1;
        lo_ = t3_ * t4_;
        lo_ *= m2;
        align(hi_, el, lo_, er);
        if (hi_ <= lo_) return -1;

        // lower(lhs) > upper(rhs) ?
        lo_ = t1_ * t2_;
        lo_ *= m1;
        hi_ = t3_ + 1;
        hi_ *= t4_ + 1;
        hi_ *= m2;
        align(lo_, el, hi_, er);
        if (lo_ > hi_) return 1;
        return 0;
    }

private:
    static constexpr long kKeepBits = 192;
    mpz_class t1_, t2_, t3_, t4_, hi_, lo_;

    static long take_top(const mpz_class& v, mpz_class& out) {
        const long bits = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
        const long shift = bits > kKeepBits ? bits - kKeepBits : 0;
        mpz_tdiv_q_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        return shift;
    }

    static void align(mpz_class& a, long ea, mpz_class& b, long eb) {
        if (ea >= eb) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(ea - eb));
        else mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(eb - ea));
    }
};

// f(x,r+1) <= f(x,r)  <=>  r * A_{r+1} * B_r <= (r+1) * A_r * B_{r+1}.
MonotonicityReport monotonic_impl(std::int64_t x, bool screened) {
    if (x < 2) throw domain_error("radius_monotonic: x must be >= 2");
    MonotonicityReport rep;
    rep.largest_x = x;
    const std::int64_t r_max = x / 2;
    if (r_max < 2) return rep;   // single admissible r, nothing to compare

    ShellSums s(x);
    ProductComparer cmp;
    mpz_class a_prev, b_prev, lhs, rhs;
    for (std::int64_t r = 1; r + 1 <= r_max; ++r) {
        a_prev = s.a;
        b_prev = s.b;
        s.advance();
        bool le;
        int verdict = 0;
        if (screened)
            verdict = cmp.compare(static_cast<unsigned long>(r), s.a, b_prev,
                                  static_cast<unsigned long>(r + 1), a_prev, s.b);
        if (verdict == 0) {
            lhs = s.a * b_prev;
            lhs *= static_cast<unsigned long>(r);
            rhs = a_prev * s.b;
            rhs *= static_cast<unsigned long>(r + 1);
            le = lhs <= rhs;
        } else {
            le = verdict < 0;
        }
        if (!le) {
            rep.holds = false;
            rep.x = x;
            rep.radius = r;
            rep.f_at_r = mpq_class(a_prev, b_prev * r);
            rep.f_at_r.canonicalize();
            rep.f_at_r_next = mpq_class(s.a, s.b * (r + 1));
            rep.f_at_r_next.canonicalize();
            return rep;
        }
    }
    return rep;
}

MonotonicityReport scan_impl(std::int64_t x_max, bool parallel) {
    if (x_max < 2) throw domain_error("scan_radius_monotonic: x_max must be >= 2");
    MonotonicityReport best;
    best.largest_x = x_max;

    if (!parallel) {
        for (std::int64_t x = 2; x <= x_max; ++x) {
            auto rep = radius_monotonic(x);
            if (!rep.holds) {
                rep.largest_x = x_max;
                return rep;
            }
        }
        return best;
    }

    // Parallel over x; keep the smallest-x counterexample for determinism.
    std::int64_t best_x = x_max + 1;
    MonotonicityReport found;
    #pragma omp parallel
    {
        std::int64_t local_x = x_max + 1;
        MonotonicityReport local;
        #pragma omp for schedule(dynamic, 16)
        for (std::int64_t x = 2; x <= x_max; ++x) {
            auto rep = radius_monotonic(x);
            if (!rep.holds && x < local_x) {
                local_x = x;
                local = rep;
            }
        }
        #pragma omp critical
        if (local_x < best_x) {
            best_x = local_x;
            found = local;
        }
    }
    if (best_x <= x_max) {
        found.largest_x = x_max;
        return found;
    }
    return best;
}

} // namespace

mpq_class shell_mean(std::int64_t x, std::int64_t r) {
    check_domain(x, r);
    ShellSums s(x);
    while (s.r < r) s.advance();
    mpq_class f(s.a, s.b * r);
    f.canonicalize();
    return f;
}

mpq_class shell_mean_half(std::int64_t z) {
    if (z < 1) throw domain_error("shell_mean_half: z must be >= 1");
    mpz_class central;
    mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(2 * z), static_cast<unsigned long>(z));
    mpz_class pow4;
    mpz_ui_pow_ui(pow4.get_mpz_t(), 2, static_cast<unsigned long>(2 * z));
    mpq_class f(pow4, pow4 + central);
    f.canonicalize();
    return f;
}

bool shell_mean_half_bound_holds(std::int64_t z) {
    if (z < 1) throw domain_error("shell_mean_half_bound_holds: z must be >= 1");
    mpz_class central;
    mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(2 * z), static_cast<unsigned long>(z));
    mpz_class lhs = central * central * (3 * z + 1);
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(4 * z));
    return lhs <= rhs;
}

MonotonicityReport radius_monotonic(std::int64_t x) { return monotonic_impl(x, true); }

MonotonicityReport radius_monotonic_exact(std::int64_t x) { return monotonic_impl(x, false); }

MonotonicityReport scan_radius_monotonic(std::int64_t x_max) { return scan_impl(x_max, true); }

MonotonicityReport scan_radius_monotonic_serial(std::int64_t x_max) { return scan_impl(x_max, false); }

TailSandwich binomial_tail_sandwich(std::int64_t n, std::int64_t r) {
    if (r < 1 || 2 * r > n) throw domain_error("binomial_tail_sandwich: need 1 <= r <= n/2");
    TailSandwich out;
    mpz_class term = 1, sum = 1;
    for (std::int64_t k = 1; k <= r; ++k) {
        term *= (n - k + 1);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k));
        sum += term;
    }
    out.exact = sum;

    signed long exp2part = 0;
    const double mant = mpz_get_d_2exp(&exp2part, sum.get_mpz_t());
    out.exact_log2 = std::log2(mant) + static_cast<double>(exp2part);

    const double ratio = static_cast<double>(r) / static_cast<double>(n);
    out.upper_log2 = static_cast<double>(n) * binary_entropy(ratio);
    out.lower_log2 = out.upper_log2 -
        0.5 * std::log2(8.0 * static_cast<double>(r) * (1.0 - ratio));
    out.upper = std::exp2(out.upper_log2);
    out.lower = std::exp2(out.lower_log2);
    out.holds = out.lower_log2 <= out.exact_log2 && out.exact_log2 <= out.upper_log2;
    if (!out.holds) throw error("binomial_tail_sandwich: bound violated");
    return out;
}

} // namespace qsig
