#include "markoff/chebyshev.hpp"

#include <random>
#include <sstream>

namespace markoff::chebyshev {

using ff::internal_error;

namespace {

constexpr std::int64_t kSmallIndex = 2048;

std::uint64_t memo_key(bool second_kind, std::int64_t m, std::uint64_t x) {
    // x below 2^48 in practice for memoized lookups; fold kind and index.
    return (static_cast<std::uint64_t>(m + 2) << 49) ^ (x << 1) ^ (second_kind ? 1 : 0);
}

}  // namespace

std::uint64_t ChebEvaluator::eval_tu(bool second_kind, std::int64_t m, std::uint64_t x) {
    const FpContext& c = *ctx_;
    if (m == -2) return second_kind ? c.neg(1) : c.sub(c.mul(2, c.mul(x, x)), 1);
    if (m == -1) return second_kind ? 0 : x;
    if (m == 0) return 1;
    if (m == 1) return second_kind ? c.mul(2, x) : x;

    if (m <= kSmallIndex && x < (1ull << 48)) {
        std::uint64_t key = memo_key(second_kind, m, x);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::uint64_t prev = 1;
        std::uint64_t cur = second_kind ? c.mul(2, x) : x;
        std::uint64_t two_x = c.mul(2, x);
        for (std::int64_t i = 1; i < m; ++i) {
            std::uint64_t next = c.sub(c.mul(two_x, cur), prev);
            prev = cur;
            cur = next;
            memo_.emplace(memo_key(second_kind, i + 1, x), cur);
        }
        return cur;
    }

    // (U_m, U_{m-1}) = [[2x,-1],[1,0]]^m (1, 0); O(log m).
    std::uint64_t m00 = c.mul(2, x), m01 = c.neg(1), m10 = 1, m11 = 0;
    std::uint64_t r00 = 1, r01 = 0, r10 = 0, r11 = 1;
    std::uint64_t e = static_cast<std::uint64_t>(m);
    while (e) {
        if (e & 1) {
            std::uint64_t t00 = c.add(c.mul(r00, m00), c.mul(r01, m10));
            std::uint64_t t01 = c.add(c.mul(r00, m01), c.mul(r01, m11));
            std::uint64_t t10 = c.add(c.mul(r10, m00), c.mul(r11, m10));
            std::uint64_t t11 = c.add(c.mul(r10, m01), c.mul(r11, m11));
            r00 = t00; r01 = t01; r10 = t10; r11 = t11;
        }
        std::uint64_t t00 = c.add(c.mul(m00, m00), c.mul(m01, m10));
        std::uint64_t t01 = c.add(c.mul(m00, m01), c.mul(m01, m11));
        std::uint64_t t10 = c.add(c.mul(m10, m00), c.mul(m11, m10));
        std::uint64_t t11 = c.add(c.mul(m10, m01), c.mul(m11, m11));
        m00 = t00; m01 = t01; m10 = t10; m11 = t11;
        e >>= 1;
    }
    std::uint64_t um = r00;        // U_m
    std::uint64_t um1 = r10;       // U_{m-1}
    if (second_kind) return um;
    // T_m = (U_m - U_{m-2}) / 2 and U_{m-2} = 2x U_{m-1} - U_m.
    std::uint64_t um2 = c.sub(c.mul(c.mul(2, x), um1), um);
    return c.half(c.sub(um, um2));
}

std::uint64_t ChebEvaluator::T(std::int64_t m, std::uint64_t x) {
    if (m < -2) throw std::invalid_argument("ChebEvaluator::T: index below -2");
    return eval_tu(false, m, x % ctx_->p());
}

std::uint64_t ChebEvaluator::U(std::int64_t m, std::uint64_t x) {
    if (m < -2) throw std::invalid_argument("ChebEvaluator::U: index below -2");
    return eval_tu(true, m, x % ctx_->p());
}

std::uint64_t ChebEvaluator::A(std::int64_t m, std::uint64_t x) {
    if (m < 0) throw std::invalid_argument("ChebEvaluator::A: negative index");
    return ctx_->add(U(m, x), U(m - 1, x));
}

namespace {

Poly three_term_poly(int m, const FpContext& ctx, const Poly& p0, const Poly& p1) {
    if (m == 0) return p0;
    Poly prev = p0, cur = p1, x = Poly::x(ctx);
    for (int i = 1; i < m; ++i) {
        Poly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Poly A_half_poly(int m, const FpContext& ctx) {
    if (m < 0) throw std::invalid_argument("A_half_poly: negative index");
    return three_term_poly(m, ctx, Poly::constant(ctx, 1), Poly(ctx, {1, 1}));
}

Poly U_half_poly(int m, const FpContext& ctx) {
    if (m < 0) throw std::invalid_argument("U_half_poly: negative index");
    return three_term_poly(m, ctx, Poly::constant(ctx, 1), Poly::x(ctx));
}

Poly T_half_poly(int m, const FpContext& ctx) {
    if (m < 0) throw std::invalid_argument("T_half_poly: negative index");
    return three_term_poly(m, ctx, Poly::constant(ctx, 1), Poly(ctx, {0, ctx.half(1)}));
}

Poly A_full_poly(int m, const FpContext& ctx) {
    if (m < 0) throw std::invalid_argument("A_full_poly: negative index");
    if (m == 0) return Poly::constant(ctx, 1);
    Poly prev = Poly::constant(ctx, 1);
    Poly cur(ctx, {1, 2});
    Poly two_x(ctx, {0, 2});
    for (int i = 1; i < m; ++i) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::int64_t a_closed_coeff(int m, int j) {
    auto binom = [](int n, int k) -> std::int64_t {
        if (k < 0 || k > n) return 0;
        std::int64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::int64_t b = binom((2 * m - j) / 2, j / 2);
    return ((j / 2) & 1) ? -b : b;
}

TransferMatrix transfer(MatrixTag tag, std::int64_t index, std::uint64_t x, ChebEvaluator& ev) {
    const FpContext& c = ev.ctx();
    TransferMatrix out{tag, index, x % c.p(), {}};
    auto u = [&](std::int64_t m) { return ev.U_half(m, x); };
    switch (tag) {
        case MatrixTag::F:
            out.e = {{{u(2 * index), c.neg(u(2 * index - 1))},
                      {u(2 * index - 1), c.neg(u(2 * index - 2))}}};
            break;
        case MatrixTag::G:
            out.e = {{{u(2 * index), c.neg(u(2 * index - 1))},
                      {u(2 * index + 1), c.neg(u(2 * index))}}};
            break;
        case MatrixTag::Gp:
            out.e = {{{u(2 * index + 1), c.neg(u(2 * index))},
                      {u(2 * index), c.neg(u(2 * index - 1))}}};
            break;
        case MatrixTag::Gpp: {
            std::uint64_t k = u(2 * index);
            out.e = {{{c.mul(k, out.x), c.neg(c.mul(k, 2))},
                      {c.mul(k, 2), c.neg(c.mul(k, out.x))}}};
            break;
        }
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> apply(const TransferMatrix& m,
                                              std::pair<std::uint64_t, std::uint64_t> v,
                                              const FpContext& ctx) {
    return {ctx.add(ctx.mul(m.e[0][0], v.first), ctx.mul(m.e[0][1], v.second)),
            ctx.add(ctx.mul(m.e[1][0], v.first), ctx.mul(m.e[1][1], v.second))};
}

SuiteReport identity_suite(int m_max, int sample_count, std::uint64_t seed) {
    SuiteReport rep;
    std::mt19937_64 rng(seed);
    auto fail = [&](const std::string& what, std::uint64_t p, std::uint64_t x, int m) {
        rep.ok = false;
        std::ostringstream os;
        os << what << " (p=" << p << ", x=" << x << ", m=" << m << ")";
        rep.failures.push_back(os.str());
    };

    for (std::uint64_t p : {101ull, 10007ull, 1000003ull}) {
        FpContext ctx(p, true);
        ChebEvaluator ev(ctx);
        auto check = [&](bool cond, const char* what, std::uint64_t x, int m) {
            ++rep.checks;
            if (!cond) fail(what, p, x, m);
        };

        for (int s = 0; s < sample_count; ++s) {
            std::uint64_t x = rng() % p;
            for (int m = 1; m <= m_max; ++m) {
                std::uint64_t tm = ev.T(m, x), tm1 = ev.T(m + 1, x);
                std::uint64_t um = ev.U(m, x), um1 = ev.U(m - 1, x);
                std::uint64_t u2m = ev.U(2 * m, x), u2m1 = ev.U(2 * m - 1, x);
                check(ctx.add(u2m, 1) == ctx.mul(2, ctx.mul(tm, um)), "U_2m+1 = 2 T_m U_m", x, m);
                check(ctx.sub(u2m, 1) == ctx.mul(2, ctx.mul(tm1, um1)), "U_2m-1 = 2 T_m+1 U_m-1", x, m);
                check(u2m1 == ctx.mul(2, ctx.mul(tm, um1)), "U_2m-1 = 2 T_m U_m-1", x, m);

                std::uint64_t am = ev.A(m, x), am_neg = ev.A(m, ctx.neg(x));
                std::uint64_t am1 = ev.A(m - 1, x), am1_neg = ev.A(m - 1, ctx.neg(x));
                auto sgn = [&](std::uint64_t v, int parity) { return (parity & 1) ? ctx.neg(v) : v; };
                check(u2m == sgn(ctx.mul(am, am_neg), m), "U_2m = (-1)^m A_m(x) A_m(-x)", x, m);
                check(ctx.add(u2m1, 1) == sgn(ctx.mul(am1_neg, am), m - 1),
                      "U_2m-1 + 1 = (-1)^(m-1) A_m-1(-x) A_m(x)", x, m);
                check(ctx.sub(u2m1, 1) == sgn(ctx.mul(am1, am_neg), m),
                      "U_2m-1 - 1 = (-1)^m A_m-1(x) A_m(-x)", x, m);

                // Recurrence consistency.
                check(ev.T(m + 1, x) == ctx.sub(ctx.mul(ctx.mul(2, x), ev.T(m, x)), ev.T(m - 1, x)),
                      "T recurrence", x, m);
                check(ev.U(m + 1, x) == ctx.sub(ctx.mul(ctx.mul(2, x), ev.U(m, x)), ev.U(m - 1, x)),
                      "U recurrence", x, m);
                check(ev.A(m + 1, x) == ctx.sub(ctx.mul(ctx.mul(2, x), ev.A(m, x)), ev.A(m - 1, x)),
                      "A recurrence", x, m);
            }
        }

        for (int m = 0; m <= m_max; ++m) {
            // Special values.
            std::uint64_t u0 = ev.U(m, 0);
            std::uint64_t expect_u0 = (m % 2 == 1) ? 0 : ((m / 2) % 2 ? ctx.neg(1) : 1);
            check(u0 == expect_u0, "U_m(0)", 0, m);
            check(ev.U(m, 1) == (static_cast<std::uint64_t>(m) + 1) % p, "U_m(1)", 1, m);
            std::uint64_t um_neg1 = ev.U(m, ctx.neg(1));
            std::uint64_t expect = (m % 2) ? ctx.neg((m + 1) % p) : (m + 1) % p;
            check(um_neg1 == expect, "U_m(-1)", p - 1, m);
            check(ev.A(m, 0) == (((m / 2) % 2) ? ctx.neg(1) : 1), "A_m(0)", 0, m);
            check(ev.A(m, 1) == (2 * static_cast<std::uint64_t>(m) + 1) % p, "A_m(1)", 1, m);
            check(ev.A(m, ctx.neg(1)) == ((m % 2) ? ctx.neg(1) : 1), "A_m(-1)", p - 1, m);

            // Closed-form coefficients of A_m in the (2x) basis.
            if (m <= 12) {
                Poly a = A_full_poly(m, ctx);
                bool okc = true;
                for (int j = 0; j <= m; ++j) {
                    std::uint64_t coeff = a.coeff(m - j);
                    std::uint64_t expect_c =
                        ctx.mul(ctx.reduce(a_closed_coeff(m, j)), ctx.pow(2, m - j));
                    if (coeff != expect_c) okc = false;
                }
                check(okc, "A_m closed-form coefficients", 0, m);
            }

            // Discriminant law for m >= 2.
            if (m >= 2) {
                std::uint64_t d = poly::discriminant(A_full_poly(m, ctx));
                std::uint64_t expect_d =
                    ctx.mul(ctx.pow(2, static_cast<std::uint64_t>(m) * (m - 1)),
                            ctx.pow((2 * m + 1) % p, m - 1));
                check(d == expect_d, "disc(A_m)", 0, m);
            }
        }
    }
    return rep;
}

}  // namespace markoff::chebyshev
