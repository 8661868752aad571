#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "markoff/chebyshev.hpp"

using namespace markoff;
using chebyshev::ChebEvaluator;
using chebyshev::MatrixTag;
using ff::FpContext;
using poly::Poly;

TEST_CASE("boundary extension and pinned values") {
    FpContext ctx(13);
    ChebEvaluator ev(ctx);
    std::uint64_t x = 5;
    CHECK(ev.T(-1, x) == x);
    CHECK(ev.T(-2, x) == ctx.sub(ctx.mul(2, ctx.mul(x, x)), 1));
    CHECK(ev.U(-1, x) == 0);
    CHECK(ev.U(-2, x) == ctx.neg(1));
    CHECK(ev.U(3, 1) == 4);
    CHECK(ev.T(2, 3) == 4);  // 2*9-1 mod 13
    CHECK(ev.U(4, 0) == 1);
    CHECK(ev.U(6, 0) == ctx.neg(1));
    CHECK(ev.U(5, 0) == 0);
}

TEST_CASE("matrix-power evaluation agrees with the recurrence") {
    FpContext ctx(1000003);
    ChebEvaluator ev(ctx);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        std::uint64_t x = rng() % ctx.p();
        std::uint64_t prev_t = 1, cur_t = x, prev_u = 1, cur_u = ctx.mul(2, x);
        for (std::int64_t m = 2; m <= 40; ++m) {
            std::uint64_t nt = ctx.sub(ctx.mul(ctx.mul(2, x), cur_t), prev_t);
            std::uint64_t nu = ctx.sub(ctx.mul(ctx.mul(2, x), cur_u), prev_u);
            prev_t = cur_t;
            cur_t = nt;
            prev_u = cur_u;
            cur_u = nu;
        }
        // Force the log-path with a large index and walk back down.
        std::uint64_t big_u = ev.U(5000, x);
        std::uint64_t check_u = 1, next_u = ctx.mul(2, x);
        for (int m = 1; m < 5000; ++m) {
            std::uint64_t nn = ctx.sub(ctx.mul(ctx.mul(2, x), next_u), check_u);
            check_u = next_u;
            next_u = nn;
        }
        CHECK(big_u == next_u);
        CHECK(ev.T(40, x) == cur_t);
        CHECK(ev.U(40, x) == cur_u);
    }
}

TEST_CASE("A polynomials") {
    FpContext ctx(101);
    CHECK(chebyshev::A_half_poly(3, ctx) == Poly::from_ints(ctx, {-1, -2, 1, 1}));
    CHECK(chebyshev::A_half_poly(5, ctx) == Poly::from_ints(ctx, {1, 3, -3, -4, 1, 1}));
    ChebEvaluator ev(ctx);
    for (int m = 0; m <= 12; ++m) {
        Poly a = chebyshev::A_half_poly(m, ctx);
        CHECK(a.degree() == m);
        CHECK(a.lc() == 1);
        for (std::uint64_t x : {0ull, 1ull, 7ull, 100ull})
            CHECK(a.eval(x) == ev.A_half(m, x));
        CHECK(ev.A(m, 1) == (2 * static_cast<std::uint64_t>(m) + 1) % 101);
        CHECK(ev.A(m, 0) == (((m / 2) % 2) ? ctx.neg(1) : 1));
    }
}

TEST_CASE("transfer matrices") {
    FpContext ctx(97);
    ChebEvaluator ev(ctx);
    std::mt19937_64 rng(17);

    // F_1(x) equals the squared word matrix [[x^2-1, -x], [x, -1]].
    std::uint64_t x = 23;
    auto f1 = chebyshev::transfer(MatrixTag::F, 1, x, ev);
    CHECK(f1.e[0][0] == ctx.sub(ctx.mul(x, x), 1));
    CHECK(f1.e[0][1] == ctx.neg(x));
    CHECK(f1.e[1][0] == x);
    CHECK(f1.e[1][1] == ctx.neg(1));

    for (int m = 1; m <= 10; ++m) {
        std::uint64_t y = rng() % 97;
        CHECK(chebyshev::transfer(MatrixTag::F, m, y, ev).det(ctx) == 1);
        CHECK(chebyshev::transfer(MatrixTag::Gp, m, y, ev).det(ctx) == 1);
        // F_m = R(x)^m: check the power relation F_{m+1} = F_m F_1.
        auto fm = chebyshev::transfer(MatrixTag::F, m, y, ev);
        auto f1y = chebyshev::transfer(MatrixTag::F, 1, y, ev);
        auto fm1 = chebyshev::transfer(MatrixTag::F, m + 1, y, ev);
        std::uint64_t acc00 = ctx.add(ctx.mul(fm.e[0][0], f1y.e[0][0]), ctx.mul(fm.e[0][1], f1y.e[1][0]));
        CHECK(fm1.e[0][0] == acc00);
    }

    // G''_n(beta) vanishes whenever A_n(beta/2) = 0.
    for (int n = 1; n <= 6; ++n) {
        Poly a = chebyshev::A_half_poly(n, ctx);
        for (auto [beta, mult] : poly::roots(a)) {
            (void)mult;
            auto gpp = chebyshev::transfer(MatrixTag::Gpp, n, beta, ev);
            CHECK(gpp.e[0][0] == 0);
            CHECK(gpp.e[0][1] == 0);
            CHECK(gpp.e[1][0] == 0);
            CHECK(gpp.e[1][1] == 0);
            // And G'_n(beta) = +-identity.
            auto gp = chebyshev::transfer(MatrixTag::Gp, n, beta, ev);
            bool plus = gp.e[0][0] == 1 && gp.e[1][1] == 1 && gp.e[0][1] == 0 && gp.e[1][0] == 0;
            bool minus = gp.e[0][0] == ctx.neg(1) && gp.e[1][1] == ctx.neg(1) && gp.e[0][1] == 0 &&
                         gp.e[1][0] == 0;
            CHECK((plus || minus));
        }
    }
}

TEST_CASE("identity suite") {
    auto rep = chebyshev::identity_suite(12, 6);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
    CHECK(rep.checks > 500);
}
