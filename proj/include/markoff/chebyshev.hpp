#ifndef MARKOFF_CHEBYSHEV_HPP
#define MARKOFF_CHEBYSHEV_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "markoff/ff.hpp"
#include "markoff/poly.hpp"

namespace markoff::chebyshev {

using ff::FpContext;
using poly::Poly;

// Chebyshev values T_m, U_m and the family A_m = U_m + U_{m-1}, with the
// boundary extension T_{-1} = x, T_{-2} = 2x^2-1, U_{-1} = 0, U_{-2} = -1.
// Values are memoized per evaluator; evaluators are not shared across threads.
class ChebEvaluator {
public:
    explicit ChebEvaluator(const FpContext& ctx) : ctx_(&ctx) {}

    const FpContext& ctx() const { return *ctx_; }

    std::uint64_t T(std::int64_t m, std::uint64_t x);
    std::uint64_t U(std::int64_t m, std::uint64_t x);
    std::uint64_t A(std::int64_t m, std::uint64_t x);  // m >= 0

    // Half-argument forms used throughout the graph-facing formulas.
    std::uint64_t T_half(std::int64_t m, std::uint64_t x) { return T(m, ctx_->half(x)); }
    std::uint64_t U_half(std::int64_t m, std::uint64_t x) { return U(m, ctx_->half(x)); }
    std::uint64_t A_half(std::int64_t m, std::uint64_t x) { return A(m, ctx_->half(x)); }

private:
    std::uint64_t eval_tu(bool second_kind, std::int64_t m, std::uint64_t x);
    const FpContext* ctx_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

// Coefficient vectors built by the recurrences.
Poly A_half_poly(int m, const FpContext& ctx);   // A_m(x/2): integer coefficients, monic
Poly U_half_poly(int m, const FpContext& ctx);   // U_m(x/2)
Poly T_half_poly(int m, const FpContext& ctx);   // T_m(x/2)
Poly A_full_poly(int m, const FpContext& ctx);   // A_m(x)

// Closed-form coefficient a_{m,j} of A_m(x) in the (2x) basis.
std::int64_t a_closed_coeff(int m, int j);

enum class MatrixTag { F, G, Gp, Gpp };

// 2x2 transfer matrices of the (R_i R_j)-walk algebra; F and G' lie in SL_2.
struct TransferMatrix {
    MatrixTag tag;
    std::int64_t index;
    std::uint64_t x;
    std::array<std::array<std::uint64_t, 2>, 2> e;

    std::uint64_t det(const FpContext& ctx) const {
        return ctx.sub(ctx.mul(e[0][0], e[1][1]), ctx.mul(e[0][1], e[1][0]));
    }
};

TransferMatrix transfer(MatrixTag tag, std::int64_t index, std::uint64_t x, ChebEvaluator& ev);
std::pair<std::uint64_t, std::uint64_t> apply(const TransferMatrix& m,
                                              std::pair<std::uint64_t, std::uint64_t> v,
                                              const FpContext& ctx);

struct SuiteReport {
    bool ok = true;
    int checks = 0;
    std::vector<std::string> failures;
};

// Product identities, special values, the discriminant law
// D(A_m) = 2^{m(m-1)} (2m+1)^{m-1}, and closed-form coefficients,
// verified pointwise at random arguments over several primes.
SuiteReport identity_suite(int m_max, int sample_count, std::uint64_t seed = 7);

}  // namespace markoff::chebyshev

#endif
