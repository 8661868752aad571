#ifndef MARKOFF_POLY_HPP
#define MARKOFF_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markoff/ff.hpp"

namespace markoff::poly {

using ff::FpContext;

// Dense univariate polynomial over F_p, coefficients low degree first,
// trailing zeros stripped.  The zero polynomial has degree -1.
class Poly {
public:
    explicit Poly(const FpContext& ctx) : ctx_(&ctx) {}
    Poly(const FpContext& ctx, std::vector<std::uint64_t> coeffs);
    static Poly zero(const FpContext& ctx) { return Poly(ctx); }
    static Poly constant(const FpContext& ctx, std::uint64_t c);
    static Poly x(const FpContext& ctx) { return Poly(ctx, {0, 1}); }
    static Poly from_ints(const FpContext& ctx, const std::vector<std::int64_t>& coeffs);

    const FpContext& ctx() const { return *ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(std::uint64_t k) const;
    Poly shift_up(int k) const;  // multiply by x^k
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    std::uint64_t eval(std::uint64_t x) const;
    Poly derivative() const;
    Poly monic() const;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    Poly operator/(const Poly& d) const { return divrem(d).first; }

    std::string to_string(const std::string& var = "x") const;

private:
    void strip();
    const FpContext* ctx_;
    std::vector<std::uint64_t> c_;
};

Poly gcd(Poly a, Poly b);
// g = gcd(a, b) together with s, t such that s*a + t*b = g.
struct XgcdResult { Poly g, s, t; };
XgcdResult xgcd(const Poly& a, const Poly& b);

// Inverse of a modulo m; empty when gcd(a, m) is non-constant.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);

// x^e mod m by square-and-multiply.
Poly powmod_x(std::uint64_t e, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

// Res(f, g) with the convention det Syl(f, g) = lc(f)^deg(g) * prod g(root of f).
// Fraction-free over a field degenerates to the classical Euclidean scheme.
std::uint64_t resultant(const Poly& f, const Poly& g);
// Direct Sylvester-determinant evaluation; the validation oracle for small degrees.
std::uint64_t sylvester_resultant(const Poly& f, const Poly& g);

// D(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
std::uint64_t discriminant(const Poly& f);

// All roots in F_p with multiplicities, sorted ascending by value.
// Exhaustive scan below 2^16, gcd(x^p - x, f) + equal-degree splitting above.
std::vector<std::pair<std::uint64_t, int>> roots(const Poly& f, std::uint64_t seed = 1);

// The shape basis <B(y), x - C(y)/(kappa-4)^(n-1)> for the ideal
// <A_n(x/2), f_kappa(x, y)>, plus the three companion resultants.
struct EliminationBasis {
    int n;
    std::uint64_t kappa;      // reduced residue
    Poly B;                   // monic, degree 2n
    Poly C;                   // degree < 2n
    std::uint64_t xi;         // Res(A_n(x/2), x^3 - 3x^2 + kappa)
    std::uint64_t eta;        // Res(A_n(x/2), x^4 - 8x^2 + 4 kappa)
    std::uint64_t lambda;     // Res(A_n(x/2), x^3 + 3x^2 - kappa)
    std::uint64_t kappa4_pow; // (kappa-4)^(n-1)

    // beta attached to a root alpha of B.
    std::uint64_t beta_of(std::uint64_t alpha) const;
};

// B_{n,kappa} alone (no invertibility requirements beyond kappa != 4).
Poly elimination_B(int n, std::int64_t kappa, const FpContext& ctx);
std::uint64_t xi_resultant(int n, std::int64_t kappa, const FpContext& ctx);
std::uint64_t eta_resultant(int n, std::int64_t kappa, const FpContext& ctx);
std::uint64_t lambda_resultant(int n, std::int64_t kappa, const FpContext& ctx);

// Throws ff::degenerate_error when kappa = 4 mod p, 2n+1 = 0 mod p, eta = 0,
// or the odd part of A_n(x/2) is not invertible mod B.
EliminationBasis build_elimination_basis(int n, std::int64_t kappa, const FpContext& ctx);

// Closed forms of the n <= 4 bases as integer polynomials in kappa,
// plus the degree-6 quotient B_4/B_1.  Used by the identity check.
Poly closed_form_B(int n, std::int64_t kappa, const FpContext& ctx);
Poly closed_form_C(int n, std::int64_t kappa, const FpContext& ctx);
std::int64_t closed_form_xi_int(int n, std::int64_t kappa);
std::int64_t closed_form_eta_int(int n, std::int64_t kappa);
Poly closed_form_B4_over_B1(std::int64_t kappa, const FpContext& ctx);

struct IdentityMismatch {
    std::string what;
    std::int64_t kappa;
    std::uint64_t p;
};
struct IdentityReport {
    bool ok = true;
    std::vector<IdentityMismatch> mismatches;
    int checks = 0;
};

// Polynomial identity testing of the closed forms (n <= n_max <= 4) at the
// given kappa samples over several primes above 2^16, plus the divisibility
// rule B_s | B_n exactly when n = (2s+1)l + s.
IdentityReport poly_identity_check(int n_max,
                                   const std::vector<std::int64_t>& kappa_samples = {0, 1, 2, 3, 5, 6},
                                   int prime_count = 3);

}  // namespace markoff::poly

#endif
