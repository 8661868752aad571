#ifndef MARKOFF_FF_HPP
#define MARKOFF_FF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace markoff::ff {

// Internal-consistency failures (bad endpoints, count mismatches, ...).
// The CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// A parameter combination the theory excludes (kappa = 4 mod p, vanishing
// resultants, 2n+1 = 0 mod p, ...).  Callers fall back or mark "***".
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime_u64(std::uint64_t n);

// Jacobi symbol (a/n) for odd n > 0; a may be negative.
int jacobi(std::int64_t a, std::uint64_t n);

// Arithmetic modulo an odd prime 3 < p < 2^62.  Raw helpers operate on
// canonical residues in [0, p); FpElt wraps them with a context check.
class FpContext {
public:
    explicit FpContext(std::uint64_t p, bool trusted = false);

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(std::int64_t a) const {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;   // throws on a = 0
    std::uint64_t half(std::uint64_t a) const { return mul(a, inv2_); }

    int legendre(std::uint64_t a) const;        // {-1, 0, 1}
    // Both square roots (r, p-r) with r <= p-r, or nothing for a non-residue.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> sqrt(std::uint64_t a) const;

private:
    std::uint64_t p_;
    std::uint64_t inv2_;
};

class FpElt {
public:
    FpElt() : v_(0), ctx_(nullptr) {}
    FpElt(std::uint64_t v, const FpContext& ctx) : v_(v % ctx.p()), ctx_(&ctx) {}
    static FpElt from_int(std::int64_t a, const FpContext& ctx) {
        return FpElt(ctx.reduce(a), ctx);
    }

    std::uint64_t value() const { return v_; }
    const FpContext& ctx() const {
        if (!ctx_) throw internal_error("FpElt: empty context");
        return *ctx_;
    }

    FpElt operator+(const FpElt& o) const { return FpElt(ctx().add(v_, same(o).v_), ctx()); }
    FpElt operator-(const FpElt& o) const { return FpElt(ctx().sub(v_, same(o).v_), ctx()); }
    FpElt operator*(const FpElt& o) const { return FpElt(ctx().mul(v_, same(o).v_), ctx()); }
    FpElt operator-() const { return FpElt(ctx().neg(v_), ctx()); }
    FpElt inv() const { return FpElt(ctx().inv(v_), ctx()); }
    FpElt pow(std::uint64_t e) const { return FpElt(ctx().pow(v_, e), ctx()); }

    bool operator==(const FpElt& o) const { return v_ == same(o).v_; }
    bool operator!=(const FpElt& o) const { return !(*this == o); }
    bool is_zero() const { return v_ == 0; }

    int legendre() const { return ctx().legendre(v_); }
    std::optional<std::pair<FpElt, FpElt>> sqrt() const {
        auto r = ctx().sqrt(v_);
        if (!r) return std::nullopt;
        return std::make_pair(FpElt(r->first, ctx()), FpElt(r->second, ctx()));
    }

private:
    const FpElt& same(const FpElt& o) const {
        if (ctx_ != o.ctx_)
            throw internal_error("FpElt: mixed-context arithmetic");
        return o;
    }
    std::uint64_t v_;
    const FpContext* ctx_;
};

}  // namespace markoff::ff

#endif
