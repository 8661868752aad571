#include "markoff/ff.hpp"

namespace markoff::ff {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    int sign = 1;
    std::int64_t nn = static_cast<std::int64_t>(n);
    // (a/n) depends only on a mod n, so fold negatives into [0, n).
    a %= nn;
    if (a < 0) a += nn;
    std::uint64_t u = static_cast<std::uint64_t>(a);
    std::uint64_t v = n;
    while (u != 0) {
        while ((u & 1) == 0) {
            u >>= 1;
            std::uint64_t r = v & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(u, v);
        if ((u & 3) == 3 && (v & 3) == 3) sign = -sign;
        u %= v;
    }
    if (v != 1) return 0;
    return sign;
}

FpContext::FpContext(std::uint64_t p, bool trusted) : p_(p) {
    if (p <= 3) throw std::invalid_argument("FpContext: p must exceed 3");
    if (p >= (1ull << 62)) throw std::invalid_argument("FpContext: p must be below 2^62");
    if (!trusted && !is_prime_u64(p)) throw std::invalid_argument("FpContext: p is not prime");
    inv2_ = (p_ + 1) / 2;
}

std::uint64_t FpContext::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod(a % p_, e, p_);
}

std::uint64_t FpContext::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("FpContext: inverse of zero");
    return pow(a, p_ - 2);
}

int FpContext::legendre(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    std::uint64_t e = pow(a, (p_ - 1) / 2);
    return e == 1 ? 1 : -1;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> FpContext::sqrt(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return std::make_pair(0ull, 0ull);
    if (legendre(a) != 1) return std::nullopt;

    std::uint64_t r;
    if ((p_ & 3) == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks.
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        std::uint64_t z = 2;
        while (legendre(z) != -1) ++z;
        std::uint64_t m = static_cast<std::uint64_t>(s);
        std::uint64_t c = pow(z, q);
        std::uint64_t t = pow(a, q);
        r = pow(a, (q + 1) / 2);
        while (t != 1) {
            std::uint64_t t2 = t;
            std::uint64_t i = 0;
            while (t2 != 1) { t2 = mul(t2, t2); ++i; }
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    std::uint64_t other = p_ - r;
    if (r > other) std::swap(r, other);
    return std::make_pair(r, other);
}

}  // namespace markoff::ff
