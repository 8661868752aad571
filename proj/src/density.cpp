#include "markoff/density.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace markoff::density {

using criteria::Theorem;
using ff::FpContext;

std::vector<std::uint64_t> sieve(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    return out;
}

namespace {

struct Tally {
    std::uint64_t considered = 0;
    std::uint64_t n1 = 0, n2a = 0, n2b = 0, special = 0;
    std::uint64_t g1 = 0, g2 = 0, gs = 0;
    std::uint64_t e1 = 0, e2 = 0, es = 0;
    std::uint64_t uni = 0, uni_a = 0;
    std::uint64_t i12 = 0, i2s = 0, i1s = 0, i123 = 0;

    void merge(const Tally& o) {
        considered += o.considered;
        n1 += o.n1; n2a += o.n2a; n2b += o.n2b; special += o.special;
        g1 += o.g1; g2 += o.g2; gs += o.gs;
        e1 += o.e1; e2 += o.e2; es += o.es;
        uni += o.uni; uni_a += o.uni_a;
        i12 += o.i12; i2s += o.i2s; i1s += o.i1s; i123 += o.i123;
    }
};

void tally_prime(std::int64_t kappa, std::uint64_t p, Tally& t) {
    FpContext ctx(p, true);
    ++t.considered;
    auto v1 = criteria::verdict(Theorem::N1, kappa, ctx);
    auto va = criteria::verdict(Theorem::N2A, kappa, ctx);
    auto vb = criteria::verdict(Theorem::N2B, kappa, ctx);
    auto vs = criteria::verdict(Theorem::Special, kappa, ctx);
    bool h1 = v1.guard_ok && v1.holds;
    bool ha = va.guard_ok && va.holds;
    bool hb = vb.guard_ok && vb.holds;
    bool hs = vs.guard_ok && vs.holds;
    if (v1.guard_ok) { ++t.e1; if (h1) ++t.n1; } else ++t.g1;
    if (va.guard_ok) { ++t.e2; if (ha) ++t.n2a; } else ++t.g2;
    if (hb) ++t.n2b;
    if (vs.guard_ok) { ++t.es; if (hs) ++t.special; } else ++t.gs;
    if (h1 || hb || hs) ++t.uni;
    if (h1 || ha || hb || hs) ++t.uni_a;
    if (h1 && hb) ++t.i12;
    if (hb && hs) ++t.i2s;
    if (h1 && hs) ++t.i1s;
    if (h1 && hb && hs) ++t.i123;
}

}  // namespace

DensityReport density_sweep(std::int64_t kappa, std::uint64_t x, int threads) {
    DensityReport rep;
    rep.kappa = kappa;
    rep.x = x;
    std::vector<std::uint64_t> primes = sieve(x);
    // Drop 2 and 3.
    std::vector<std::uint64_t> ps;
    ps.reserve(primes.size());
    for (auto p : primes)
        if (p > 3) ps.push_back(p);

    if (threads < 1) threads = 1;
    std::vector<Tally> partial(static_cast<std::size_t>(threads));
    if (threads == 1) {
        for (auto p : ps) tally_prime(kappa, p, partial[0]);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                constexpr std::size_t chunk = 256;
                while (true) {
                    std::size_t start = cursor.fetch_add(chunk);
                    if (start >= ps.size()) break;
                    std::size_t stop = std::min(start + chunk, ps.size());
                    for (std::size_t i = start; i < stop; ++i)
                        tally_prime(kappa, ps[i], partial[static_cast<std::size_t>(w)]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    Tally total;
    for (const auto& t : partial) total.merge(t);

    rep.primes_considered = total.considered;
    rep.count_n1 = total.n1;
    rep.count_n2a = total.n2a;
    rep.count_n2b = total.n2b;
    rep.count_special = total.special;
    rep.guard_n1 = total.g1;
    rep.guard_n2 = total.g2;
    rep.guard_special = total.gs;
    rep.eligible_n1 = total.e1;
    rep.eligible_n2 = total.e2;
    rep.eligible_special = total.es;
    rep.count_union = total.uni;
    rep.count_union_with_a = total.uni_a;
    rep.count_n1_n2b = total.i12;
    rep.count_n2b_special = total.i2s;
    rep.count_n1_special = total.i1s;
    rep.count_all_three = total.i123;
    return rep;
}

std::string DensityReport::to_csv() const {
    std::ostringstream os;
    os << "kappa,X,count_n1,count_n2A,count_n2B,count_special,count_union,ratio_union\n";
    os << kappa << "," << x << "," << count_n1 << "," << count_n2a << "," << count_n2b << ","
       << count_special << "," << count_union << "," << ratio_union() << "\n";
    return os.str();
}

std::string DensityReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "markoff-forge/1";
    j["kappa"] = kappa;
    j["X"] = x;
    j["primes_considered"] = primes_considered;
    j["counts"] = {{"n1", count_n1},
                   {"n2A", count_n2a},
                   {"n2B", count_n2b},
                   {"special", count_special},
                   {"union", count_union},
                   {"union_with_A", count_union_with_a}};
    j["guard_violations"] = {{"n1", guard_n1}, {"n2", guard_n2}, {"special", guard_special}};
    j["ratios"] = {{"n1", ratio_n1()},
                   {"n2A", ratio_n2a()},
                   {"n2B", ratio_n2b()},
                   {"special", ratio_special()},
                   {"union", ratio_union()}};
    j["inclusion_exclusion"] = {{"n1_and_n2B", count_n1_n2b},
                                {"n2B_and_special", count_n2b_special},
                                {"n1_and_special", count_n1_special},
                                {"all_three", count_all_three},
                                {"union_from_formula", inclusion_exclusion_union()}};
    return j.dump(2);
}

namespace {

bool is_perfect_square(std::int64_t v) {
    if (v < 0) return false;
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) return true;
    return false;
}

// a/b is a square in Q iff ab is a (positive) perfect square.
bool ratio_is_square(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return false;
    __int128 prod = static_cast<__int128>(a) * b;
    if (prod < 0) return false;
    std::int64_t v = static_cast<std::int64_t>(prod);
    return is_perfect_square(v);
}

}  // namespace

AdmissibilityReport kappa_admissibility(std::int64_t kappa) {
    if (kappa == 4) throw std::invalid_argument("kappa_admissibility: kappa = 4 excluded");
    AdmissibilityReport rep{};
    rep.kappa = kappa;
    rep.b1 = 5;
    rep.b2 = kappa - 4;
    rep.b3 = 4 * kappa - 7;
    rep.b4 = 16 * kappa * kappa - 68 * kappa + 41;
    std::int64_t bs[4] = {rep.b1, rep.b2, rep.b3, rep.b4};
    rep.admissible = true;
    for (int i = 0; i < 4; ++i) {
        rep.b_square[i] = is_perfect_square(bs[i]);
        if (rep.b_square[i]) rep.admissible = false;
        for (int j = 0; j < 4; ++j) rep.ratio_square[i][j] = false;
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            bool sq = ratio_is_square(bs[i], bs[j]);
            rep.ratio_square[i][j] = rep.ratio_square[j][i] = sq;
            if (sq) rep.admissible = false;
        }
    }
    rep.delta_one_family = rep.b_square[1] || rep.b_square[2];
    rep.eta2_square = rep.b_square[3];
    std::ostringstream note;
    if (rep.admissible)
        note << "independence hypotheses hold";
    else if (rep.delta_one_family)
        note << "a defining value is a perfect square: density one family";
    else if (rep.eta2_square)
        note << "eta_2 is a perfect square: condition (A) reduces to (5/p) = 1";
    else
        note << "a pairwise ratio is a rational square";
    rep.note = note.str();
    return rep;
}

std::vector<std::int64_t> inadmissible_kappas(std::int64_t window) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = -window; k <= window; ++k) {
        if (k == 4) continue;
        if (!kappa_admissibility(k).admissible) out.push_back(k);
    }
    return out;
}

}  // namespace markoff::density
