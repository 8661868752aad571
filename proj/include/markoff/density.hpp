#ifndef MARKOFF_DENSITY_HPP
#define MARKOFF_DENSITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "markoff/criteria.hpp"

namespace markoff::density {

std::vector<std::uint64_t> sieve(std::uint64_t x);  // all primes <= x

struct DensityReport {
    std::int64_t kappa = 0;
    std::uint64_t x = 0;
    std::uint64_t primes_considered = 0;  // primes p with 3 < p <= X

    // Per-condition tallies (primes whose guards hold and condition is true),
    // with guard-violating primes bucketed separately.
    std::uint64_t count_n1 = 0, count_n2a = 0, count_n2b = 0, count_special = 0;
    std::uint64_t guard_n1 = 0, guard_n2 = 0, guard_special = 0;
    std::uint64_t eligible_n1 = 0, eligible_n2 = 0, eligible_special = 0;

    // Union over {n1, n2B, special} plus its inclusion-exclusion pieces.
    std::uint64_t count_union = 0;
    std::uint64_t count_n1_n2b = 0, count_n2b_special = 0, count_n1_special = 0;
    std::uint64_t count_all_three = 0;
    std::uint64_t count_union_with_a = 0;

    double ratio(std::uint64_t count, std::uint64_t denom) const {
        return denom == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(denom);
    }
    double ratio_n1() const { return ratio(count_n1, eligible_n1); }
    double ratio_n2a() const { return ratio(count_n2a, eligible_n2); }
    double ratio_n2b() const { return ratio(count_n2b, eligible_n2); }
    double ratio_special() const { return ratio(count_special, eligible_special); }
    double ratio_union() const { return ratio(count_union, primes_considered); }

    // |A u B u C| from the seven inclusion-exclusion terms; must equal count_union.
    std::int64_t inclusion_exclusion_union() const {
        return static_cast<std::int64_t>(count_n1) + count_n2b + count_special - count_n1_n2b -
               count_n2b_special - count_n1_special + count_all_three;
    }

    std::string to_csv() const;   // header + one row
    std::string to_json() const;
};

// Evaluates all four verdicts for every prime 3 < p <= x; prime-parallel.
DensityReport density_sweep(std::int64_t kappa, std::uint64_t x, int threads = 1);

struct AdmissibilityReport {
    std::int64_t kappa;
    std::int64_t b1, b2, b3, b4;  // 5, kappa-4, 4kappa-7, eta_{2,kappa}
    bool b_square[4];
    bool ratio_square[4][4];
    bool admissible;        // multiquadratic independence hypotheses hold
    bool delta_one_family;  // eta_1 or kappa-4 a perfect square
    bool eta2_square;       // condition (A) degenerates to (5/p) = 1
    std::string note;
};

AdmissibilityReport kappa_admissibility(std::int64_t kappa);

// kappa values in [-window, window] failing the independence hypotheses.
std::vector<std::int64_t> inadmissible_kappas(std::int64_t window);

}  // namespace markoff::density

#endif
