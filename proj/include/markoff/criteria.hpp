#ifndef MARKOFF_CRITERIA_HPP
#define MARKOFF_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "markoff/ff.hpp"

namespace markoff::criteria {

using ff::FpContext;

// Depressed quartic y^4 + a y^2 + b y + c attached to B_{2,kappa}(y + 3/4),
// with the power-sum sequence of its resolvent roots:
//   S_0 = 3, S_1 = -2a, S_2 = 2a^2 + 8c,
//   S_{n+3} = -2a S_{n+2} + (4c - a^2) S_{n+1} + b^2 S_n.
struct QuarticProfile {
    std::uint64_t a, b, c;
    std::uint64_t s0, s1, s2;
    std::uint64_t s_p_plus_1;
    std::uint64_t s_half;          // S_{(p-1)/2}
    std::optional<std::uint64_t> mu_p;
    bool guard_ok;                 // (a^2+12c) b D != 0
    std::string guard_note;
};

QuarticProfile quartic_profile(std::int64_t kappa, const FpContext& ctx);

struct RootCount {
    int count;      // 0, 1, 2 or 4 (with multiplicity)
    bool guard_ok;  // formula applicable
    QuarticProfile profile;
};

// N_p(B_{2,kappa}) by the four-case power-sum formula, O(log p).
RootCount count_quartic_roots(std::int64_t kappa, const FpContext& ctx);

enum class Theorem { N1, N2A, N2B, Special };

struct Witness {
    std::string name;
    std::int64_t value;  // Legendre symbol or residue used
};

struct ConditionVerdict {
    Theorem tag;
    bool holds = false;
    bool guard_ok = true;  // nonvanishing hypotheses satisfied at this p
    std::string guard_note;
    std::vector<Witness> witnesses;
};

ConditionVerdict verdict(Theorem tag, std::int64_t kappa, const FpContext& ctx);

struct CongruenceClasses {
    std::int64_t modulus;            // 5 |eta_{2,kappa}|
    std::vector<std::int64_t> residues;  // coprime classes whose primes satisfy (B)
};

// Exact congruence description of condition (B); eta_{2,kappa} as an integer.
CongruenceClasses congruence_classes_n2B(std::int64_t kappa);

// Slow-oracle helper: S_n by direct iteration (exposed for cross-checks).
std::uint64_t s_sequence_iterative(const QuarticProfile& q, std::uint64_t n, const FpContext& ctx);

}  // namespace markoff::criteria

#endif
