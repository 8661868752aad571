#ifndef MARKOFF_SUBDIVISION_HPP
#define MARKOFF_SUBDIVISION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "markoff/chebyshev.hpp"
#include "markoff/graph.hpp"
#include "markoff/poly.hpp"

namespace markoff::subdivision {

using ff::FpContext;
using graph::SignChange;
using graph::Triple;

// The six branch vertices generated by (alpha, beta) with alpha_bar = beta^2 - alpha:
// X_i places alpha in slot i among betas, Y_i = R_i(X_i) swaps alpha for alpha_bar.
struct Sextuple {
    std::uint64_t alpha, beta, alpha_bar;
    int n;
    SignChange sign;
    std::array<Triple, 3> X;
    std::array<Triple, 3> Y;
};

enum class SolveMethod { Elimination, Direct, ClosedN1, Special };

struct SolutionSet {
    int n = 0;
    std::uint64_t p = 0;
    std::uint64_t kappa = 0;  // reduced residue
    std::vector<std::pair<std::uint64_t, std::uint64_t>> all_pairs;   // (alpha, beta)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> dist_pairs;  // distinctness filters applied
    bool exceptional_origin = false;  // kappa = 0: the all-origin sextuple
    bool exceptional_cayley = false;  // kappa = 4, 2n+1 != 0: the (2,2,2) family
    bool degenerate = false;          // elimination guards failed; direct route used
    std::string degenerate_reason;
    SolveMethod method = SolveMethod::Direct;
};

// T^all / T^dist for given n: shape-basis route when the guards hold,
// direct common-root enumeration otherwise.
SolutionSet solve(int n, std::int64_t kappa, const FpContext& ctx);
// The closed n = 1 solution (alpha = (1 +- sqrt(4k-7))/2, beta = -1).
SolutionSet solve_n1(std::int64_t kappa, const FpContext& ctx);
// The n = (p-1)/2 family: (2 +- sqrt(kappa-4), 2) when kappa-4 is a square.
SolutionSet solve_special(std::int64_t kappa, const FpContext& ctx);

struct CertPath {
    int from = 0, to = 0;  // 0..2 = X_1..X_3, 3..5 = Y_1..Y_3
    std::vector<Triple> vertices;
};

struct SubdivisionCert {
    std::uint64_t p, kappa;
    int n;
    Sextuple sextuple;
    std::vector<CertPath> paths;  // 3 branch edges then 6 walks of length 2n
    bool distinct = false;
    bool proper = false;
    bool verified = false;

    const Triple& branch(int idx) const { return idx < 3 ? sextuple.X[idx] : sextuple.Y[idx - 3]; }
    std::vector<Triple> vertex_set() const;  // deduplicated
    std::string to_json() const;
    void to_dot(std::ostream& os) const;
};

// Walks the nine explicit paths and derives every flag from the walked
// vertex lists.  Throws internal_error if an endpoint disagrees with the
// predicted branch vertex.
SubdivisionCert build_cert(std::pair<std::uint64_t, std::uint64_t> pair, int n,
                           std::int64_t kappa, const FpContext& ctx,
                           SignChange sign = SignChange::identity());

struct CycleCert {
    int length;
    std::vector<Triple> vertices;  // closed, first vertex not repeated at the end
    bool valid;
};

// The three tours of lengths 4n+2, 6n+3, 8n+2.
std::vector<CycleCert> extract_cycles(const SubdivisionCert& cert);

struct Overlap {
    int copy_a, copy_b;
    Triple witness;
};

struct DisjointReport {
    std::vector<SubdivisionCert> copies;  // the sigma-orbit, masks 0..3
    bool pairwise_disjoint = false;
    std::vector<Overlap> overlaps;
    bool guard_b0 = false;      // B_{n,kappa}(0) != 0
    bool guard_lambda = false;  // lambda_{n,kappa} != 0
};

DisjointReport disjoint_copies(const SubdivisionCert& base);

// Walk-return elimination polynomials.
poly::Poly h_poly(int m, std::int64_t kappa, const FpContext& ctx);
poly::Poly g_poly(int n, int m, std::int64_t kappa, const FpContext& ctx);

struct ResultantCheck {
    std::string name;
    std::uint64_t expected, actual;
    bool ok;
};

struct PropernessReport {
    int n;
    std::uint64_t p, kappa;
    std::vector<ResultantCheck> checks;
    bool all_match = true;         // closed forms agree with direct computation
    bool guarantees_proper = true; // every value nonzero mod p
};

// Closed-form walk-return resultants for n in {1,2,3}, evaluated and compared
// against direct resultant computation; nonzero values certify dist = proper.
PropernessReport properness_resultants(int n, std::int64_t kappa, const FpContext& ctx);

}  // namespace markoff::subdivision

#endif
