#ifndef MARKOFF_TOPO_HPP
#define MARKOFF_TOPO_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "markoff/graph.hpp"
#include "markoff/subdivision.hpp"

namespace markoff::topo {

// Loop-stripped adjacency view used by the census and the searches.
struct SimpleGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<int> loops;             // loops removed from adj, counted here
    // Images of each vertex under the three non-identity double sign changes,
    // when the host graph carries that symmetry (empty otherwise).
    std::vector<std::array<int, 3>> sigma;

    int size() const { return static_cast<int>(adj.size()); }
    static SimpleGraph from_markoff(const graph::MarkoffGraph& g);
};

struct CycleCensus {
    std::uint64_t squares = 0;   // 4-cycles
    std::uint64_t hexagons = 0;  // 6-cycles
    int girth = 0;               // 0 when no cycle of length <= max_len exists
    std::array<std::uint64_t, 9> by_length{};  // index = cycle length (3..8)
};

// Exact simple-cycle counts up to max_len <= 8 by canonical DFS.
CycleCensus cycle_census(const SimpleGraph& g, int max_len);

// V <= 15 (p - 4 - (-1/p)) + 6s + 2h - 14 chi.
std::int64_t euler_bound(std::uint64_t p, std::int64_t chi, std::int64_t s, std::int64_t h);
// The residue-class specializations (p mod 12 in {1,5,7,11}).
std::int64_t euler_bound_variant(std::uint64_t p, std::int64_t chi);
std::uint64_t totient(std::uint64_t n);
// Totient-type lower bound p phi(p+1)/2 on the giant-component size.
std::uint64_t totient_lower_bound(std::uint64_t p);
// Largest integer p with p(p+1)/(1000 ln ln(p+1)) <= 26p - 82 - 14 chi.
std::uint64_t euler_crossover(std::int64_t chi);

enum class ObstructionKind { K33, TwoK33, Custom };
enum class SearchOutcome { Found, ProvenAbsent, BudgetExhausted };

struct PathSystem {
    std::vector<int> branch;               // host vertex ids, pattern order
    std::vector<std::vector<int>> paths;   // host vertex id lists per pattern edge
};

struct ObstructionCert {
    ObstructionKind kind = ObstructionKind::K33;
    std::vector<PathSystem> systems;  // one, or two vertex-disjoint ones
    bool verified = false;
    std::string to_json(const graph::MarkoffGraph* labels = nullptr) const;
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::BudgetExhausted;
    std::optional<ObstructionCert> cert;
    std::uint64_t assignments_tried = 0;
};

// Pattern graphs for the subdivision search; vertex degrees must be <= 3.
struct PatternGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    static PatternGraph k33();
    static PatternGraph parse(std::istream& is);  // "u v" per line
};

// Independent verification: branch vertices distinct and of full degree,
// paths internally disjoint simple paths realizing every pattern edge.
bool verify_system(const SimpleGraph& g, const PatternGraph& pattern, const PathSystem& ps);
bool verify_k33_system(const SimpleGraph& g, const PathSystem& ps);

// Backtracking subdivision search.  In exhaustive mode a negative answer is a
// proven absence; otherwise the budget caps the branch assignments explored.
SearchResult find_pattern(const SimpleGraph& g, const PatternGraph& pattern,
                          double budget_seconds, bool exhaustive,
                          const std::vector<PathSystem>& seeds = {});

SearchResult find_k33(const graph::MarkoffGraph& g, double budget_seconds, bool exhaustive,
                      bool use_subdivision_seeds = true);
SearchResult find_2k33(const graph::MarkoffGraph& g, double budget_seconds);

}  // namespace markoff::topo

#endif
