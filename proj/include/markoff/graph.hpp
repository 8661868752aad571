#ifndef MARKOFF_GRAPH_HPP
#define MARKOFF_GRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "markoff/ff.hpp"

namespace markoff::graph {

using ff::FpContext;

// Double sign changes: identity, (+,-,-), (-,+,-), (-,-,+).
// Composition is xor on the mask, so the four form (Z/2Z)^2.
class SignChange {
public:
    constexpr SignChange() : mask_(0) {}
    constexpr explicit SignChange(int mask) : mask_(mask & 3) {}
    static constexpr SignChange identity() { return SignChange(0); }

    int mask() const { return mask_; }
    bool is_identity() const { return mask_ == 0; }
    SignChange compose(SignChange o) const { return SignChange(mask_ ^ o.mask_); }
    int sign(int coord) const {  // coord in {0,1,2}; returns +1 or -1
        static constexpr int table[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        return table[mask_][coord];
    }
    std::string name() const;
    static const std::array<SignChange, 4>& all();

private:
    int mask_;
};

struct Triple {
    std::uint64_t x, y, z;
    const FpContext* ctx;

    Triple(std::uint64_t x_, std::uint64_t y_, std::uint64_t z_, const FpContext& c)
        : x(x_ % c.p()), y(y_ % c.p()), z(z_ % c.p()), ctx(&c) {}

    bool on_surface(std::uint64_t kappa) const;
    Triple vieta(int axis) const;  // axis in {1,2,3}
    Triple apply(SignChange s) const;

    bool operator==(const Triple& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Triple& o) const { return !(*this == o); }
    bool operator<(const Triple& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
    std::string label() const;  // "x,y,z"
};

std::vector<Triple> path_walk(const Triple& start, const std::vector<int>& word);

struct Component {
    std::uint64_t size;
    std::size_t representative;  // vertex index of the smallest triple
};

struct GraphStats {
    std::uint64_t vertex_count;
    std::uint64_t loop_count;
    std::uint64_t edge_count;  // simple edges, loops excluded
};

// The graph G_kappa(p): vertices enumerated by solving the fiber quadratic
// in z over every (x, y), adjacency implicit through the involutions.
class MarkoffGraph {
public:
    static MarkoffGraph enumerate(std::int64_t kappa, const FpContext& ctx);

    const FpContext& ctx() const { return *ctx_; }
    std::uint64_t kappa() const { return kappa_; }
    std::size_t vertex_count() const { return keys_.size(); }
    Triple vertex(std::size_t i) const;
    std::optional<std::size_t> index_of(const Triple& t) const;
    std::size_t neighbor(std::size_t i, int axis) const;
    bool is_loop(std::size_t i, int axis) const { return neighbor(i, axis) == i; }
    std::optional<std::size_t> origin_index() const;  // kappa = 0 only

    std::uint64_t carlitz_expected() const;
    std::vector<Component> components() const;  // sizes descending
    GraphStats stats() const;

    void export_dot(std::ostream& os, bool color_axes = true) const;
    void export_graphml(std::ostream& os) const;
    std::string summary_json() const;

private:
    MarkoffGraph(const FpContext& ctx, std::uint64_t kappa) : ctx_(&ctx), kappa_(kappa) {}
    std::uint64_t pack(std::uint64_t x, std::uint64_t y, std::uint64_t z) const;

    const FpContext* ctx_;
    std::uint64_t kappa_;
    std::vector<std::uint64_t> keys_;  // packed (x,y,z), sorted
};

}  // namespace markoff::graph

#endif
