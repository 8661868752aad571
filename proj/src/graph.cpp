#include "markoff/graph.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace markoff::graph {

using ff::internal_error;

namespace {
constexpr int kPackBits = 21;
constexpr std::uint64_t kMaxGraphPrime = 5000;  // ~2.5e7 vertices
}  // namespace

std::string SignChange::name() const {
    static const char* names[4] = {"+++", "+--", "-+-", "--+"};
    return names[mask_];
}

const std::array<SignChange, 4>& SignChange::all() {
    static const std::array<SignChange, 4> a = {SignChange(0), SignChange(1), SignChange(2),
                                                SignChange(3)};
    return a;
}

bool Triple::on_surface(std::uint64_t kappa) const {
    const FpContext& c = *ctx;
    std::uint64_t lhs = c.add(c.add(c.mul(x, x), c.mul(y, y)), c.mul(z, z));
    std::uint64_t rhs = c.add(c.mul(c.mul(x, y), z), kappa % c.p());
    return lhs == rhs;
}

Triple Triple::vieta(int axis) const {
    const FpContext& c = *ctx;
    switch (axis) {
        case 1: return Triple(c.sub(c.mul(y, z), x), y, z, c);
        case 2: return Triple(x, c.sub(c.mul(z, x), y), z, c);
        case 3: return Triple(x, y, c.sub(c.mul(x, y), z), c);
        default: throw std::invalid_argument("Triple::vieta: axis must be 1, 2 or 3");
    }
}

Triple Triple::apply(SignChange s) const {
    const FpContext& c = *ctx;
    auto flip = [&](std::uint64_t v, int coord) { return s.sign(coord) == 1 ? v : c.neg(v); };
    return Triple(flip(x, 0), flip(y, 1), flip(z, 2), c);
}

std::string Triple::label() const {
    std::ostringstream os;
    os << x << "," << y << "," << z;
    return os.str();
}

std::vector<Triple> path_walk(const Triple& start, const std::vector<int>& word) {
    std::vector<Triple> out;
    out.reserve(word.size() + 1);
    out.push_back(start);
    for (int axis : word) out.push_back(out.back().vieta(axis));
    return out;
}

std::uint64_t MarkoffGraph::pack(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
    return (x << (2 * kPackBits)) | (y << kPackBits) | z;
}

MarkoffGraph MarkoffGraph::enumerate(std::int64_t kappa, const FpContext& ctx) {
    const std::uint64_t p = ctx.p();
    if (p > kMaxGraphPrime)
        throw std::invalid_argument("MarkoffGraph: p exceeds the desk-scale enumeration cap");
    const std::uint64_t km = ctx.reduce(kappa);
    MarkoffGraph g(ctx, km);

    // Smallest square root per residue; sentinel marks non-residues.
    constexpr std::uint32_t kNoRoot = UINT32_MAX;
    std::vector<std::uint32_t> root(p, kNoRoot);
    for (std::uint64_t r = 0; r <= (p - 1) / 2; ++r)
        root[ctx.mul(r, r)] = static_cast<std::uint32_t>(r);

    // z^2 - (xy) z + (x^2 + y^2 - kappa) = 0 per (x, y) slice.
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t x2 = ctx.mul(x, x);
        for (std::uint64_t y = 0; y < p; ++y) {
            std::uint64_t b = ctx.mul(x, y);
            std::uint64_t c0 = ctx.sub(ctx.add(x2, ctx.mul(y, y)), km);
            std::uint64_t disc = ctx.sub(ctx.mul(b, b), ctx.mul(4, c0));
            std::uint32_t r = root[disc];
            if (r == kNoRoot) continue;
            std::uint64_t z1 = ctx.half(ctx.add(b, r));
            g.keys_.push_back(g.pack(x, y, z1));
            if (r != 0) g.keys_.push_back(g.pack(x, y, ctx.half(ctx.sub(b, r))));
        }
    }
    std::sort(g.keys_.begin(), g.keys_.end());

    if (g.keys_.size() != g.carlitz_expected())
        throw internal_error("MarkoffGraph: vertex count disagrees with the point-count formula");
    return g;
}

Triple MarkoffGraph::vertex(std::size_t i) const {
    std::uint64_t k = keys_.at(i);
    constexpr std::uint64_t mask = (1ull << kPackBits) - 1;
    return Triple((k >> (2 * kPackBits)) & mask, (k >> kPackBits) & mask, k & mask, *ctx_);
}

std::optional<std::size_t> MarkoffGraph::index_of(const Triple& t) const {
    std::uint64_t k = pack(t.x, t.y, t.z);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t MarkoffGraph::neighbor(std::size_t i, int axis) const {
    auto j = index_of(vertex(i).vieta(axis));
    if (!j) throw internal_error("MarkoffGraph: involution image missing from vertex set");
    return *j;
}

std::optional<std::size_t> MarkoffGraph::origin_index() const {
    if (kappa_ != 0) return std::nullopt;
    return index_of(Triple(0, 0, 0, *ctx_));
}

std::uint64_t MarkoffGraph::carlitz_expected() const {
    const std::uint64_t p = ctx_->p();
    std::int64_t l_k = ctx_->legendre(kappa_);
    std::int64_t l_k4 = ctx_->legendre(ctx_->sub(kappa_, 4 % p));
    std::int64_t count = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p) +
                         (3 + l_k) * l_k4 * static_cast<std::int64_t>(p) + 1;
    return static_cast<std::uint64_t>(count);
}

std::vector<Component> MarkoffGraph::components() const {
    const std::size_t n = keys_.size();
    std::vector<std::uint32_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (int axis = 1; axis <= 3; ++axis) {
            std::uint32_t a = find(static_cast<std::uint32_t>(i));
            std::uint32_t b = find(static_cast<std::uint32_t>(neighbor(i, axis)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::uint64_t> size(n, 0);
    for (std::size_t i = 0; i < n; ++i) ++size[find(static_cast<std::uint32_t>(i))];
    std::vector<Component> out;
    for (std::size_t i = 0; i < n; ++i)
        if (size[i] > 0) out.push_back({size[i], i});
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.representative < b.representative;
    });
    return out;
}

GraphStats MarkoffGraph::stats() const {
    GraphStats s{keys_.size(), 0, 0};
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        for (int axis = 1; axis <= 3; ++axis) {
            std::size_t j = neighbor(i, axis);
            if (j == i)
                ++s.loop_count;
            else if (j > i)
                ++s.edge_count;
        }
    }
    return s;
}

void MarkoffGraph::export_dot(std::ostream& os, bool color_axes) const {
    static const char* colors[4] = {"", "red", "green", "blue"};
    os << "graph markoff {\n";
    for (std::size_t i = 0; i < keys_.size(); ++i)
        os << "  v" << i << " [label=\"" << vertex(i).label() << "\"];\n";
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        for (int axis = 1; axis <= 3; ++axis) {
            std::size_t j = neighbor(i, axis);
            if (j < i) continue;
            os << "  v" << i << " -- v" << j;
            if (color_axes) os << " [color=" << colors[axis] << "]";
            os << ";\n";
        }
    }
    os << "}\n";
}

void MarkoffGraph::export_graphml(std::ostream& os) const {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
       << "  <key id=\"axis\" for=\"edge\" attr.name=\"axis\" attr.type=\"int\"/>\n"
       << "  <graph id=\"markoff\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < keys_.size(); ++i)
        os << "    <node id=\"v" << i << "\"><data key=\"label\">" << vertex(i).label()
           << "</data></node>\n";
    std::size_t eid = 0;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        for (int axis = 1; axis <= 3; ++axis) {
            std::size_t j = neighbor(i, axis);
            if (j < i) continue;
            os << "    <edge id=\"e" << eid++ << "\" source=\"v" << i << "\" target=\"v" << j
               << "\"><data key=\"axis\">" << axis << "</data></edge>\n";
        }
    }
    os << "  </graph>\n</graphml>\n";
}

std::string MarkoffGraph::summary_json() const {
    nlohmann::json j;
    j["schema"] = "markoff-forge/1";
    j["p"] = ctx_->p();
    j["kappa"] = kappa_;
    j["vertex_count"] = keys_.size();
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& c : components()) sizes.push_back(c.size);
    j["component_sizes"] = sizes;
    return j.dump();
}

}  // namespace markoff::graph
