#include "markoff/subdivision.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace markoff::subdivision {

using ff::degenerate_error;
using ff::internal_error;
using poly::Poly;

namespace {

std::uint64_t f_kappa_at(const FpContext& c, std::uint64_t kappa, std::uint64_t beta,
                         std::uint64_t alpha) {
    // f_kappa(beta, alpha) = alpha^2 - beta^2 alpha + 2 beta^2 - kappa
    std::uint64_t b2 = c.mul(beta, beta);
    return c.sub(c.add(c.mul(alpha, alpha), c.mul(2, b2)), c.add(c.mul(b2, alpha), kappa));
}

void sort_pairs(std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool dist_filters_pass(const FpContext& c, std::uint64_t kappa, std::uint64_t beta) {
    std::uint64_t b2 = c.mul(beta, beta);
    std::uint64_t lhs1 = c.mul(b2, c.sub(3 % c.p(), beta));            // beta^2 (3 - beta)
    std::uint64_t lhs2 = c.mul(b2, c.sub(8 % c.p(), b2));              // beta^2 (8 - beta^2)
    return lhs1 != kappa && lhs2 != c.mul(4, kappa);
}

void fill_exceptional(SolutionSet& out, const FpContext& c, int n) {
    out.exceptional_origin = (out.kappa == 0);
    out.exceptional_cayley =
        (out.kappa == 4 % c.p()) && ((2 * static_cast<std::uint64_t>(n) + 1) % c.p() != 0);
}

SolutionSet solve_direct(int n, std::int64_t kappa, const FpContext& ctx, SolutionSet base) {
    const std::uint64_t km = ctx.reduce(kappa);
    Poly a = chebyshev::A_half_poly(n, ctx);
    for (auto [beta, mult] : poly::roots(a)) {
        (void)mult;
        if (beta == 0) continue;
        // f_kappa(beta, y) = y^2 - beta^2 y + (2 beta^2 - kappa), quadratic in alpha.
        std::uint64_t b2 = ctx.mul(beta, beta);
        std::uint64_t disc = ctx.sub(ctx.mul(b2, b2), ctx.mul(4, ctx.sub(ctx.mul(2, b2), km)));
        int ls = ctx.legendre(disc);
        if (ls == -1) continue;
        if (ls == 0) {
            base.all_pairs.emplace_back(ctx.half(b2), beta);
        } else {
            auto r = ctx.sqrt(disc);
            base.all_pairs.emplace_back(ctx.half(ctx.add(b2, r->first)), beta);
            base.all_pairs.emplace_back(ctx.half(ctx.sub(b2, r->first)), beta);
        }
    }
    sort_pairs(base.all_pairs);
    for (const auto& pr : base.all_pairs)
        if (dist_filters_pass(ctx, km, pr.second)) base.dist_pairs.push_back(pr);
    base.method = SolveMethod::Direct;
    return base;
}

}  // namespace

SolutionSet solve(int n, std::int64_t kappa, const FpContext& ctx) {
    if (n < 1) throw std::invalid_argument("solve: n must be positive");
    SolutionSet out;
    out.n = n;
    out.p = ctx.p();
    out.kappa = ctx.reduce(kappa);
    fill_exceptional(out, ctx, n);

    try {
        poly::EliminationBasis eb = poly::build_elimination_basis(n, kappa, ctx);
        if (eb.xi == 0) throw degenerate_error("solve: xi_{n,kappa} = 0 in F_p");
        for (auto [alpha, mult] : poly::roots(eb.B)) {
            if (mult != 1) throw internal_error("solve: B has a repeated root despite eta != 0");
            std::uint64_t beta = eb.beta_of(alpha);
            if (beta == 0 || chebyshev::A_half_poly(n, ctx).eval(beta) != 0 ||
                f_kappa_at(ctx, out.kappa, beta, alpha) != 0)
                throw internal_error("solve: shape-basis pair fails the defining system");
            out.all_pairs.emplace_back(alpha, beta);
        }
        sort_pairs(out.all_pairs);
        for (const auto& pr : out.all_pairs) {
            if (!dist_filters_pass(ctx, out.kappa, pr.second))
                throw internal_error("solve: distinctness filter fired although xi,eta != 0");
            out.dist_pairs.push_back(pr);
        }
        out.method = SolveMethod::Elimination;
        return out;
    } catch (const degenerate_error& e) {
        out.degenerate = true;
        out.degenerate_reason = e.what();
        return solve_direct(n, kappa, ctx, std::move(out));
    }
}

SolutionSet solve_n1(std::int64_t kappa, const FpContext& ctx) {
    SolutionSet out;
    out.n = 1;
    out.p = ctx.p();
    out.kappa = ctx.reduce(kappa);
    fill_exceptional(out, ctx, 1);
    std::uint64_t xi1 = ctx.sub(out.kappa, 4 % ctx.p());
    std::uint64_t eta1 = ctx.sub(ctx.mul(4, out.kappa), 7 % ctx.p());
    if (xi1 == 0 || eta1 == 0) {
        out.degenerate = true;
        out.degenerate_reason = xi1 == 0 ? "kappa - 4 = 0 in F_p" : "4 kappa - 7 = 0 in F_p";
        out.method = SolveMethod::ClosedN1;
        return out;
    }
    out.method = SolveMethod::ClosedN1;
    if (ctx.legendre(eta1) != 1) return out;
    auto r = ctx.sqrt(eta1);
    std::uint64_t beta = ctx.neg(1);
    std::uint64_t alpha = ctx.half(ctx.add(1, r->first));
    std::uint64_t alpha_bar = ctx.sub(1, alpha);
    out.all_pairs.emplace_back(alpha, beta);
    out.all_pairs.emplace_back(alpha_bar, beta);
    sort_pairs(out.all_pairs);
    out.dist_pairs = out.all_pairs;
    return out;
}

SolutionSet solve_special(std::int64_t kappa, const FpContext& ctx) {
    SolutionSet out;
    out.n = static_cast<int>((ctx.p() - 1) / 2);
    out.p = ctx.p();
    out.kappa = ctx.reduce(kappa);
    fill_exceptional(out, ctx, out.n);
    out.method = SolveMethod::Special;
    std::uint64_t k4 = ctx.sub(out.kappa, 4 % ctx.p());
    if (k4 == 0) {
        out.degenerate = true;
        out.degenerate_reason = "kappa - 4 = 0 in F_p";
        return out;
    }
    if (ctx.legendre(k4) != 1) return out;
    auto r = ctx.sqrt(k4);
    out.all_pairs.emplace_back(ctx.add(2, r->first), 2);
    out.all_pairs.emplace_back(ctx.sub(2, r->first), 2);
    sort_pairs(out.all_pairs);
    out.dist_pairs = out.all_pairs;
    return out;
}

namespace {

Sextuple make_sextuple(std::uint64_t alpha, std::uint64_t beta, int n, const FpContext& ctx,
                       SignChange sign) {
    std::uint64_t alpha_bar = ctx.sub(ctx.mul(beta, beta), alpha);
    Triple x1 = Triple(alpha, beta, beta, ctx).apply(sign);
    Triple x2 = Triple(beta, alpha, beta, ctx).apply(sign);
    Triple x3 = Triple(beta, beta, alpha, ctx).apply(sign);
    Triple y1 = Triple(alpha_bar, beta, beta, ctx).apply(sign);
    Triple y2 = Triple(beta, alpha_bar, beta, ctx).apply(sign);
    Triple y3 = Triple(beta, beta, alpha_bar, ctx).apply(sign);
    return Sextuple{alpha, beta, alpha_bar, n, sign, {x1, x2, x3}, {y1, y2, y3}};
}

const char* branch_name(int idx) {
    static const char* names[6] = {"X1", "X2", "X3", "Y1", "Y2", "Y3"};
    return names[idx];
}

}  // namespace

std::vector<Triple> SubdivisionCert::vertex_set() const {
    std::vector<Triple> all;
    for (const auto& path : paths)
        for (const auto& v : path.vertices) all.push_back(v);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

SubdivisionCert build_cert(std::pair<std::uint64_t, std::uint64_t> pair, int n,
                           std::int64_t kappa, const FpContext& ctx, SignChange sign) {
    const std::uint64_t km = ctx.reduce(kappa);
    auto [alpha, beta] = pair;
    alpha %= ctx.p();
    beta %= ctx.p();
    if (beta == 0) throw std::invalid_argument("build_cert: beta must be nonzero");
    chebyshev::ChebEvaluator ev(ctx);
    if (ev.A_half(n, beta) != 0)
        throw std::invalid_argument("build_cert: A_n(beta/2) != 0");
    if (f_kappa_at(ctx, km, beta, alpha) != 0)
        throw std::invalid_argument("build_cert: f_kappa(beta, alpha) != 0");

    Sextuple s = make_sextuple(alpha, beta, n, ctx, sign);
    if (alpha == beta && s.alpha_bar == beta)
        throw std::invalid_argument("build_cert: constant sextuple is excluded");

    SubdivisionCert cert{ctx.p(), km, n, s, {}, false, false, false};

    // Membership of all six branch vertices.
    for (int i = 0; i < 3; ++i) {
        if (!s.X[i].on_surface(km) || !s.Y[i].on_surface(km))
            throw internal_error("build_cert: branch vertex off the surface");
        if (s.X[i].vieta(i + 1) != s.Y[i])
            throw internal_error("build_cert: Y_i is not R_i(X_i)");
    }
    // (b_1, c_2, a_3) = (c_1, a_2, b_3).
    if (s.X[1].x != s.X[2].x || s.X[2].y != s.X[0].y || s.X[0].z != s.X[1].z)
        throw internal_error("build_cert: coordinate coincidence relation fails");

    // Branch edges X_i - Y_i.
    for (int i = 0; i < 3; ++i)
        cert.paths.push_back({i, i + 3, {s.X[i], s.Y[i]}});
    // Walks X_i - Y_j of length 2n: word (j, i, j, i, ...).
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::vector<int> word;
            for (int t = 0; t < n; ++t) {
                word.push_back(j + 1);
                word.push_back(i + 1);
            }
            auto walk = graph::path_walk(s.X[i], word);
            if (walk.back() != s.Y[j])
                throw internal_error("build_cert: walked endpoint disagrees with predicted Y_j");
            cert.paths.push_back({i, j + 3, std::move(walk)});
        }
    }

    // Flags, derived from the walked lists alone.
    std::vector<Triple> branch;
    for (int i = 0; i < 3; ++i) branch.push_back(s.X[i]);
    for (int i = 0; i < 3; ++i) branch.push_back(s.Y[i]);
    std::set<Triple> branch_set(branch.begin(), branch.end());
    cert.distinct = branch_set.size() == 6;

    bool proper = true;
    std::vector<Triple> internals;
    for (const auto& path : cert.paths) {
        for (std::size_t t = 1; t + 1 < path.vertices.size(); ++t) {
            if (branch_set.count(path.vertices[t])) proper = false;
            internals.push_back(path.vertices[t]);
        }
    }
    cert.proper = cert.distinct && proper;

    bool internals_disjoint = true;
    std::sort(internals.begin(), internals.end());
    for (std::size_t t = 1; t < internals.size(); ++t)
        if (internals[t] == internals[t - 1]) internals_disjoint = false;

    bool edges_disjoint = true;
    std::set<std::pair<Triple, Triple>> edges;
    for (const auto& path : cert.paths) {
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
            Triple u = path.vertices[t], v = path.vertices[t + 1];
            if (v < u) std::swap(u, v);
            if (!edges.emplace(u, v).second) edges_disjoint = false;
        }
    }
    cert.verified = cert.proper && internals_disjoint && edges_disjoint;
    return cert;
}

std::string SubdivisionCert::to_json() const {
    nlohmann::json j;
    j["schema"] = "markoff-forge/1";
    j["p"] = p;
    j["kappa"] = kappa;
    j["n"] = n;
    j["alpha"] = sextuple.alpha;
    j["beta"] = sextuple.beta;
    j["sign"] = sextuple.sign.name();
    nlohmann::json bv = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) {
        const Triple& t = branch(i);
        bv.push_back({t.x, t.y, t.z});
    }
    j["branch_vertices"] = bv;
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& path : paths) {
        nlohmann::json pj;
        pj["from"] = branch_name(path.from);
        pj["to"] = branch_name(path.to);
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : path.vertices) vs.push_back({v.x, v.y, v.z});
        pj["vertices"] = vs;
        ps.push_back(pj);
    }
    j["paths"] = ps;
    j["flags"] = {{"distinct", distinct}, {"proper", proper}, {"verified", verified}};
    return j.dump(2);
}

void SubdivisionCert::to_dot(std::ostream& os) const {
    std::map<Triple, std::string> id;
    auto node = [&](const Triple& t) {
        auto it = id.find(t);
        if (it != id.end()) return it->second;
        std::string name = "v" + std::to_string(id.size());
        id.emplace(t, name);
        return name;
    };
    os << "graph cert {\n";
    for (int i = 0; i < 6; ++i)
        os << "  " << node(branch(i)) << " [label=\"" << branch(i).label()
           << "\", shape=doublecircle];\n";
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& path : paths) {
        bool branch_edge = path.vertices.size() == 2;
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
            std::string a = node(path.vertices[t]);
            std::string b = node(path.vertices[t + 1]);
            os << "  " << a << " -- " << b << " [color=" << (branch_edge ? "blue" : "red")
               << "];\n";
        }
    }
    for (const auto& [t, name] : id) {
        bool is_branch = false;
        for (int i = 0; i < 6; ++i)
            if (branch(i) == t) is_branch = true;
        if (!is_branch) os << "  " << name << " [label=\"" << t.label() << "\"];\n";
    }
    (void)seen;
    os << "}\n";
}

std::vector<CycleCert> extract_cycles(const SubdivisionCert& cert) {
    if (!cert.verified)
        throw std::invalid_argument("extract_cycles: certificate must be verified");
    auto path_of = [&](int from, int to) -> const CertPath& {
        for (const auto& p : cert.paths)
            if (p.from == from && p.to == to) return p;
        throw internal_error("extract_cycles: path lookup failed");
    };
    auto forward = [&](const CertPath& p) { return p.vertices; };
    auto backward = [&](const CertPath& p) {
        auto v = p.vertices;
        std::reverse(v.begin(), v.end());
        return v;
    };
    auto splice = [&](const std::vector<std::vector<Triple>>& legs) {
        std::vector<Triple> cycle;
        for (const auto& leg : legs) {
            std::size_t start = cycle.empty() ? 0 : 1;
            if (!cycle.empty() && cycle.back() != leg.front())
                throw internal_error("extract_cycles: legs do not chain");
            for (std::size_t i = start; i < leg.size(); ++i) cycle.push_back(leg[i]);
        }
        if (cycle.front() != cycle.back())
            throw internal_error("extract_cycles: tour is not closed");
        cycle.pop_back();
        return cycle;
    };
    auto validate = [&](std::vector<Triple> cycle, int expected_len) {
        CycleCert out{expected_len, cycle, true};
        if (static_cast<int>(cycle.size()) != expected_len) out.valid = false;
        std::set<Triple> uniq(cycle.begin(), cycle.end());
        if (uniq.size() != cycle.size()) out.valid = false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const Triple& u = cycle[i];
            const Triple& v = cycle[(i + 1) % cycle.size()];
            bool adjacent = u.vieta(1) == v || u.vieta(2) == v || u.vieta(3) == v;
            if (!adjacent) out.valid = false;
        }
        return out;
    };

    const int n = cert.n;
    std::vector<CycleCert> out;
    // X1 -> Y1 -> X2 -> Y2 -> X1.
    out.push_back(validate(
        splice({forward(path_of(0, 3)), backward(path_of(1, 3)), forward(path_of(1, 4)),
                backward(path_of(0, 4))}),
        4 * n + 2));
    // X1 -> Y1 -> X2 -> Y2 -> X3 -> Y3 -> X1.
    out.push_back(validate(
        splice({forward(path_of(0, 3)), backward(path_of(1, 3)), forward(path_of(1, 4)),
                backward(path_of(2, 4)), forward(path_of(2, 5)), backward(path_of(0, 5))}),
        6 * n + 3));
    // X1 -> Y1 -> X2 -> Y3 -> X3 -> Y2 -> X1.
    out.push_back(validate(
        splice({forward(path_of(0, 3)), backward(path_of(1, 3)), forward(path_of(1, 5)),
                backward(path_of(2, 5)), forward(path_of(2, 4)), backward(path_of(0, 4))}),
        8 * n + 2));
    return out;
}

DisjointReport disjoint_copies(const SubdivisionCert& base) {
    DisjointReport rep;
    if (!base.sextuple.X[0].ctx) throw internal_error("disjoint_copies: no context");
    const FpContext& ctx = *base.sextuple.X[0].ctx;
    for (const auto& sigma : SignChange::all())
        rep.copies.push_back(build_cert({base.sextuple.alpha, base.sextuple.beta}, base.n,
                                        static_cast<std::int64_t>(base.kappa), ctx,
                                        base.sextuple.sign.compose(sigma)));
    std::vector<std::vector<Triple>> sets;
    for (const auto& c : rep.copies) sets.push_back(c.vertex_set());
    rep.pairwise_disjoint = true;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            std::vector<Triple> inter;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) {
                rep.pairwise_disjoint = false;
                rep.overlaps.push_back({a, b, inter.front()});
            }
        }
    }
    rep.guard_b0 = poly::elimination_B(base.n, static_cast<std::int64_t>(base.kappa), ctx).eval(0) != 0;
    rep.guard_lambda =
        poly::lambda_resultant(base.n, static_cast<std::int64_t>(base.kappa), ctx) != 0;
    return rep;
}

Poly h_poly(int m, std::int64_t kappa, const FpContext& ctx) {
    if (m < 0) throw std::invalid_argument("h_poly: m must be nonnegative");
    const std::uint64_t km = ctx.reduce(kappa);
    Poly t_next = chebyshev::T_half_poly(m + 1, ctx);
    Poly t_cur = chebyshev::T_half_poly(m, ctx);
    Poly q(ctx, {ctx.neg(km), 0, 1});   // y^2 - kappa
    Poly lin(ctx, {ctx.neg(2), 1});     // y - 2
    const int e = (m + 1) / 2;
    // t_{m,j} is the coefficient of x^(m-2j) in T_m(x/2).
    Poly acc(ctx);
    for (int j = 0; j <= e; ++j) {
        std::uint64_t t = t_next.coeff(m + 1 - 2 * j);
        if (t == 0) continue;
        Poly term = Poly::constant(ctx, t);
        for (int i = 0; i < e - j; ++i) term = term * q;
        for (int i = 0; i < j; ++i) term = term * lin;
        acc = acc + term * Poly::x(ctx);
    }
    for (int j = 0; j <= m / 2; ++j) {
        std::uint64_t t = t_cur.coeff(m - 2 * j);
        if (t == 0) continue;
        Poly term = Poly::constant(ctx, t);
        for (int i = 0; i < e - j; ++i) term = term * q;
        for (int i = 0; i < j; ++i) term = term * lin;
        acc = acc - term;
    }
    Poly h = acc.scale(2);
    if (h.degree() != 2 * e + 1 || h.lc() != 1)
        throw internal_error("h_poly: expected a monic polynomial of degree 2 floor((m+1)/2) + 1");
    return h;
}

Poly g_poly(int n, int m, std::int64_t kappa, const FpContext& ctx) {
    if (m < 1) throw std::invalid_argument("g_poly: m must be positive");
    poly::EliminationBasis eb = poly::build_elimination_basis(n, kappa, ctx);
    const std::uint64_t km = ctx.reduce(kappa);
    Poly u_2m = chebyshev::U_half_poly(2 * m, ctx);
    Poly u_2m1 = chebyshev::U_half_poly(2 * m - 1, ctx);
    Poly q(ctx, {ctx.neg(km), 0, 1});
    Poly lin(ctx, {ctx.neg(2), 1});
    Poly acc(ctx);
    for (int j = 0; j <= m; ++j) {
        std::uint64_t u = u_2m.coeff(2 * m - 2 * j);
        if (u == 0) continue;
        Poly term = Poly::constant(ctx, u);
        for (int i = 0; i < m - j; ++i) term = term * q;
        for (int i = 0; i < j; ++i) term = term * lin;
        acc = acc + term * Poly::x(ctx);
    }
    for (int j = 0; j <= m - 1; ++j) {
        std::uint64_t u = u_2m1.coeff(2 * m - 1 - 2 * j);
        if (u == 0) continue;
        Poly term = Poly::constant(ctx, u);
        for (int i = 0; i < m - j; ++i) term = term * q;
        for (int i = 0; i < j; ++i) term = term * lin;
        acc = acc - term;
    }
    Poly lead = eb.C;
    for (int i = 0; i < m; ++i) lead = lead * lin;
    return lead - acc.scale(eb.kappa4_pow);
}

PropernessReport properness_resultants(int n, std::int64_t kappa, const FpContext& ctx) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("properness_resultants: closed forms cover n in {1,2,3}");
    PropernessReport rep{n, ctx.p(), ctx.reduce(kappa), {}, true, true};
    const std::uint64_t km = rep.kappa;
    const std::uint64_t k4 = ctx.sub(km, 4 % ctx.p());
    auto push = [&](const std::string& name, std::uint64_t expected, std::uint64_t actual) {
        bool ok = expected == actual;
        rep.checks.push_back({name, expected, actual, ok});
        if (!ok) rep.all_match = false;
        if (actual == 0) rep.guarantees_proper = false;
    };
    auto pow_k4 = [&](int e) { return ctx.pow(k4, static_cast<std::uint64_t>(e)); };

    Poly B = poly::elimination_B(n, kappa, ctx);
    std::uint64_t xi = poly::xi_resultant(n, kappa, ctx);
    Poly an = chebyshev::A_half_poly(n, ctx);

    // Walk-return cases (i-a): Res(A_n(x/2), U_{m-1}(x/2)) for 0 < m < n.
    for (int m = 1; m < n; ++m) {
        std::uint64_t actual = poly::resultant(an, chebyshev::U_half_poly(m - 1, ctx));
        push("Res(A_" + std::to_string(n) + ", U_" + std::to_string(m - 1) + ")", 1, actual);
    }
    // Cases (i-b): Res_y(B_n, h_m) for 0 <= m < n.
    const std::uint64_t cubic_factor =
        ctx.reduce(((kappa * kappa - 26 * kappa + 111) * kappa - 43));
    for (int m = 0; m < n; ++m) {
        std::uint64_t actual = poly::resultant(B, h_poly(m, kappa, ctx));
        std::uint64_t expected = 0;
        if (n == 1) {
            expected = ctx.neg(k4);
        } else if (n == 2) {
            expected = m == 0 ? pow_k4(2) : ctx.mul(pow_k4(2), xi);
        } else {
            if (m == 0)
                expected = ctx.neg(pow_k4(3));
            else if (m == 1)
                expected = ctx.mul(pow_k4(3), cubic_factor);
            else
                expected = ctx.mul(pow_k4(3), xi);
        }
        push("Res(B_" + std::to_string(n) + ", h_" + std::to_string(m) + ")", expected, actual);
    }
    // Cases (ii-a): Res_y(B_n, g_{n,m}) for 0 < m < n.
    for (int m = 1; m < n; ++m) {
        std::uint64_t actual = poly::resultant(B, g_poly(n, m, kappa, ctx));
        std::uint64_t expected;
        if (n == 2) {
            expected = pow_k4(8);
        } else {
            expected = m == 1 ? ctx.mul(pow_k4(15), cubic_factor) : ctx.neg(pow_k4(21));
        }
        push("Res(B_" + std::to_string(n) + ", g_" + std::to_string(n) + "," + std::to_string(m) + ")",
             expected, actual);
    }
    // Cases (ii-b): Res(A_n(x/2), A_m(x/2)) for 0 <= m < n.
    for (int m = 0; m < n; ++m) {
        std::uint64_t actual = poly::resultant(an, chebyshev::A_half_poly(m, ctx));
        std::uint64_t expected = m == 0 ? 1 : ctx.neg(1);
        push("Res(A_" + std::to_string(n) + ", A_" + std::to_string(m) + ")", expected, actual);
    }
    return rep;
}

}  // namespace markoff::subdivision
