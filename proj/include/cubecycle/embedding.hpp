#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubecycle/assets.hpp"
#include "cubecycle/automorphism.hpp"
#include "cubecycle/core.hpp"
#include "cubecycle/oracle.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

// ---------------------------------------------------------------------------
// splice: (c1 - e) u (c2 - e) for two cycles sharing exactly the edge e

inline Walk splice(const Walk& c1, const Walk& c2, Edge e) {
    if (!c1.closed || !c2.closed)
        throw_error(Errc::bad_argument, "splice needs two closed walks");
    int i1 = c1.find_edge(e.u, e.v);
    int i2 = c2.find_edge(e.u, e.v);
    if (i1 < 0 || i2 < 0) throw_error(Errc::edge_not_shared, "edge not on both cycles");
    std::unordered_set<std::uint64_t> seen;
    for (Label x : c1.vertices) seen.insert(x.bits);
    for (Label x : c2.vertices)
        if (seen.count(x.bits) && x != e.u && x != e.v)
            throw_error(Errc::overlap_beyond_edge, "cycles share a vertex besides the edge ends");

    auto opened = [](const Walk& c, int i) {
        // path from c[i+1] around to c[i]; drops exactly the edge at i
        std::vector<Label> p;
        std::size_t m = c.vertices.size();
        p.reserve(m);
        for (std::size_t step = 0; step < m; ++step)
            p.push_back(c.vertices[(static_cast<std::size_t>(i) + 1 + step) % m]);
        return p;
    };
    std::vector<Label> p1 = opened(c1, i1);  // b1 ... a1
    std::vector<Label> p2 = opened(c2, i2);  // b2 ... a2
    if (p2.front() != p1.front()) std::reverse(p2.begin(), p2.end());
    // now p2 runs b1 ... a1 as well; its interior bridges a1 back to b1
    Walk out{{}, true};
    out.vertices.reserve(p1.size() + p2.size() - 2);
    out.vertices.insert(out.vertices.end(), p1.begin(), p1.end());
    out.vertices.insert(out.vertices.end(), p2.rbegin() + 1, p2.rend() - 1);
    return out;
}

// ---------------------------------------------------------------------------
// verified automorphisms

namespace detail {

inline void verify_or_throw(const CubeGraph& g, Automorphism& aut, std::uint64_t seed) {
    VerifyMode mode = g.n() <= 6 ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(10000, seed);
    if (!verify_automorphism(g, aut, mode))
        throw_error(Errc::not_an_automorphism, "constructed map failed adjacency verification");
    aut.mark_verified();
}

inline Automorphism cached_translation(CubeFamily family, Dimension dim, Label u) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::uint64_t>, Automorphism> cache;
    std::tuple<int, int, std::uint64_t> key{static_cast<int>(family), dim.bits(), u.bits};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Automorphism aut = family == CubeFamily::ssq ? raw_ssq_translation(dim, u)
                                                 : raw_bsq_translation(dim, u);
    CubeGraph g(family, dim);
    verify_or_throw(g, aut, u.bits * 0x2545f4914f6cdd1dull + static_cast<unsigned>(dim.bits()));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, aut).first->second;
}

}  // namespace detail

// Verified translation mapping u to the all-zero label.
inline Automorphism ssq_translation(Dimension dim, Label u) {
    return detail::cached_translation(CubeFamily::ssq, dim, u);
}

inline Automorphism bsq_translation(Dimension dim, Label u) {
    return detail::cached_translation(CubeFamily::bsq, dim, u);
}

// Verified relabeling that exchanges the 4-bit blocks at positions j1 and j2.
inline Automorphism group_swap(CubeFamily family, Dimension dim, int j1, int j2) {
    Automorphism aut = detail::raw_group_swap(family, dim, j1, j2);
    CubeGraph g(family, dim);
    detail::verify_or_throw(g, aut, (static_cast<std::uint64_t>(j1) << 8) ^ static_cast<std::uint64_t>(j2));
    return aut;
}

// ---------------------------------------------------------------------------
// base cycles of the order-6 graphs

inline Walk ssq6_base_cycle(int l) {
    if (l < 3 || l > 32)
        throw_error(Errc::length_out_of_range, "SSQ_6 cycle lengths run 3..32");
    return default_assets().base_cycle(CubeFamily::ssq, l).walk;
}

inline Walk bsq6_base_cycle(int l) {
    if (l % 2 != 0) throw_error(Errc::odd_length, "BSQ_6 is bipartite; cycle lengths are even");
    if (l < 4 || l > 64)
        throw_error(Errc::length_out_of_range, "BSQ_6 cycle lengths run 4..64");
    return default_assets().base_cycle(CubeFamily::bsq, l).walk;
}

// ---------------------------------------------------------------------------
// the 16-/32-cycle of an edge (one inner edge per subcube)

namespace detail {

// Prefix visitation sequences of the fixed cycle patterns. Consecutive
// entries (and the wrap-around) satisfy the family's prefix rule.
inline constexpr std::array<unsigned, 8> kSsqRunDown = {
    0b0000, 0b1111, 0b1110, 0b1101, 0b1100, 0b0011, 0b0010, 0b0001};
inline constexpr std::array<unsigned, 8> kSsqRunUp = {
    0b0000, 0b0001, 0b0010, 0b0011, 0b1100, 0b1101, 0b1110, 0b1111};

inline constexpr std::array<unsigned, 16> kBsqRunHold = {
    0b0000, 0b1101, 0b1001, 0b0101, 0b0001, 0b1110, 0b1010, 0b0110,
    0b0010, 0b1111, 0b1011, 0b0111, 0b0011, 0b1100, 0b1000, 0b0100};
inline constexpr std::array<unsigned, 16> kBsqRunStep = {
    0b0000, 0b0100, 0b1000, 0b1100, 0b1011, 0b1111, 0b0011, 0b0111,
    0b0010, 0b1110, 0b1010, 0b0110, 0b0001, 0b1101, 0b1001, 0b0101};
inline constexpr std::array<unsigned, 16> kBsqRunSuffix = {
    0b0000, 0b0100, 0b1000, 0b1100, 0b0011, 0b0111, 0b1011, 0b1111,
    0b0010, 0b0110, 0b1010, 0b1110, 0b0001, 0b0101, 0b1001, 0b1101};

// Hamiltonian prefix runs whose first step is the given prefix delta; used
// when the edge itself crosses between subcubes. The 0001 and 1111 runs are
// the pattern runs above; the others permute them without breaking any step.
inline const std::array<unsigned, 8>& ssq_prefix_run(unsigned delta) {
    static constexpr std::array<unsigned, 8> via0010 = {
        0b0000, 0b0010, 0b0001, 0b0011, 0b1100, 0b1110, 0b1101, 0b1111};
    static constexpr std::array<unsigned, 8> via0011 = {
        0b0000, 0b0011, 0b0010, 0b0001, 0b1110, 0b1100, 0b1101, 0b1111};
    switch (delta) {
        case 0b0001: return kSsqRunUp;
        case 0b0010: return via0010;
        case 0b0011: return via0011;
        default: return kSsqRunDown;
    }
}

inline const std::array<unsigned, 16>& bsq_prefix_run(unsigned delta) {
    static constexpr std::array<unsigned, 16> via0101 = {
        0b0000, 0b0101, 0b1001, 0b1101, 0b0001, 0b0110, 0b1010, 0b1110,
        0b0010, 0b0111, 0b0011, 0b1111, 0b1011, 0b1100, 0b1000, 0b0100};
    static constexpr std::array<unsigned, 16> via1100 = {
        0b0000, 0b1100, 0b1000, 0b0100, 0b0011, 0b1111, 0b1011, 0b0111,
        0b0010, 0b1110, 0b1010, 0b0110, 0b0001, 0b1101, 0b1001, 0b0101};
    switch (delta) {
        case 0b0100: return kBsqRunSuffix;
        case 0b0101: return via0101;
        case 0b1100: return via1100;
        default: return kBsqRunHold;
    }
}

// Pattern for an edge inside position j (j < k, or the suffix): two vertices
// per prefix stop, the affected position alternating between 0 and `val`.
template <std::size_t N>
inline Walk alternating_pattern(Dimension dim, const std::array<unsigned, N>& prefixes, int j,
                                unsigned val) {
    Walk w{{}, true};
    w.vertices.reserve(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        Label base = with_group(Label{0}, dim.groups(), prefixes[i]);
        unsigned enter = (i % 2 == 0) ? 0u : val;
        unsigned leave = (i % 2 == 0) ? val : 0u;
        w.vertices.push_back(with_group(base, j, enter));
        w.vertices.push_back(with_group(base, j, leave));
    }
    return w;
}

// Pattern for an edge that itself crosses subcubes: ride a Hamiltonian
// prefix run whose first step matches the edge, spending one suffix flip
// inside every stop, closing with the home subcube's flip.
template <std::size_t N>
inline Walk prefix_edge_pattern(Dimension dim, const std::array<unsigned, N>& run) {
    Walk w{{}, true};
    w.vertices.reserve(2 * N);
    w.vertices.push_back(Label{0});
    unsigned s = 0;
    for (std::size_t i = 1; i < N; ++i) {
        Label base = with_group(Label{0}, dim.groups(), run[i]);
        w.vertices.push_back(with_group(base, 0, s));
        w.vertices.push_back(with_group(base, 0, s ^ 1u));
        s ^= 1u;
    }
    w.vertices.push_back(Label{1});
    return w;
}

inline Walk edge_cycle_pattern(const CubeGraph& g, Label translated_v) {
    Dimension dim = g.dim();
    EdgeClass cls = classify_edge(g, Label{0}, translated_v);
    bool ssq_family = g.family() == CubeFamily::ssq;
    if (cls.is_suffix) {
        return ssq_family ? alternating_pattern(dim, kSsqRunUp, 0, cls.delta)
                          : alternating_pattern(dim, kBsqRunSuffix, 0, cls.delta);
    }
    unsigned val = group_value(translated_v, cls.group);
    if (cls.group < dim.groups()) {
        if (ssq_family)
            return alternating_pattern(dim, val == 0b1111u ? kSsqRunUp : kSsqRunDown, cls.group, val);
        return alternating_pattern(dim, (val & 3u) == 0 ? kBsqRunHold : kBsqRunStep, cls.group, val);
    }
    // the edge crosses subcubes at the prefix position
    if (dim.bits() == 6) {
        return default_assets().prefix_cycle(g.family(), val).walk;
    }
    if (ssq_family) return prefix_edge_pattern(dim, ssq_prefix_run(val));
    return prefix_edge_pattern(dim, bsq_prefix_run(val));
}

inline Walk edge_cycle(const CubeGraph& g, Edge e) {
    if (g.n() < 6) throw_error(Errc::dimension_too_small, "edge cycles need n >= 6");
    if (!g.valid(e.u) || !g.valid(e.v) || !adjacent(g, e.u, e.v))
        throw_error(Errc::not_an_edge, "input is not an edge of the graph");
    Automorphism tau = g.family() == CubeFamily::ssq ? ssq_translation(g.dim(), e.u)
                                                     : bsq_translation(g.dim(), e.u);
    Walk pattern = edge_cycle_pattern(g, tau.apply(e.v));
    return apply(tau.inverse(), pattern);
}

}  // namespace detail

// 16-cycle through the edge with exactly one edge inside each of the eight
// subcubes; the walk starts at e.u followed by e.v.
inline Walk ssq_edge_cycle16(Dimension dim, Edge e) {
    return detail::edge_cycle(CubeGraph(CubeFamily::ssq, dim), e);
}

// 32-cycle through the edge with exactly one edge inside each of the sixteen
// subcubes.
inline Walk bsq_edge_cycle32(Dimension dim, Edge e) {
    return detail::edge_cycle(CubeGraph(CubeFamily::bsq, dim), e);
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles through a designated edge

namespace detail {

// rotate so the cycle reads a, b, ...
inline Walk aligned_cycle(const Walk& w, Label a, Label b) {
    Walk r = rotated_to(w, a);
    if (r.vertices.size() > 1 && r.vertices[1] == b) return r;
    std::reverse(r.vertices.begin() + 1, r.vertices.end());
    if (r.vertices.size() < 2 || r.vertices[1] != b)
        throw_error(Errc::bad_argument, "edge is not on the cycle");
    return r;
}

inline Walk lifted(const Walk& w, unsigned prefix, Dimension dim) {
    Walk out{{}, w.closed};
    out.vertices.reserve(w.vertices.size());
    for (Label x : w.vertices)
        out.vertices.push_back(Label{x.bits | (static_cast<std::uint64_t>(prefix) << (dim.bits() - 4))});
    return out;
}

inline Label dropped(Label x, Dimension dim) { return Label{suffix_bits(x, dim.bits() - 4)}; }

// inner edge of each subcube, in the order the cycle first visits subcubes
inline std::vector<std::pair<unsigned, Edge>> inner_edges_by_visitation(const Walk& w,
                                                                        Dimension dim) {
    std::vector<unsigned> order;
    std::map<unsigned, Edge> inner;
    std::size_t m = w.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        unsigned p = prefix4(dim, w.vertices[i]);
        if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
        Label a = w.vertices[i], b = w.vertices[(i + 1) % m];
        if (prefix4(dim, b) == p) inner.emplace(p, Edge{a, b});
    }
    std::vector<std::pair<unsigned, Edge>> out;
    out.reserve(order.size());
    for (unsigned p : order) {
        auto it = inner.find(p);
        if (it == inner.end())
            throw_error(Errc::bad_argument, "cycle lacks an inner edge in a visited subcube");
        out.emplace_back(p, it->second);
    }
    return out;
}

// Ham cycles of the order-32 SSQ graph through each edge class out of the
// all-zero vertex, found once by backtracking.
inline const std::map<std::uint64_t, Walk>& ssq6_ham_table() {
    static const std::map<std::uint64_t, Walk> table = [] {
        CubeGraph g = ssq(6);
        std::map<std::uint64_t, Walk> t;
        for (Label d : neighbors(g, Label{0})) {
            std::optional<Walk> path = find_ham_path(g, d, Label{0});
            if (!path)
                throw_error(Errc::search_failed, "no Hamiltonian path found in SSQ_6");
            Walk cycle{{}, true};
            cycle.vertices.reserve(path->vertices.size());
            cycle.vertices.push_back(Label{0});
            cycle.vertices.insert(cycle.vertices.end(), path->vertices.begin(),
                                  path->vertices.end() - 1);
            t.emplace(d.bits, std::move(cycle));
        }
        return t;
    }();
    return table;
}

inline Walk ham_cycle_edge(const CubeGraph& g, Edge e) {
    Dimension dim = g.dim();
    if (!g.valid(e.u) || !g.valid(e.v) || !adjacent(g, e.u, e.v))
        throw_error(Errc::not_an_edge, "input is not an edge of the graph");
    if (g.family() == CubeFamily::bsq && dim.bits() == 2) {
        Walk q2{{Label{0}, Label{1}, Label{3}, Label{2}}, true};
        return aligned_cycle(q2, e.u, e.v);
    }
    if (g.family() == CubeFamily::ssq && dim.bits() == 6) {
        Automorphism tau = ssq_translation(dim, e.u);
        const Walk& base = ssq6_ham_table().at(tau.apply(e.v).bits);
        return apply(tau.inverse(), base);
    }
    unsigned pu = prefix4(dim, e.u), pv = prefix4(dim, e.v);
    Dimension sub(dim.bits() - 4);
    if (pu == pv) {
        // grow the subcube's own Hamiltonian cycle, then leave it through a
        // second edge expanded to the full 16-/32-cycle
        CubeGraph subg(g.family(), sub);
        Walk own = ham_cycle_edge(subg, Edge{dropped(e.u, dim), dropped(e.v, dim)});
        Walk here = lifted(aligned_cycle(own, dropped(e.u, dim), dropped(e.v, dim)), pu, dim);
        Edge e0{here.vertices[1], here.vertices[2]};
        Walk ring = edge_cycle(g, e0);
        Walk expanded = splice(here, ring, e0);
        for (const auto& [p, inner_edge] : inner_edges_by_visitation(ring, dim)) {
            if (p == pu) continue;
            CubeGraph sg(g.family(), sub);
            Walk sub_ham = ham_cycle_edge(sg, Edge{dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)});
            Walk block = lifted(aligned_cycle(sub_ham, dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)),
                                p, dim);
            expanded = splice(expanded, block, inner_edge);
        }
        return rotated_to(expanded, e.u);
    }
    // cross edge: its ring visits every subcube once; expand them all
    Walk ring = edge_cycle(g, e);
    Walk expanded = ring;
    for (const auto& [p, inner_edge] : inner_edges_by_visitation(ring, dim)) {
        CubeGraph sg(g.family(), sub);
        Walk sub_ham = ham_cycle_edge(sg, Edge{dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)});
        Walk block = lifted(aligned_cycle(sub_ham, dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)),
                            p, dim);
        expanded = splice(expanded, block, inner_edge);
    }
    return rotated_to(expanded, e.u);
}

}  // namespace detail

// Hamiltonian cycle of SSQ_n containing the edge (n >= 6).
inline Walk ssq_ham_cycle_edge(Dimension dim, Edge e) {
    if (dim.bits() < 6)
        throw_error(Errc::dimension_too_small, "SSQ Hamiltonian construction needs n >= 6");
    return detail::ham_cycle_edge(CubeGraph(CubeFamily::ssq, dim), e);
}

// Hamiltonian cycle of BSQ_n containing the edge (n >= 2).
inline Walk bsq_ham_cycle_edge(Dimension dim, Edge e) {
    return detail::ham_cycle_edge(CubeGraph(CubeFamily::bsq, dim), e);
}

// ---------------------------------------------------------------------------
// vertex-(bi)pancyclic constructions

namespace detail {

inline Walk pancycle_zero(const CubeGraph& g, std::uint64_t l);

// Splices the length-l machinery together for the anchor vertex 0:
// recurse for a core cycle in the home subcube, ride one edge's 16-/32-cycle,
// then expand subcubes into their Hamiltonian cycles until l is reached.
inline Walk expanded_cycle_zero(const CubeGraph& g, std::uint64_t l) {
    Dimension dim = g.dim();
    Dimension sub(dim.bits() - 4);
    CubeGraph subg(g.family(), sub);
    std::uint64_t subcount = subg.vertex_count();
    std::uint64_t ring_len = g.family() == CubeFamily::ssq ? 16 : 32;
    std::uint64_t ring_gain = ring_len - 2;
    std::uint64_t expand_gain = subcount - 2;
    std::uint64_t lhat = l - ring_gain;
    std::uint64_t expansions = 0;
    if (lhat > subcount) {
        expansions = (lhat - subcount + expand_gain - 1) / expand_gain;
        lhat -= expansions * expand_gain;
    }
    std::uint64_t min_len = g.family() == CubeFamily::ssq ? 3 : 4;
    if (lhat < min_len || lhat > subcount || expansions >= ring_len / 2)
        throw_error(Errc::length_out_of_range, "internal: no case covers this length");
    Walk base = lifted(pancycle_zero(subg, lhat), 0, dim);
    Edge e0{base.vertices[0], base.vertices[1]};
    Walk ring = edge_cycle(g, e0);
    std::vector<std::pair<unsigned, Edge>> inner = inner_edges_by_visitation(ring, dim);
    Walk cur = splice(base, ring, e0);
    for (std::uint64_t i = 1; i <= expansions; ++i) {
        const auto& [p, inner_edge] = inner[static_cast<std::size_t>(i)];
        Walk sub_ham = ham_cycle_edge(subg, Edge{dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)});
        Walk block =
            lifted(aligned_cycle(sub_ham, dropped(inner_edge.u, dim), dropped(inner_edge.v, dim)), p, dim);
        cur = splice(cur, block, inner_edge);
    }
    return rotated_to(cur, Label{0});
}

inline Walk pancycle_zero(const CubeGraph& g, std::uint64_t l) {
    int n = g.n();
    if (g.family() == CubeFamily::bsq && n == 2)
        return Walk{{Label{0}, Label{1}, Label{3}, Label{2}}, true};
    if (n == 6) {
        Walk row = g.family() == CubeFamily::ssq ? ssq6_base_cycle(static_cast<int>(l))
                                                 : bsq6_base_cycle(static_cast<int>(l));
        return rotated_to(row, Label{0});
    }
    Dimension sub(n - 4);
    std::uint64_t subcount = CubeGraph(g.family(), sub).vertex_count();
    if (l <= subcount) return lifted(pancycle_zero(CubeGraph(g.family(), sub), l), 0, g.dim());
    return expanded_cycle_zero(g, l);
}

}  // namespace detail

// Cycle of any length 3..|V| through u in SSQ_n, n >= 6.
inline Walk ssq_pancycle(Dimension dim, Label u, std::uint64_t l) {
    if (dim.bits() < 6)
        throw_error(Errc::dimension_too_small, "SSQ_2 is a plain 4-cycle; pancyclicity needs n >= 6");
    CubeGraph g = ssq(dim.bits());
    g.require_valid(u);
    if (l < 3 || l > g.vertex_count())
        throw_error(Errc::length_out_of_range,
                    "cycle length must lie in [3, " + std::to_string(g.vertex_count()) + "]");
    Automorphism tau = ssq_translation(dim, u);
    Walk core = detail::pancycle_zero(g, l);
    return rotated_to(apply(tau.inverse(), core), u);
}

// Cycle of any even length 4..|V| through u in BSQ_n, n >= 2.
inline Walk bsq_bipancycle(Dimension dim, Label u, std::uint64_t l) {
    CubeGraph g = bsq(dim.bits());
    g.require_valid(u);
    if (l % 2 != 0) throw_error(Errc::odd_length, "BSQ_n is bipartite; cycle lengths are even");
    if (l < 4 || l > g.vertex_count())
        throw_error(Errc::length_out_of_range,
                    "cycle length must lie in [4, " + std::to_string(g.vertex_count()) + "]");
    Automorphism tau = bsq_translation(dim, u);
    Walk core = detail::pancycle_zero(g, l);
    return rotated_to(apply(tau.inverse(), core), u);
}

}  // namespace cubecycle
