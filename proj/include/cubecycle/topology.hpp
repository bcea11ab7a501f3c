#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cubecycle/core.hpp"

namespace cubecycle {

// Cross-subcube deltas of the simplified shuffle-cube: XOR of the single
// differing 4-bit group must land in this set.
inline constexpr std::array<unsigned, 4> kV00 = {0b1111u, 0b0001u, 0b0010u, 0b0011u};

inline constexpr bool in_v00(unsigned delta) {
    return delta == 0b1111u || delta == 0b0001u || delta == 0b0010u || delta == 0b0011u;
}

// An SSQ group nibble must have equal top bits (00xy or 11xy).
inline constexpr bool ssq_group_ok(unsigned g) {
    return ((g >> 3) & 1u) == ((g >> 2) & 1u);
}

// Valid SSQ group values in increasing numeric order.
inline constexpr std::array<unsigned, 8> kSsqGroupValues = {0, 1, 2, 3, 12, 13, 14, 15};

inline bool is_valid_label(CubeFamily family, Dimension dim, std::uint64_t bits) {
    if (dim.bits() < 64 && (bits >> dim.bits()) != 0) return false;
    if (family == CubeFamily::bsq) return true;
    for (int j = 1; j <= dim.groups(); ++j)
        if (!ssq_group_ok(group_value(Label{bits}, j))) return false;
    return true;
}

inline Label validate_label(CubeFamily family, Dimension dim, std::uint64_t bits) {
    if (dim.bits() < 64 && (bits >> dim.bits()) != 0)
        throw_error(Errc::wrong_length, "label has bits beyond position n-1");
    if (family == CubeFamily::ssq) {
        for (int j = 1; j <= dim.groups(); ++j)
            if (!ssq_group_ok(group_value(Label{bits}, j)))
                throw_error(Errc::invalid_ssq_group,
                            "group " + std::to_string(j) + " of an SSQ label must start 00 or 11");
    }
    return Label{bits};
}

inline Label validate_label(CubeFamily family, Dimension dim, std::string_view text) {
    return validate_label(family, dim, parse_label(dim, text).bits);
}

// A cube graph is fully determined by its family tag and dimension; adjacency
// is a pure function of the two labels.
class CubeGraph {
public:
    CubeGraph(CubeFamily family, Dimension dim) : family_(family), dim_(dim) {}

    CubeFamily family() const { return family_; }
    Dimension dim() const { return dim_; }
    int n() const { return dim_.bits(); }
    int groups() const { return dim_.groups(); }

    std::uint64_t vertex_count() const {
        if (family_ == CubeFamily::bsq) return 1ull << n();
        return 1ull << (3 * groups() + 2);
    }

    bool valid(Label u) const { return is_valid_label(family_, dim_, u.bits); }

    void require_valid(Label u) const {
        if (!valid(u)) throw_error(Errc::invalid_label, "label " + to_text(dim_, u) + " not in V(" +
                                                            std::string(family_name(family_)) + "_" +
                                                            std::to_string(n()) + ")");
    }

private:
    CubeFamily family_;
    Dimension dim_;
};

inline CubeGraph ssq(int n) { return CubeGraph(CubeFamily::ssq, Dimension(n)); }
inline CubeGraph bsq(int n) { return CubeGraph(CubeFamily::bsq, Dimension(n)); }

namespace detail {

// BSQ group rule on a single nibble pair, a = top half, b = bottom half:
// a' = a +- 1 (mod 4), and b' = b or b' = b + (-1)^{a mod 2} (mod 4).
inline bool bsq_group_adjacent(unsigned gu, unsigned gv) {
    unsigned au = gu >> 2, bu = gu & 3u;
    unsigned av = gv >> 2, bv = gv & 3u;
    if (av != ((au + 1) & 3u) && av != ((au + 3) & 3u)) return false;
    unsigned sign = (au & 1u) ? 3u : 1u;
    return bv == bu || bv == ((bu + sign) & 3u);
}

}  // namespace detail

// Unrolled adjacency: exactly one group differs, and the differing group
// satisfies the family rule (Q_2 flip on the suffix group).
inline bool adjacent(const CubeGraph& g, Label u, Label v) {
    g.require_valid(u);
    g.require_valid(v);
    std::uint64_t x = u.bits ^ v.bits;
    if (x == 0) return false;
    if (x <= 3) {
        // suffix group differs and nothing else
        return x == 1 || x == 2;
    }
    if ((x & 3) != 0) return false;  // suffix and some group both differ
    int j = (std::countr_zero(x) + 2) / 4;
    if (j > g.groups()) return false;
    int shift = 4 * j - 2;
    if ((x >> shift) > 0xF) return false;  // more than one group differs
    if (g.family() == CubeFamily::ssq) return in_v00(static_cast<unsigned>(x >> shift));
    return detail::bsq_group_adjacent(group_value(u, j), group_value(v, j));
}

// Literal recursive form of the definitions: same prefix -> recurse into the
// common subcube; different prefix -> equal (n-4)-suffixes plus the family's
// prefix rule; base case Q_2.
inline bool recursive_adjacent(const CubeGraph& g, Label u, Label v) {
    g.require_valid(u);
    g.require_valid(v);
    int n = g.n();
    if (u == v) return false;
    if (n == 2) {
        std::uint64_t x = u.bits ^ v.bits;
        return x == 1 || x == 2;
    }
    unsigned pu = prefix4(g.dim(), u), pv = prefix4(g.dim(), v);
    std::uint64_t su = suffix_bits(u, n - 4), sv = suffix_bits(v, n - 4);
    if (pu == pv) {
        CubeGraph sub(g.family(), Dimension(n - 4));
        return recursive_adjacent(sub, Label{su}, Label{sv});
    }
    if (su != sv) return false;
    if (g.family() == CubeFamily::ssq) return in_v00(pu ^ pv);
    return detail::bsq_group_adjacent(pu, pv);
}

// Per-group neighbor deltas in the fixed output order.
inline void append_group_neighbors(const CubeGraph& g, Label u, int j, std::vector<Label>& out) {
    if (g.family() == CubeFamily::ssq) {
        for (unsigned delta : kV00) out.push_back(with_group(u, j, group_value(u, j) ^ delta));
    } else {
        unsigned gu = group_value(u, j);
        unsigned a = gu >> 2, b = gu & 3u;
        unsigned bs = (b + ((a & 1u) ? 3u : 1u)) & 3u;
        unsigned up = (a + 1) & 3u, dn = (a + 3) & 3u;
        out.push_back(with_group(u, j, (up << 2) | b));
        out.push_back(with_group(u, j, (up << 2) | bs));
        out.push_back(with_group(u, j, (dn << 2) | b));
        out.push_back(with_group(u, j, (dn << 2) | bs));
    }
}

// Exactly n neighbors, ordered group k down to group 1, then suffix 01, 10.
inline std::vector<Label> neighbors(const CubeGraph& g, Label u) {
    g.require_valid(u);
    std::vector<Label> out;
    out.reserve(static_cast<std::size_t>(g.n()));
    for (int j = g.groups(); j >= 1; --j) append_group_neighbors(g, u, j, out);
    out.push_back(Label{u.bits ^ 1});
    out.push_back(Label{u.bits ^ 2});
    return out;
}

// Classification of an edge by its unique differing group.
//   suffix edge: delta is the 2-bit XOR (01 or 10);
//   SSQ group edge: delta is the group XOR, a member of V00;
//   BSQ group edge: delta packs ((a_v - a_u) mod 4) << 2 | ((b_v - b_u) mod 4),
//   so applying it to u's group with mod-4 adds reproduces v.
struct EdgeClass {
    bool is_suffix = false;
    int group = 0;
    unsigned delta = 0;

    friend bool operator==(const EdgeClass& a, const EdgeClass& b) {
        return a.is_suffix == b.is_suffix && a.group == b.group && a.delta == b.delta;
    }
};

inline EdgeClass classify_edge(const CubeGraph& g, Label u, Label v) {
    if (!adjacent(g, u, v))
        throw_error(Errc::not_an_edge, "(" + to_text(g.dim(), u) + ", " + to_text(g.dim(), v) +
                                           ") is not an edge");
    std::uint64_t x = u.bits ^ v.bits;
    if (x <= 3) return EdgeClass{true, 0, static_cast<unsigned>(x)};
    int j = (std::countr_zero(x) + 2) / 4;
    if (g.family() == CubeFamily::ssq)
        return EdgeClass{false, j, static_cast<unsigned>(x >> (4 * j - 2))};
    unsigned gu = group_value(u, j), gv = group_value(v, j);
    unsigned da = ((gv >> 2) - (gu >> 2)) & 3u;
    unsigned db = ((gv & 3u) - (gu & 3u)) & 3u;
    return EdgeClass{false, j, (da << 2) | db};
}

// Applies an EdgeClass delta to u, i.e. reconstructs v.
inline Label apply_edge_class(const CubeGraph& g, Label u, const EdgeClass& c) {
    if (c.is_suffix) return Label{u.bits ^ c.delta};
    unsigned gu = group_value(u, c.group);
    if (g.family() == CubeFamily::ssq) return with_group(u, c.group, gu ^ c.delta);
    unsigned a = ((gu >> 2) + (c.delta >> 2)) & 3u;
    unsigned b = ((gu & 3u) + (c.delta & 3u)) & 3u;
    return with_group(u, c.group, (a << 2) | b);
}

inline unsigned subcube_of(Dimension dim, Label u) { return prefix4(dim, u); }

// Deterministic lexicographic vertex enumeration.
inline std::vector<Label> vertices(const CubeGraph& g) {
    std::vector<Label> out;
    out.reserve(static_cast<std::size_t>(g.vertex_count()));
    if (g.family() == CubeFamily::bsq) {
        for (std::uint64_t b = 0; b < (1ull << g.n()); ++b) out.push_back(Label{b});
        return out;
    }
    // odometer over the k groups (8 valid values each) and the 4 suffixes
    int k = g.groups();
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
        std::uint64_t base = 0;
        for (int j = 1; j <= k; ++j)
            base |= static_cast<std::uint64_t>(kSsqGroupValues[static_cast<std::size_t>(
                        idx[static_cast<std::size_t>(k - j)])])
                    << (4 * j - 2);
        for (std::uint64_t s = 0; s < 4; ++s) out.push_back(Label{base | s});
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 7) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return out;
}

// Caps are configuration constants rather than call-site literals.
inline constexpr std::uint64_t kMaterializeVertexCap = 1ull << 20;

// Sorted, deduplicated undirected edge list (smaller endpoint first).
inline std::vector<Edge> materialize(const CubeGraph& g,
                                     std::uint64_t vertex_cap = kMaterializeVertexCap) {
    if (g.vertex_count() > vertex_cap)
        throw_error(Errc::too_large, "graph too large to materialize");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count() * static_cast<unsigned>(g.n()) / 2));
    for (Label u : vertices(g))
        for (Label v : neighbors(g, u))
            if (u < v) edges.push_back(Edge{u, v});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u.bits != b.u.bits ? a.u < b.u : a.v < b.v;
    });
    return edges;
}

inline void write_edge_list(std::ostream& os, const CubeGraph& g, const std::vector<Edge>& edges) {
    for (const Edge& e : edges)
        os << to_text(g.dim(), e.u) << ' ' << to_text(g.dim(), e.v) << '\n';
}

inline void write_dot(std::ostream& os, const CubeGraph& g, const std::vector<Edge>& edges) {
    os << "graph " << family_name(g.family()) << g.n() << " {\n";
    for (Label u : vertices(g)) os << "  \"" << to_text(g.dim(), u) << "\";\n";
    for (const Edge& e : edges)
        os << "  \"" << to_text(g.dim(), e.u) << "\" -- \"" << to_text(g.dim(), e.v) << "\";\n";
    os << "}\n";
}

}  // namespace cubecycle
