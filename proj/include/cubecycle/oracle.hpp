#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubecycle/automorphism.hpp"
#include "cubecycle/core.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

// Size limits for exhaustive oracle work; call sites take them as defaulted
// parameters so CI can trade time for coverage.
inline constexpr std::uint64_t kExhaustiveVertexCap = 1ull << 12;
inline constexpr std::uint64_t kHamPathVertexCap = 1ull << 6;

namespace detail {

// Deterministic bounded sampling; avoids std::uniform_int_distribution so
// that sequences are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }

private:
    std::mt19937_64 eng_;
};

inline Label random_vertex(const CubeGraph& g, Rng& rng) {
    if (g.family() == CubeFamily::bsq) return Label{rng.next(1ull << g.n())};
    Label u{rng.next(4)};
    for (int j = 1; j <= g.groups(); ++j)
        u = with_group(u, j, kSsqGroupValues[static_cast<std::size_t>(rng.next(8))]);
    return u;
}

inline Edge random_edge(const CubeGraph& g, Rng& rng) {
    Label u = random_vertex(g, rng);
    std::vector<Label> nb = neighbors(g, u);
    return Edge{u, nb[static_cast<std::size_t>(rng.next(nb.size()))]};
}

// Adjacency lists with dense indices, for BFS/DFS work on small graphs.
struct IndexedGraph {
    std::vector<Label> verts;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::vector<int>> adj;

    explicit IndexedGraph(const CubeGraph& g) {
        verts = vertices(g);
        index.reserve(verts.size() * 2);
        for (std::size_t i = 0; i < verts.size(); ++i)
            index.emplace(verts[i].bits, static_cast<int>(i));
        adj.resize(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (Label v : neighbors(g, verts[i]))
                adj[i].push_back(index.at(v.bits));
    }

    int at(Label u) const {
        auto it = index.find(u.bits);
        if (it == index.end()) throw_error(Errc::invalid_label, "label not in graph");
        return it->second;
    }
};

inline std::vector<int> bfs_distances(const IndexedGraph& ig, int start) {
    std::vector<int> dist(ig.verts.size(), -1);
    std::deque<int> queue{start};
    dist[static_cast<std::size_t>(start)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : ig.adj[static_cast<std::size_t>(x)])
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

// 2-coloring by BFS; empty result means an odd cycle was found.
inline std::optional<std::vector<int>> two_color(const IndexedGraph& ig) {
    std::vector<int> color(ig.verts.size(), -1);
    for (std::size_t s = 0; s < ig.verts.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : ig.adj[static_cast<std::size_t>(x)]) {
                if (color[static_cast<std::size_t>(y)] < 0) {
                    color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
                    queue.push_back(y);
                } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify_cycle

struct Violation {
    enum class Kind { not_adjacent, repeat, wrong_length, missing_anchor, not_closed, subcube_edge_count };
    Kind kind;
    std::string detail;
};

inline std::string_view violation_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::not_adjacent: return "NotAdjacent";
        case Violation::Kind::repeat: return "Repeat";
        case Violation::Kind::wrong_length: return "WrongLength";
        case Violation::Kind::missing_anchor: return "MissingAnchor";
        case Violation::Kind::not_closed: return "NotClosed";
        case Violation::Kind::subcube_edge_count: return "SubcubeEdgeCount";
    }
    return "?";
}

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(Violation::Kind kind, std::string detail) {
        ok = false;
        violations.push_back(Violation{kind, std::move(detail)});
    }
};

// Checks a claimed cycle against the host graph: consecutive adjacency,
// distinctness, closedness, optional anchor membership, optional exact
// length, and optionally that every 4-bit-prefix subcube contains exactly
// `subcube_constraint` cycle edges. Nothing is thrown; failures are reported.
inline VerificationReport verify_cycle(const CubeGraph& g, const Walk& w,
                                       std::optional<Label> anchor = std::nullopt,
                                       std::optional<std::uint64_t> expected_len = std::nullopt,
                                       std::optional<int> subcube_constraint = std::nullopt) {
    VerificationReport report;
    if (!w.closed) report.add(Violation::Kind::not_closed, "walk is not marked closed");
    if (expected_len && w.vertices.size() != *expected_len)
        report.add(Violation::Kind::wrong_length,
                   "length " + std::to_string(w.vertices.size()) + ", expected " +
                       std::to_string(*expected_len));
    if (w.vertices.size() < 3)
        report.add(Violation::Kind::wrong_length, "a cycle needs at least 3 vertices");
    if (anchor && !w.contains(*anchor))
        report.add(Violation::Kind::missing_anchor, "anchor " + to_text(g.dim(), *anchor) + " absent");

    std::vector<Label> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            report.add(Violation::Kind::repeat, "vertex " + to_text(g.dim(), sorted[i]) + " repeats");

    std::size_t m = w.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        Label a = w.vertices[i], b = w.vertices[(i + 1) % m];
        if (i + 1 == m && !w.closed) break;
        bool edge = false;
        if (g.valid(a) && g.valid(b)) edge = adjacent(g, a, b);
        if (!edge)
            report.add(Violation::Kind::not_adjacent,
                       "position " + std::to_string(i) + ": (" + to_text(g.dim(), a) + ", " +
                           to_text(g.dim(), b) + ")");
    }

    if (subcube_constraint && g.n() >= 6) {
        std::unordered_map<unsigned, int> inner;
        for (std::size_t i = 0; i < m; ++i) {
            Label a = w.vertices[i], b = w.vertices[(i + 1) % m];
            if (!g.valid(a) || !g.valid(b)) continue;
            unsigned pa = prefix4(g.dim(), a), pb = prefix4(g.dim(), b);
            if (pa == pb) inner[pa]++;
        }
        auto nibble_text = [](unsigned p) {
            std::string s(4, '0');
            for (int i = 0; i < 4; ++i)
                if ((p >> (3 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
            return s;
        };
        auto check_prefix = [&](unsigned p) {
            int count = inner.count(p) ? inner.at(p) : 0;
            if (count != *subcube_constraint)
                report.add(Violation::Kind::subcube_edge_count,
                           "subcube " + nibble_text(p) + " has " + std::to_string(count) +
                               " inner edges, expected " + std::to_string(*subcube_constraint));
        };
        if (g.family() == CubeFamily::ssq) {
            for (unsigned p : kSsqGroupValues) check_prefix(p);
        } else {
            for (unsigned p = 0; p < 16; ++p) check_prefix(p);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// verify_automorphism

struct VerifyMode {
    bool exhaustive = true;
    int sample_count = 10000;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive_mode() { return VerifyMode{true, 0, 0}; }
    static VerifyMode sampled(int count, std::uint64_t seed = 0) {
        return VerifyMode{false, count, seed};
    }
};

// True iff the map is a bijection on V(g) that preserves adjacency on every
// checked pair. Exhaustive mode checks all pairs and requires |V| <= cap;
// sampled mode checks random edges (image must stay an edge) and random
// pairs (adjacency must agree both ways).
inline bool verify_automorphism(const CubeGraph& g, const Automorphism& aut, VerifyMode mode,
                                std::uint64_t exhaustive_cap = kExhaustiveVertexCap) {
    if (aut.family() != g.family() || aut.dim() != g.dim()) return false;
    if (mode.exhaustive) {
        if (g.vertex_count() > exhaustive_cap)
            throw_error(Errc::too_large, "graph too large for exhaustive automorphism check");
        std::vector<Label> verts = vertices(g);
        std::vector<Label> images;
        images.reserve(verts.size());
        for (Label u : verts) {
            Label fu = aut.apply(u);
            if (!g.valid(fu)) return false;
            images.push_back(fu);
        }
        std::vector<Label> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) return false;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(g, verts[i], verts[j]) != adjacent(g, images[i], images[j]))
                    return false;
        return true;
    }
    detail::Rng rng(mode.seed ^ 0x9e3779b97f4a7c15ull);
    for (int i = 0; i < mode.sample_count; ++i) {
        Edge e = detail::random_edge(g, rng);
        Label fu = aut.apply(e.u), fv = aut.apply(e.v);
        if (!g.valid(fu) || !g.valid(fv)) return false;
        if (!adjacent(g, fu, fv)) return false;
    }
    for (int i = 0; i < mode.sample_count; ++i) {
        Label u = detail::random_vertex(g, rng);
        Label v = detail::random_vertex(g, rng);
        Label fu = aut.apply(u), fv = aut.apply(v);
        if (!g.valid(fu) || !g.valid(fv)) return false;
        if (adjacent(g, u, v) != adjacent(g, fu, fv)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// find_cycle_dfs

namespace detail {

struct CycleSearch {
    const IndexedGraph& ig;
    int anchor;
    int want;  // cycle length
    bool bipartite;
    std::vector<int> dist_to_anchor;
    std::vector<char> visited;
    std::vector<int> path;

    CycleSearch(const IndexedGraph& ig_, int anchor_, int want_, bool bipartite_)
        : ig(ig_), anchor(anchor_), want(want_), bipartite(bipartite_),
          dist_to_anchor(bfs_distances(ig_, anchor_)), visited(ig_.verts.size(), 0) {}

    // all unvisited vertices reachable from `from` via unvisited vertices;
    // only a valid prune when the cycle must cover every vertex
    bool ham_feasible(int from) {
        std::vector<char> seen(ig.verts.size(), 0);
        std::deque<int> queue{from};
        seen[static_cast<std::size_t>(from)] = 1;
        std::size_t reached = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : ig.adj[static_cast<std::size_t>(x)]) {
                if (visited[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                queue.push_back(y);
            }
        }
        std::size_t unvisited = ig.verts.size() - path.size();
        if (reached < unvisited) return false;
        for (std::size_t w = 0; w < ig.verts.size(); ++w) {
            if (visited[w]) continue;
            int free_ends = 0;
            for (int y : ig.adj[w])
                if (!visited[static_cast<std::size_t>(y)] || y == from || y == anchor) ++free_ends;
            if (free_ends < 2) return false;
        }
        return true;
    }

    bool dfs(int cur) {
        int depth = static_cast<int>(path.size()) - 1;  // edges used so far
        int remaining = want - depth;
        if (remaining == 0) return cur == anchor;
        if (cur == anchor && depth > 0) return false;
        int d = dist_to_anchor[static_cast<std::size_t>(cur)];
        if (d < 0 || d > remaining) return false;
        if (bipartite && ((remaining - d) & 1)) return false;
        if (want == static_cast<int>(ig.verts.size()) && !ham_feasible(cur)) return false;
        for (int y : ig.adj[static_cast<std::size_t>(cur)]) {
            if (y == anchor) {
                if (remaining == 1 && static_cast<int>(path.size()) == want) return true;
                continue;
            }
            if (visited[static_cast<std::size_t>(y)]) continue;
            visited[static_cast<std::size_t>(y)] = 1;
            path.push_back(y);
            if (dfs(y)) return true;
            path.pop_back();
            visited[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    }
};

}  // namespace detail

// Exhaustive search for a simple cycle of length exactly l through u, with
// admissible pruning only; returning nullopt is a proof of non-existence.
inline std::optional<Walk> find_cycle_dfs(const CubeGraph& g, Label u, std::uint64_t l,
                                          std::uint64_t vertex_cap = kExhaustiveVertexCap) {
    if (g.vertex_count() > vertex_cap)
        throw_error(Errc::too_large, "graph too large for cycle search");
    g.require_valid(u);
    if (l < 3 || l > g.vertex_count()) return std::nullopt;
    detail::IndexedGraph ig(g);
    bool bip = detail::two_color(ig).has_value();
    detail::CycleSearch search(ig, ig.at(u), static_cast<int>(l), bip);
    search.visited[static_cast<std::size_t>(ig.at(u))] = 1;
    search.path.push_back(ig.at(u));
    if (!search.dfs(ig.at(u))) return std::nullopt;
    Walk w{{}, true};
    w.vertices.reserve(search.path.size());
    for (int i : search.path) w.vertices.push_back(ig.verts[static_cast<std::size_t>(i)]);
    return w;
}

// ---------------------------------------------------------------------------
// find_ham_path

namespace detail {

struct HamPathSearch {
    const IndexedGraph& ig;
    int target;
    std::vector<char> visited;
    std::vector<int> path;

    HamPathSearch(const IndexedGraph& ig_, int target_)
        : ig(ig_), target(target_), visited(ig_.verts.size(), 0) {}

    bool feasible(int cur) {
        // every unvisited vertex must stay reachable, and every unvisited
        // vertex except the target needs two usable ends
        std::vector<char> seen(ig.verts.size(), 0);
        std::deque<int> queue{cur};
        seen[static_cast<std::size_t>(cur)] = 1;
        std::size_t reached = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : ig.adj[static_cast<std::size_t>(x)]) {
                if (seen[static_cast<std::size_t>(y)] || visited[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                queue.push_back(y);
            }
        }
        if (reached < ig.verts.size() - path.size()) return false;
        for (std::size_t w = 0; w < ig.verts.size(); ++w) {
            if (visited[w] || static_cast<int>(w) == target) continue;
            int free_ends = 0;
            for (int y : ig.adj[w])
                if (!visited[static_cast<std::size_t>(y)] || y == cur) ++free_ends;
            if (free_ends < 2) return false;
        }
        return true;
    }

    bool dfs(int cur) {
        if (path.size() == ig.verts.size()) return cur == target;
        if (cur == target) return false;
        if (!feasible(cur)) return false;
        for (int y : ig.adj[static_cast<std::size_t>(cur)]) {
            if (visited[static_cast<std::size_t>(y)]) continue;
            if (y == target && path.size() + 1 != ig.verts.size()) continue;
            visited[static_cast<std::size_t>(y)] = 1;
            path.push_back(y);
            if (dfs(y)) return true;
            path.pop_back();
            visited[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    }
};

}  // namespace detail

// Backtracking Hamiltonian path search between arbitrary endpoints, intended
// for order-32/64 instances.
inline std::optional<Walk> find_ham_path(const CubeGraph& g, Label x, Label y,
                                         std::uint64_t vertex_cap = kHamPathVertexCap) {
    if (g.vertex_count() > vertex_cap)
        throw_error(Errc::too_large, "graph too large for Hamiltonian path search");
    g.require_valid(x);
    g.require_valid(y);
    if (x == y) return std::nullopt;
    detail::IndexedGraph ig(g);
    if (auto color = detail::two_color(ig)) {
        // class balance forces the endpoint classes of any Hamiltonian path
        std::size_t zeros = 0;
        for (int c : *color) zeros += static_cast<std::size_t>(c == 0);
        std::size_t ones = ig.verts.size() - zeros;
        int cx = (*color)[static_cast<std::size_t>(ig.at(x))];
        int cy = (*color)[static_cast<std::size_t>(ig.at(y))];
        std::size_t imbalance = zeros > ones ? zeros - ones : ones - zeros;
        if (imbalance > 1) return std::nullopt;
        if (imbalance == 0 && cx == cy) return std::nullopt;
        if (imbalance == 1) {
            int big = zeros > ones ? 0 : 1;
            if (cx != big || cy != big) return std::nullopt;
        }
    }
    detail::HamPathSearch search(ig, ig.at(y));
    search.visited[static_cast<std::size_t>(ig.at(x))] = 1;
    search.path.push_back(ig.at(x));
    if (!search.dfs(ig.at(x))) return std::nullopt;
    Walk w{{}, false};
    w.vertices.reserve(search.path.size());
    for (int i : search.path) w.vertices.push_back(ig.verts[static_cast<std::size_t>(i)]);
    return w;
}

// ---------------------------------------------------------------------------
// graph_report

struct GraphReport {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::optional<int> regular_degree;
    bool bipartite = false;
    bool connected = false;
    std::optional<int> girth;
    std::optional<int> diameter;
};

inline GraphReport graph_report(const CubeGraph& g,
                                std::uint64_t count_cap = kMaterializeVertexCap,
                                std::uint64_t metric_cap = kExhaustiveVertexCap) {
    if (g.vertex_count() > count_cap)
        throw_error(Errc::too_large, "graph too large for a full report");
    detail::IndexedGraph ig(g);
    GraphReport report;
    report.vertex_count = ig.verts.size();
    std::uint64_t degree_sum = 0;
    bool regular = true;
    std::size_t first_degree = ig.adj.empty() ? 0 : ig.adj[0].size();
    for (const auto& row : ig.adj) {
        degree_sum += row.size();
        regular = regular && row.size() == first_degree;
    }
    report.edge_count = degree_sum / 2;
    if (regular && !ig.adj.empty()) report.regular_degree = static_cast<int>(first_degree);
    report.bipartite = detail::two_color(ig).has_value();
    std::vector<int> dist = detail::bfs_distances(ig, 0);
    report.connected = std::find(dist.begin(), dist.end(), -1) == dist.end();
    if (report.vertex_count <= metric_cap) {
        // girth: over all BFS roots, the shortest cycle seen through a
        // non-tree edge; exact for unweighted graphs
        int best = -1;
        std::vector<int> parent(ig.verts.size());
        for (std::size_t s = 0; s < ig.verts.size(); ++s) {
            std::vector<int> d(ig.verts.size(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::deque<int> queue{static_cast<int>(s)};
            d[s] = 0;
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (int y : ig.adj[static_cast<std::size_t>(x)]) {
                    if (d[static_cast<std::size_t>(y)] < 0) {
                        d[static_cast<std::size_t>(y)] = d[static_cast<std::size_t>(x)] + 1;
                        parent[static_cast<std::size_t>(y)] = x;
                        queue.push_back(y);
                    } else if (y != parent[static_cast<std::size_t>(x)]) {
                        int cyc = d[static_cast<std::size_t>(x)] + d[static_cast<std::size_t>(y)] + 1;
                        if (best < 0 || cyc < best) best = cyc;
                    }
                }
            }
        }
        if (best > 0) report.girth = best;
        if (report.connected) {
            int diameter = 0;
            for (std::size_t s = 0; s < ig.verts.size(); ++s) {
                std::vector<int> d = detail::bfs_distances(ig, static_cast<int>(s));
                for (int x : d) diameter = std::max(diameter, x);
            }
            report.diameter = diameter;
        }
    }
    return report;
}

}  // namespace cubecycle
