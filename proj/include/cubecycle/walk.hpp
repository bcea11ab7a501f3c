#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cubecycle/core.hpp"

namespace cubecycle {

// An ordered vertex sequence, open (path) or closed (cycle). A closed walk
// stores each vertex once; the wrap-around edge is implicit.
struct Walk {
    std::vector<Label> vertices;
    bool closed = false;

    std::size_t size() const { return vertices.size(); }

    // number of edges: |V| for a cycle, |V|-1 for a path
    std::size_t length() const {
        if (vertices.empty()) return 0;
        return closed ? vertices.size() : vertices.size() - 1;
    }

    bool contains(Label u) const {
        return std::find(vertices.begin(), vertices.end(), u) != vertices.end();
    }

    // index of the edge (u,v) or (v,u) as consecutive entries, -1 if absent
    int find_edge(Label u, Label v) const {
        std::size_t m = vertices.size();
        if (m < 2) return -1;
        std::size_t last = closed ? m : m - 1;
        for (std::size_t i = 0; i < last; ++i) {
            Label a = vertices[i], b = vertices[(i + 1) % m];
            if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(i);
        }
        return -1;
    }

    bool contains_edge(Label u, Label v) const { return find_edge(u, v) >= 0; }
};

inline Walk make_cycle(std::vector<Label> vs) { return Walk{std::move(vs), true}; }
inline Walk make_path(std::vector<Label> vs) { return Walk{std::move(vs), false}; }

// Rotates a closed walk so that `anchor` comes first; orientation unchanged.
inline Walk rotated_to(const Walk& w, Label anchor) {
    if (!w.closed) throw_error(Errc::bad_argument, "can only rotate a closed walk");
    auto it = std::find(w.vertices.begin(), w.vertices.end(), anchor);
    if (it == w.vertices.end())
        throw_error(Errc::bad_argument, "anchor not on walk");
    Walk out{{}, true};
    out.vertices.reserve(w.vertices.size());
    out.vertices.insert(out.vertices.end(), it, w.vertices.end());
    out.vertices.insert(out.vertices.end(), w.vertices.begin(), it);
    return out;
}

inline void write_walk_lines(std::ostream& os, Dimension dim, const Walk& w) {
    for (Label u : w.vertices) os << to_text(dim, u) << '\n';
}

inline std::vector<std::string> walk_texts(Dimension dim, const Walk& w) {
    std::vector<std::string> out;
    out.reserve(w.vertices.size());
    for (Label u : w.vertices) out.push_back(to_text(dim, u));
    return out;
}

}  // namespace cubecycle
