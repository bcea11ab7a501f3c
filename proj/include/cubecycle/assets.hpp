#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubecycle/base_cycle_data.hpp"
#include "cubecycle/core.hpp"
#include "cubecycle/oracle.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

// One stored cycle: either a curated table row (kind "table", key = length)
// or a searched 16-/32-cycle through a prefix-group edge of the order-6 graph
// (kind "cycle16"/"cycle32", key = the prefix delta nibble).
struct AssetEntry {
    CubeFamily family = CubeFamily::ssq;
    int n = 6;
    std::string kind;
    std::string key;
    bool repaired = false;
    Walk walk;
};

struct AssetBuildOptions {
    // Test hook: pretend every repair/prefix search came up empty, so the
    // failure path of asset regeneration can be exercised.
    bool inject_search_fault = false;
};

namespace detail {

// Search for a cycle of length `want` through the cross edge (anchor,
// second) with exactly one cycle edge inside each 4-bit-prefix subcube.
//
// One inner edge per subcube over 2 * (#subcubes) vertices forces each
// subcube's two cycle vertices to be consecutive, so edge types strictly
// alternate: even-indexed edges cross subcubes, odd-indexed edges stay
// inside, and the wrap-around edge is the anchor subcube's inner edge.
// The search enumerates exactly the walks of that shape, which makes a
// nullopt authoritative.
struct ConstrainedCycleSearch {
    const IndexedGraph& ig;
    int anchor;
    int want;
    unsigned anchor_prefix;
    std::vector<int> prefix_of;
    std::array<int, 16> vcount{};
    std::vector<char> visited;
    std::vector<int> path;

    ConstrainedCycleSearch(const IndexedGraph& ig_, const CubeGraph& g, int anchor_, int want_)
        : ig(ig_), anchor(anchor_), want(want_), visited(ig_.verts.size(), 0) {
        prefix_of.reserve(ig.verts.size());
        for (Label u : ig.verts) prefix_of.push_back(static_cast<int>(prefix4(g.dim(), u)));
        anchor_prefix = static_cast<unsigned>(prefix_of[static_cast<std::size_t>(anchor)]);
    }

    bool dfs(int cur) {
        int pos = static_cast<int>(path.size());
        if (pos == want) {
            unsigned pc = static_cast<unsigned>(prefix_of[static_cast<std::size_t>(cur)]);
            if (pc != anchor_prefix) return false;
            for (int y : ig.adj[static_cast<std::size_t>(cur)])
                if (y == anchor) return true;
            return false;
        }
        bool cross = pos % 2 == 1;  // edge (pos-1 -> pos) crosses subcubes
        unsigned pc = static_cast<unsigned>(prefix_of[static_cast<std::size_t>(cur)]);
        for (int y : ig.adj[static_cast<std::size_t>(cur)]) {
            if (visited[static_cast<std::size_t>(y)]) continue;
            unsigned py = static_cast<unsigned>(prefix_of[static_cast<std::size_t>(y)]);
            if (cross) {
                if (py == pc) continue;
                if (py == anchor_prefix) {
                    if (pos != want - 1) continue;  // only the final vertex returns home
                } else if (vcount[py] != 0) {
                    continue;
                }
            } else {
                if (py != pc) continue;
            }
            visited[static_cast<std::size_t>(y)] = 1;
            path.push_back(y);
            ++vcount[py];
            if (dfs(y)) return true;
            --vcount[py];
            path.pop_back();
            visited[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    }
};

inline std::optional<Walk> find_prefix_edge_cycle(const CubeGraph& g, Edge e, int want) {
    if (prefix4(g.dim(), e.u) == prefix4(g.dim(), e.v))
        throw_error(Errc::bad_argument, "constrained search expects a cross edge");
    IndexedGraph ig(g);
    ConstrainedCycleSearch search(ig, g, ig.at(e.u), want);
    int second = ig.at(e.v);
    search.visited[static_cast<std::size_t>(search.anchor)] = 1;
    search.path.push_back(search.anchor);
    ++search.vcount[static_cast<std::size_t>(search.anchor_prefix)];
    search.visited[static_cast<std::size_t>(second)] = 1;
    search.path.push_back(second);
    ++search.vcount[static_cast<std::size_t>(search.prefix_of[static_cast<std::size_t>(second)])];
    if (!search.dfs(second)) return std::nullopt;
    Walk w{{}, true};
    for (int i : search.path) w.vertices.push_back(ig.verts[static_cast<std::size_t>(i)]);
    return w;
}

inline std::vector<std::string> split_tokens(std::string_view row) {
    std::vector<std::string> out;
    std::istringstream in{std::string(row)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

// Validated (and where necessary repaired) base cycles plus the searched
// prefix-edge cycles of the order-6 graphs.
class AssetStore {
public:
    static AssetStore build(const AssetBuildOptions& options = {}) {
        AssetStore store;
        store.build_tables(CubeFamily::ssq, options);
        store.build_tables(CubeFamily::bsq, options);
        store.build_prefix_cycles(CubeFamily::ssq, options);
        store.build_prefix_cycles(CubeFamily::bsq, options);
        return store;
    }

    const std::vector<AssetEntry>& entries() const { return entries_; }

    const AssetEntry& base_cycle(CubeFamily family, int length) const {
        auto it = base_.find({family, length});
        if (it == base_.end())
            throw_error(Errc::length_out_of_range,
                        "no stored cycle of length " + std::to_string(length));
        return entries_[it->second];
    }

    bool has_base_cycle(CubeFamily family, int length) const {
        return base_.count({family, length}) > 0;
    }

    // cycle through the order-6 prefix edge (000000, delta<<2)
    const AssetEntry& prefix_cycle(CubeFamily family, unsigned delta) const {
        auto it = prefix_.find({family, delta});
        if (it == prefix_.end())
            throw_error(Errc::not_an_edge, "no stored prefix-edge cycle for this delta");
        return entries_[it->second];
    }

    std::vector<const AssetEntry*> repaired_entries() const {
        std::vector<const AssetEntry*> out;
        for (const AssetEntry& e : entries_)
            if (e.repaired) out.push_back(&e);
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json entries = nlohmann::json::array();
        for (const AssetEntry& e : entries_) {
            nlohmann::json je;
            je["family"] = std::string(family_name(e.family));
            je["n"] = e.n;
            je["kind"] = e.kind;
            je["key"] = e.key;
            je["repaired"] = e.repaired;
            je["vertices"] = walk_texts(Dimension(e.n), e.walk);
            entries.push_back(std::move(je));
        }
        nlohmann::json doc;
        doc["entries"] = std::move(entries);
        return doc;
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw_error(Errc::bad_argument, "cannot write " + path);
        out << to_json().dump(2) << '\n';
    }

    static AssetStore load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw_error(Errc::bad_argument, "cannot read " + path);
        nlohmann::json doc = nlohmann::json::parse(in);
        AssetStore store;
        for (const nlohmann::json& je : doc.at("entries")) {
            AssetEntry e;
            e.family = parse_family(je.at("family").get<std::string>());
            e.n = je.at("n").get<int>();
            e.kind = je.at("kind").get<std::string>();
            e.key = je.at("key").get<std::string>();
            e.repaired = je.at("repaired").get<bool>();
            Dimension dim(e.n);
            for (const nlohmann::json& v : je.at("vertices"))
                e.walk.vertices.push_back(parse_label(dim, v.get<std::string>()));
            e.walk.closed = true;
            store.insert(std::move(e));
        }
        store.validate_all();
        return store;
    }

    void validate_all() const {
        for (const AssetEntry& e : entries_) {
            CubeGraph g(e.family, Dimension(e.n));
            std::optional<int> constraint;
            if (e.kind != "table") constraint = 1;
            VerificationReport rep = verify_cycle(g, e.walk, Label{0},
                                                  e.walk.vertices.size(), constraint);
            if (!rep.ok)
                throw_error(Errc::bad_argument,
                            "stored " + e.kind + " entry " + e.key + " fails verification: " +
                                rep.violations.front().detail);
        }
    }

private:
    void insert(AssetEntry e) {
        entries_.push_back(std::move(e));
        const AssetEntry& stored = entries_.back();
        int idx = static_cast<int>(entries_.size()) - 1;
        if (stored.kind == "table") {
            base_[{stored.family, std::stoi(stored.key)}] = idx;
        } else {
            unsigned delta = static_cast<unsigned>(std::stoul(stored.key, nullptr, 2));
            prefix_[{stored.family, delta}] = idx;
        }
    }

    void build_tables(CubeFamily family, const AssetBuildOptions& options) {
        CubeGraph g(family, Dimension(6));
        auto rows = family == CubeFamily::ssq
                        ? std::pair(std::begin(detail::kSsq6CycleRows), std::end(detail::kSsq6CycleRows))
                        : std::pair(std::begin(detail::kBsq6CycleRows), std::end(detail::kBsq6CycleRows));
        for (auto it = rows.first; it != rows.second; ++it) {
            Walk w{{}, true};
            for (const std::string& tok : detail::split_tokens(it->vertices))
                w.vertices.push_back(parse_label(g.dim(), tok));
            AssetEntry e;
            e.family = family;
            e.kind = "table";
            e.key = std::to_string(it->length);
            VerificationReport rep =
                verify_cycle(g, w, Label{0}, static_cast<std::uint64_t>(it->length));
            if (rep.ok) {
                e.walk = std::move(w);
            } else {
                std::optional<Walk> found;
                if (!options.inject_search_fault)
                    found = find_cycle_dfs(g, Label{0}, static_cast<std::uint64_t>(it->length));
                if (!found)
                    throw_error(Errc::search_failed,
                                "no replacement cycle of length " + e.key + " found in " +
                                    std::string(family_name(family)) + "_6");
                e.walk = std::move(*found);
                e.repaired = true;
            }
            insert(std::move(e));
        }
    }

    void build_prefix_cycles(CubeFamily family, const AssetBuildOptions& options) {
        CubeGraph g(family, Dimension(6));
        int want = family == CubeFamily::ssq ? 16 : 32;
        std::vector<unsigned> deltas;
        if (family == CubeFamily::ssq)
            deltas.assign(kV00.begin(), kV00.end());
        else
            deltas = {0b0100u, 0b0101u, 0b1100u, 0b1101u};
        std::sort(deltas.begin(), deltas.end());
        for (unsigned d : deltas) {
            Edge e{Label{0}, Label{static_cast<std::uint64_t>(d) << 2}};
            std::optional<Walk> found;
            if (!options.inject_search_fault) found = detail::find_prefix_edge_cycle(g, e, want);
            if (!found)
                throw_error(Errc::search_failed,
                            "no constrained " + std::to_string(want) + "-cycle found through a " +
                                std::string(family_name(family)) + "_6 prefix edge");
            AssetEntry entry;
            entry.family = family;
            entry.kind = family == CubeFamily::ssq ? "cycle16" : "cycle32";
            std::string key(4, '0');
            for (int i = 0; i < 4; ++i)
                if ((d >> (3 - i)) & 1u) key[static_cast<std::size_t>(i)] = '1';
            entry.key = key;
            entry.walk = std::move(*found);
            insert(std::move(entry));
        }
    }

    std::vector<AssetEntry> entries_;
    std::map<std::pair<CubeFamily, int>, int> base_;
    std::map<std::pair<CubeFamily, unsigned>, int> prefix_;
};

// Process-wide store: built on first use, or loaded from CUBECYCLE_ASSETS
// when that variable points at a regenerated asset file.
inline const AssetStore& default_assets() {
    static const AssetStore store = [] {
        if (const char* path = std::getenv("CUBECYCLE_ASSETS")) return AssetStore::load(path);
        return AssetStore::build();
    }();
    return store;
}

}  // namespace cubecycle
