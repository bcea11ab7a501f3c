#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecycle/assets.hpp"
#include "cubecycle/embedding.hpp"
#include "cubecycle/oracle.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

struct SweepFailure {
    std::string vertex;
    std::uint64_t length = 0;
    std::string reason;
};

struct SweepSummary {
    CubeFamily family = CubeFamily::ssq;
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t vertices_checked = 0;
    std::uint64_t lengths_checked = 0;
    std::uint64_t constructions = 0;
    std::uint64_t cross_checks = 0;
    std::vector<SweepFailure> failures;

    bool pass() const { return failures.empty(); }
};

struct SweepOptions {
    bool all_vertices = true;
    int sample_count = 16;
    bool cross_check = false;
    int cross_check_samples = 50;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<Label> select_vertices(const CubeGraph& g, const SweepOptions& options) {
    if (options.all_vertices ||
        static_cast<std::uint64_t>(options.sample_count) >= g.vertex_count())
        return vertices(g);
    Rng rng(options.seed * 0x9e3779b97f4a7c15ull + 1);
    std::vector<Label> picked;
    std::unordered_set<std::uint64_t> seen;
    while (static_cast<int>(picked.size()) < options.sample_count) {
        Label u = random_vertex(g, rng);
        if (seen.insert(u.bits).second) picked.push_back(u);
    }
    return picked;
}

inline std::string first_violation(const VerificationReport& rep) {
    if (rep.ok) return "";
    return std::string(violation_name(rep.violations.front().kind)) + ": " +
           rep.violations.front().detail;
}

}  // namespace detail

// Runs the cycle constructor for every selected vertex and every legal
// length, verifying each output; optionally cross-checks a sample of (u, l)
// pairs against the independent cycle search.
inline SweepSummary pancyclicity_sweep(const CubeGraph& g, const SweepOptions& options) {
    SweepSummary sum;
    sum.family = g.family();
    sum.n = g.n();
    sum.seed = options.seed;
    bool bip = g.family() == CubeFamily::bsq;
    std::uint64_t lo = bip ? 4 : 3;
    std::uint64_t hi = g.vertex_count();
    std::uint64_t step = bip ? 2 : 1;

    std::vector<Label> picked = detail::select_vertices(g, options);
    sum.vertices_checked = picked.size();
    sum.lengths_checked = (hi - lo) / step + 1;
    for (Label u : picked) {
        for (std::uint64_t l = lo; l <= hi; l += step) {
            ++sum.constructions;
            try {
                Walk w = bip ? bsq_bipancycle(g.dim(), u, l) : ssq_pancycle(g.dim(), u, l);
                VerificationReport rep = verify_cycle(g, w, u, l);
                if (!rep.ok)
                    sum.failures.push_back(
                        SweepFailure{to_text(g.dim(), u), l, detail::first_violation(rep)});
            } catch (const CubeError& err) {
                sum.failures.push_back(SweepFailure{to_text(g.dim(), u), l, err.what()});
            }
        }
    }

    if (options.cross_check && g.vertex_count() <= kExhaustiveVertexCap) {
        detail::Rng rng(options.seed * 0x9e3779b97f4a7c15ull + 2);
        for (int i = 0; i < options.cross_check_samples; ++i) {
            Label u = picked[static_cast<std::size_t>(rng.next(picked.size()))];
            std::uint64_t l = lo + step * rng.next((hi - lo) / step + 1);
            ++sum.cross_checks;
            std::optional<Walk> found = find_cycle_dfs(g, u, l);
            if (!found) {
                sum.failures.push_back(SweepFailure{to_text(g.dim(), u), l,
                                                    "independent search found no such cycle"});
                continue;
            }
            VerificationReport rep = verify_cycle(g, *found, u, l);
            if (!rep.ok)
                sum.failures.push_back(SweepFailure{to_text(g.dim(), u), l,
                                                    "search result failed verification: " +
                                                        detail::first_violation(rep)});
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// named check suites (shared by the CLI and the acceptance tests)

struct SuiteFailure {
    std::string subject;
    std::string reason;
};

struct SuiteSummary {
    std::string suite;
    CubeFamily family = CubeFamily::ssq;
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t checks = 0;
    std::vector<SuiteFailure> failures;
    // sweep suite extras
    std::uint64_t vertices_checked = 0;
    std::uint64_t lengths_checked = 0;
    // tables suite extras
    std::vector<std::string> repaired_rows;

    bool pass() const { return failures.empty(); }
};

namespace detail {

inline std::vector<Edge> pick_edges(const CubeGraph& g, bool all, int sample, std::uint64_t seed) {
    if (all) return materialize(g);
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 3);
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(sample));
    for (int i = 0; i < sample; ++i) out.push_back(random_edge(g, rng));
    return out;
}

inline SuiteSummary run_edge_cycle_suite(const CubeGraph& g, bool all, int sample,
                                         std::uint64_t seed, std::string name) {
    SuiteSummary sum;
    sum.suite = std::move(name);
    sum.family = g.family();
    sum.n = g.n();
    sum.seed = seed;
    bool is_ssq = g.family() == CubeFamily::ssq;
    std::uint64_t want = is_ssq ? 16 : 32;
    for (Edge e : pick_edges(g, all, sample, seed)) {
        ++sum.checks;
        std::string subject = to_text(g.dim(), e.u) + "," + to_text(g.dim(), e.v);
        try {
            Walk w = is_ssq ? ssq_edge_cycle16(g.dim(), e) : bsq_edge_cycle32(g.dim(), e);
            VerificationReport rep = verify_cycle(g, w, e.u, want, 1);
            if (!rep.ok)
                sum.failures.push_back(SuiteFailure{subject, first_violation(rep)});
            else if (!w.contains_edge(e.u, e.v))
                sum.failures.push_back(SuiteFailure{subject, "cycle does not contain the edge"});
        } catch (const CubeError& err) {
            sum.failures.push_back(SuiteFailure{subject, err.what()});
        }
    }
    return sum;
}

inline SuiteSummary run_ham_cycle_suite(const CubeGraph& g, bool all, int sample,
                                        std::uint64_t seed, std::string name) {
    SuiteSummary sum;
    sum.suite = std::move(name);
    sum.family = g.family();
    sum.n = g.n();
    sum.seed = seed;
    bool is_ssq = g.family() == CubeFamily::ssq;
    for (Edge e : pick_edges(g, all, sample, seed)) {
        ++sum.checks;
        std::string subject = to_text(g.dim(), e.u) + "," + to_text(g.dim(), e.v);
        try {
            Walk w = is_ssq ? ssq_ham_cycle_edge(g.dim(), e) : bsq_ham_cycle_edge(g.dim(), e);
            VerificationReport rep = verify_cycle(g, w, e.u, g.vertex_count());
            if (!rep.ok)
                sum.failures.push_back(SuiteFailure{subject, first_violation(rep)});
            else if (!w.contains_edge(e.u, e.v))
                sum.failures.push_back(SuiteFailure{subject, "cycle does not contain the edge"});
        } catch (const CubeError& err) {
            sum.failures.push_back(SuiteFailure{subject, err.what()});
        }
    }
    return sum;
}

}  // namespace detail

// Every curated table row either verifies as transcribed or was repaired by
// search; the repaired list is reported.
inline SuiteSummary run_tables_suite() {
    SuiteSummary sum;
    sum.suite = "tables";
    sum.n = 6;
    const AssetStore& store = default_assets();
    for (const AssetEntry& e : store.entries()) {
        if (e.kind != "table") continue;
        ++sum.checks;
        CubeGraph g(e.family, Dimension(e.n));
        VerificationReport rep =
            verify_cycle(g, e.walk, Label{0}, static_cast<std::uint64_t>(std::stoi(e.key)));
        if (!rep.ok)
            sum.failures.push_back(SuiteFailure{std::string(family_name(e.family)) + ":" + e.key,
                                                detail::first_violation(rep)});
        if (e.repaired)
            sum.repaired_rows.push_back(std::string(family_name(e.family)) + ":" + e.key);
    }
    return sum;
}

inline SuiteSummary run_edge_cycle16_suite(int n, int sample, std::uint64_t seed) {
    CubeGraph g = ssq(n);
    return detail::run_edge_cycle_suite(g, n == 6, sample, seed, "edgecycle16");
}

inline SuiteSummary run_edge_cycle32_suite(int n, int sample, std::uint64_t seed) {
    CubeGraph g = bsq(n);
    return detail::run_edge_cycle_suite(g, n == 6, sample, seed, "edgecycle32");
}

inline SuiteSummary run_bsq_ham_suite(int n, int sample, std::uint64_t seed) {
    CubeGraph g = bsq(n);
    return detail::run_ham_cycle_suite(g, n <= 6, sample, seed, "hamcycle");
}

inline SuiteSummary run_ssq_ham_suite(int n, int sample, std::uint64_t seed) {
    CubeGraph g = ssq(n);
    return detail::run_ham_cycle_suite(g, n == 6, sample, seed, "hamcycle");
}

// Hamiltonian paths between sampled vertex pairs of SSQ_6, adjacent or not.
inline SuiteSummary run_hamconn_suite(int pairs, std::uint64_t seed) {
    SuiteSummary sum;
    sum.suite = "hamconn";
    sum.family = CubeFamily::ssq;
    sum.n = 6;
    sum.seed = seed;
    CubeGraph g = ssq(6);
    std::vector<Label> verts = vertices(g);
    detail::Rng rng(seed * 0x9e3779b97f4a7c15ull + 4);
    for (int i = 0; i < pairs; ++i) {
        Label x = verts[static_cast<std::size_t>(rng.next(verts.size()))];
        Label y = verts[static_cast<std::size_t>(rng.next(verts.size()))];
        if (x == y) {
            --i;
            continue;
        }
        ++sum.checks;
        std::string subject = to_text(g.dim(), x) + "," + to_text(g.dim(), y);
        std::optional<Walk> path = find_ham_path(g, x, y);
        if (!path) {
            sum.failures.push_back(SuiteFailure{subject, "no Hamiltonian path found"});
            continue;
        }
        if (path->vertices.size() != g.vertex_count() || path->vertices.front() != x ||
            path->vertices.back() != y) {
            sum.failures.push_back(SuiteFailure{subject, "path malformed"});
            continue;
        }
        bool edges_ok = true;
        for (std::size_t j = 0; j + 1 < path->vertices.size(); ++j)
            edges_ok = edges_ok && adjacent(g, path->vertices[j], path->vertices[j + 1]);
        if (!edges_ok) sum.failures.push_back(SuiteFailure{subject, "path uses a non-edge"});
    }
    return sum;
}

inline SuiteSummary run_pancyclic_suite(int n, int sample, bool cross, std::uint64_t seed) {
    CubeGraph g = ssq(n);
    SweepOptions options;
    options.all_vertices = n == 6;
    options.sample_count = sample;
    options.cross_check = cross && g.vertex_count() <= kExhaustiveVertexCap;
    options.seed = seed;
    SweepSummary sweep = pancyclicity_sweep(g, options);
    SuiteSummary sum;
    sum.suite = "pancyclic";
    sum.family = CubeFamily::ssq;
    sum.n = n;
    sum.seed = seed;
    sum.checks = sweep.constructions + sweep.cross_checks;
    sum.vertices_checked = sweep.vertices_checked;
    sum.lengths_checked = sweep.lengths_checked;
    for (const SweepFailure& f : sweep.failures)
        sum.failures.push_back(SuiteFailure{f.vertex + " l=" + std::to_string(f.length), f.reason});
    return sum;
}

inline SuiteSummary run_bipancyclic_suite(int n, int sample, bool cross, std::uint64_t seed) {
    CubeGraph g = bsq(n);
    SweepOptions options;
    options.all_vertices = n == 6 || n == 2;
    options.sample_count = sample;
    options.cross_check = cross && g.vertex_count() <= kExhaustiveVertexCap;
    options.seed = seed;
    SweepSummary sweep = pancyclicity_sweep(g, options);
    SuiteSummary sum;
    sum.suite = "bipancyclic";
    sum.family = CubeFamily::bsq;
    sum.n = n;
    sum.seed = seed;
    sum.checks = sweep.constructions + sweep.cross_checks;
    sum.vertices_checked = sweep.vertices_checked;
    sum.lengths_checked = sweep.lengths_checked;
    for (const SweepFailure& f : sweep.failures)
        sum.failures.push_back(SuiteFailure{f.vertex + " l=" + std::to_string(f.length), f.reason});
    return sum;
}

// Translation maps to the all-zero vertex (every vertex at n = 6, sampled
// vertices at n = 10) plus a group swap where two groups exist.
inline SuiteSummary run_automorphisms_suite(CubeFamily family, int n, int sample_vertices,
                                            std::uint64_t seed) {
    SuiteSummary sum;
    sum.suite = "automorphisms";
    sum.family = family;
    sum.n = n;
    sum.seed = seed;
    CubeGraph g(family, Dimension(n));
    std::vector<Label> picked;
    if (n <= 6) {
        picked = vertices(g);
    } else {
        detail::Rng rng(seed * 0x9e3779b97f4a7c15ull + 5);
        for (int i = 0; i < sample_vertices; ++i) picked.push_back(detail::random_vertex(g, rng));
    }
    for (Label u : picked) {
        ++sum.checks;
        try {
            Automorphism tau = family == CubeFamily::ssq ? ssq_translation(g.dim(), u)
                                                         : bsq_translation(g.dim(), u);
            if (tau.apply(u) != Label{0})
                sum.failures.push_back(SuiteFailure{to_text(g.dim(), u), "image of u is not zero"});
            VerifyMode mode =
                n <= 6 ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(10000, seed ^ u.bits);
            if (!verify_automorphism(g, tau, mode))
                sum.failures.push_back(SuiteFailure{to_text(g.dim(), u), "verification failed"});
        } catch (const CubeError& err) {
            sum.failures.push_back(SuiteFailure{to_text(g.dim(), u), err.what()});
        }
    }
    if (g.groups() >= 2) {
        ++sum.checks;
        try {
            Automorphism swap = group_swap(family, g.dim(), 1, 2);
            VerifyMode mode =
                n <= 6 ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(10000, seed + 17);
            if (!verify_automorphism(g, swap, mode))
                sum.failures.push_back(SuiteFailure{"group_swap(1,2)", "verification failed"});
        } catch (const CubeError& err) {
            sum.failures.push_back(SuiteFailure{"group_swap(1,2)", err.what()});
        }
    }
    return sum;
}

}  // namespace cubecycle
