// Command-line front end: topology generation, cycle construction,
// verification suites, and asset regeneration.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource cap,
// 4 domain error, 5 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubecycle/cubecycle.hpp"
#include "cubecycle/json_io.hpp"

namespace {

using namespace cubecycle;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitDomain = 4;
constexpr int kExitInternal = 5;

int exit_code_for(const CubeError& err) {
    switch (err.code()) {
        case Errc::too_large:
            return kExitResourceCap;
        case Errc::wrong_length:
        case Errc::invalid_ssq_group:
        case Errc::invalid_label:
        case Errc::not_an_edge:
        case Errc::dimension_too_small:
        case Errc::length_out_of_range:
        case Errc::odd_length:
        case Errc::index_out_of_range:
        case Errc::edge_not_shared:
        case Errc::overlap_beyond_edge:
            return kExitDomain;
        case Errc::bad_argument:
            return kExitUsage;
        default:
            return kExitInternal;
    }
}

Dimension checked_dimension(int n) {
    if (n < 2 || n % 4 != 2) {
        std::cerr << "error: n must be ≡ 2 (mod 4)\n";
        std::exit(kExitUsage);
    }
    return Dimension(n);
}

CubeGraph make_graph(const std::string& family, int n) {
    return CubeGraph(parse_family(family), checked_dimension(n));
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExitUsage);
    }
    return file;
}

void print_walk(const CubeGraph& g, const Walk& w, bool as_json) {
    if (as_json)
        std::cout << walk_to_json(g, w).dump(2) << "\n";
    else
        write_walk_lines(std::cout, g.dim(), w);
}

int verify_or_internal(const CubeGraph& g, const Walk& w, std::optional<Label> anchor,
                       std::optional<std::uint64_t> len, std::optional<int> constraint) {
    VerificationReport rep = verify_cycle(g, w, anchor, len, constraint);
    if (rep.ok) return 0;
    std::cerr << "internal verification failure:";
    for (const Violation& v : rep.violations)
        std::cerr << " [" << violation_name(v.kind) << "] " << v.detail;
    std::cerr << "\n";
    return kExitInternal;
}

int cmd_gen(const std::string& family, int n, const std::string& format, const std::string& out) {
    CubeGraph g = make_graph(family, n);
    std::vector<Edge> edges = materialize(g);
    std::ofstream file;
    std::ostream& os = open_out(out, file);
    if (format == "edgelist") {
        write_edge_list(os, g, edges);
    } else if (format == "dot") {
        write_dot(os, g, edges);
    } else {
        nlohmann::json j;
        j["family"] = std::string(family_name(g.family()));
        j["n"] = g.n();
        j["vertex_count"] = g.vertex_count();
        j["edge_count"] = edges.size();
        nlohmann::json je = nlohmann::json::array();
        for (const Edge& e : edges)
            je.push_back({to_text(g.dim(), e.u), to_text(g.dim(), e.v)});
        j["edges"] = std::move(je);
        os << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_info(const std::string& family, int n, bool as_json) {
    CubeGraph g = make_graph(family, n);
    GraphReport r = graph_report(g);
    if (as_json) {
        std::cout << report_to_json(g, r).dump(2) << "\n";
        return 0;
    }
    std::cout << family_name(g.family()) << "_" << g.n() << ": " << r.vertex_count << " vertices, "
              << r.edge_count << " edges";
    if (r.regular_degree) std::cout << ", " << *r.regular_degree << "-regular";
    std::cout << (r.bipartite ? ", bipartite" : ", non-bipartite")
              << (r.connected ? ", connected" : ", disconnected");
    if (r.girth) std::cout << ", girth " << *r.girth;
    if (r.diameter) std::cout << ", diameter " << *r.diameter;
    std::cout << "\n";
    return 0;
}

int cmd_cycle(const std::string& family, int n, const std::string& vertex, std::uint64_t length,
              bool verify, bool as_json) {
    CubeGraph g = make_graph(family, n);
    Label u = validate_label(g.family(), g.dim(), vertex);
    Walk w = g.family() == CubeFamily::ssq ? ssq_pancycle(g.dim(), u, length)
                                           : bsq_bipancycle(g.dim(), u, length);
    print_walk(g, w, as_json);
    if (verify) return verify_or_internal(g, w, u, length, std::nullopt);
    return 0;
}

int cmd_hamcycle(const std::string& family, int n, const std::string& ut, const std::string& vt,
                 bool verify, bool as_json) {
    CubeGraph g = make_graph(family, n);
    Edge e{validate_label(g.family(), g.dim(), ut), validate_label(g.family(), g.dim(), vt)};
    Walk w = g.family() == CubeFamily::ssq ? ssq_ham_cycle_edge(g.dim(), e)
                                           : bsq_ham_cycle_edge(g.dim(), e);
    print_walk(g, w, as_json);
    if (verify) return verify_or_internal(g, w, e.u, g.vertex_count(), std::nullopt);
    return 0;
}

int cmd_edgecycle(const std::string& family, int n, const std::string& ut, const std::string& vt,
                  bool verify, bool as_json) {
    CubeGraph g = make_graph(family, n);
    Edge e{validate_label(g.family(), g.dim(), ut), validate_label(g.family(), g.dim(), vt)};
    Walk w = g.family() == CubeFamily::ssq ? ssq_edge_cycle16(g.dim(), e)
                                           : bsq_edge_cycle32(g.dim(), e);
    print_walk(g, w, as_json);
    std::uint64_t want = g.family() == CubeFamily::ssq ? 16 : 32;
    if (verify) return verify_or_internal(g, w, e.u, want, 1);
    return 0;
}

int cmd_translate(const std::string& family, int n, const std::string& vertex,
                  const std::string& label, bool inverse) {
    CubeGraph g = make_graph(family, n);
    Label u = validate_label(g.family(), g.dim(), vertex);
    Automorphism tau = g.family() == CubeFamily::ssq ? ssq_translation(g.dim(), u)
                                                     : bsq_translation(g.dim(), u);
    if (inverse) tau = tau.inverse();
    Label x = validate_label(g.family(), g.dim(), label);
    std::cout << to_text(g.dim(), tau.apply(x)) << "\n";
    return 0;
}

int cmd_check(const std::string& suite, int n, int sample, std::uint64_t seed) {
    checked_dimension(n);
    nlohmann::json out;
    bool pass = false;
    if (suite == "tables") {
        SuiteSummary s = run_tables_suite();
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "lemma4") {
        SuiteSummary s = run_edge_cycle16_suite(n, sample > 0 ? sample : 500, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "lemma7") {
        SuiteSummary s = run_edge_cycle32_suite(n, sample > 0 ? sample : 500, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "lemma8") {
        SuiteSummary s = run_bsq_ham_suite(n, sample > 0 ? sample : 100, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "hamconn") {
        SuiteSummary s = run_hamconn_suite(sample > 0 ? sample : 100, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "pancyclic") {
        SuiteSummary s = run_pancyclic_suite(n, sample > 0 ? sample : 16, n == 6, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "bipancyclic") {
        SuiteSummary s = run_bipancyclic_suite(n, sample > 0 ? sample : 16, n == 6, seed);
        out = suite_to_json(s);
        pass = s.pass();
    } else if (suite == "automorphisms") {
        SuiteSummary a = run_automorphisms_suite(CubeFamily::ssq, n, sample > 0 ? sample : 8, seed);
        SuiteSummary b = run_automorphisms_suite(CubeFamily::bsq, n, sample > 0 ? sample : 8, seed);
        out["suite"] = "automorphisms";
        out["n"] = n;
        out["seed"] = seed;
        out["ssq"] = suite_to_json(a);
        out["bsq"] = suite_to_json(b);
        pass = a.pass() && b.pass();
        out["pass"] = pass;
    } else {
        std::cerr << "error: unknown suite " << suite << "\n";
        return kExitUsage;
    }
    out["suite"] = suite;  // echo the requested name for CI
    std::cout << out.dump(2) << "\n";
    if (!pass) {
        std::cerr << "check failed: first counterexample above in the failures list\n";
        return kExitCheckFailure;
    }
    return 0;
}

int cmd_regen_assets(const std::string& out_dir, bool inject_fault) {
    AssetBuildOptions options;
    options.inject_search_fault = inject_fault;
    AssetStore store;
    try {
        store = AssetStore::build(options);
    } catch (const CubeError& err) {
        std::cerr << "asset regeneration failed: " << err.what() << "\n";
        return kExitCheckFailure;
    }
    std::string path = out_dir + "/cubecycle_assets.json";
    store.save(path);
    std::cerr << "wrote " << path << " (" << store.entries().size() << " entries";
    auto repaired = store.repaired_entries();
    if (!repaired.empty()) {
        std::cerr << "; repaired:";
        for (const AssetEntry* e : repaired)
            std::cerr << " " << family_name(e->family) << ":" << e->key;
    }
    std::cerr << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplified/balanced shuffle-cube topologies and cycle embeddings"};
    app.require_subcommand(1);

    std::string family = "ssq", format = "edgelist", out, vertex, label_u, label_v, suite;
    std::string regen_out = "assets";
    int n = 6, sample = -1;
    std::uint64_t length = 0, seed = 0;
    bool verify = false, as_json = false, inverse = false, inject_fault = false;

    auto add_family_n = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "ssq or bsq")->check(CLI::IsMember({"ssq", "bsq"}));
        cmd->add_option("--n", n, "label bits; n % 4 == 2")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "materialize a topology to a file format");
    add_family_n(gen);
    gen->add_option("--format", format, "edgelist, dot, or json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    gen->add_option("--out", out, "output path (default stdout)");

    CLI::App* info = app.add_subcommand("info", "structural report: counts, degree, girth, diameter");
    add_family_n(info);
    info->add_flag("--json", as_json, "emit JSON");

    CLI::App* cycle = app.add_subcommand("cycle", "cycle of a given length through a vertex");
    add_family_n(cycle);
    cycle->add_option("--vertex", vertex, "anchor label, text form")->required();
    cycle->add_option("--length", length, "cycle length")->required();
    cycle->add_flag("--verify", verify, "re-verify the output before exiting");
    cycle->add_flag("--json", as_json, "emit JSON");

    CLI::App* ham = app.add_subcommand("hamcycle", "Hamiltonian cycle through an edge");
    add_family_n(ham);
    ham->add_option("--u", label_u, "first endpoint")->required();
    ham->add_option("--v", label_v, "second endpoint")->required();
    ham->add_flag("--verify", verify, "re-verify the output before exiting");
    ham->add_flag("--json", as_json, "emit JSON");

    CLI::App* ring = app.add_subcommand("edgecycle",
                                        "16-/32-cycle through an edge, one edge per subcube");
    add_family_n(ring);
    ring->add_option("--u", label_u, "first endpoint")->required();
    ring->add_option("--v", label_v, "second endpoint")->required();
    ring->add_flag("--verify", verify, "re-verify the output before exiting");
    ring->add_flag("--json", as_json, "emit JSON");

    CLI::App* translate = app.add_subcommand("translate",
                                             "apply the translation sending --vertex to zero");
    add_family_n(translate);
    translate->add_option("--vertex", vertex, "vertex mapped to the all-zero label")->required();
    translate->add_option("--label", label_u, "label to map")->required();
    translate->add_flag("--inverse", inverse, "apply the inverse translation");

    CLI::App* check = app.add_subcommand("check", "run a verification suite, print a JSON summary");
    check->add_option("--suite", suite,
                      "tables|lemma4|lemma7|lemma8|hamconn|pancyclic|bipancyclic|automorphisms")
        ->required();
    check->add_option("--n", n, "label bits; n % 4 == 2");
    check->add_option("--sample", sample, "sample size where the suite samples");
    check->add_option("--seed", seed, "seed for sampled checks");

    CLI::App* regen = app.add_subcommand("regen-assets", "rebuild the cycle asset file");
    regen->add_option("--out", regen_out, "output directory");
    regen->add_flag("--inject-fault", inject_fault, "test hook: make every search fail")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, n, format, out);
        if (info->parsed()) return cmd_info(family, n, as_json);
        if (cycle->parsed()) return cmd_cycle(family, n, vertex, length, verify, as_json);
        if (ham->parsed()) return cmd_hamcycle(family, n, label_u, label_v, verify, as_json);
        if (ring->parsed()) return cmd_edgecycle(family, n, label_u, label_v, verify, as_json);
        if (translate->parsed()) return cmd_translate(family, n, vertex, label_u, inverse);
        if (check->parsed()) return cmd_check(suite, n, sample, seed);
        if (regen->parsed()) return cmd_regen_assets(regen_out, inject_fault);
    } catch (const CubeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
