#pragma once

#include <json.hpp>

#include "cubecycle/oracle.hpp"
#include "cubecycle/sweeps.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

// walks travel as plain JSON arrays of label strings
inline nlohmann::json walk_to_json(const CubeGraph& g, const Walk& w) {
    return nlohmann::json(walk_texts(g.dim(), w));
}

inline nlohmann::json report_to_json(const CubeGraph& g, const GraphReport& r) {
    nlohmann::json j;
    j["family"] = std::string(family_name(g.family()));
    j["n"] = g.n();
    j["vertex_count"] = r.vertex_count;
    j["edge_count"] = r.edge_count;
    j["regular_degree"] = r.regular_degree ? nlohmann::json(*r.regular_degree) : nlohmann::json();
    j["bipartite"] = r.bipartite;
    j["connected"] = r.connected;
    j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json();
    j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json();
    return j;
}

inline nlohmann::json suite_to_json(const SuiteSummary& s) {
    nlohmann::json j;
    j["suite"] = s.suite;
    j["family"] = std::string(family_name(s.family));
    j["n"] = s.n;
    j["seed"] = s.seed;
    j["checks"] = s.checks;
    nlohmann::json failures = nlohmann::json::array();
    for (const SuiteFailure& f : s.failures)
        failures.push_back({{"subject", f.subject}, {"reason", f.reason}});
    j["failures"] = std::move(failures);
    if (s.vertices_checked) j["vertices_checked"] = s.vertices_checked;
    if (s.lengths_checked) j["lengths_checked"] = s.lengths_checked;
    if (s.suite == "tables") j["repaired"] = s.repaired_rows;
    j["pass"] = s.pass();
    return j;
}

}  // namespace cubecycle
