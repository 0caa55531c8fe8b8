#include "kboot/report.hpp"

namespace kboot {

double alpha_r(int r) { return double(r - 2) / (double(r) * (r - 1) / 2 - 2); }

nlohmann::ordered_json run_report(int n, int r, const RunOutput& out) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    j["r"] = r;
    j["time"] = out.result.stabilization_time;
    j["percolated"] = out.result.percolated;
    j["truncated"] = out.result.truncated;
    j["final_edges"] = out.result.final_edges;
    auto& eps = j["edges_per_step"] = nlohmann::ordered_json::array();
    for (const auto& step : out.trace.steps) eps.push_back(step.size());
    auto& tr = j["trace"] = nlohmann::ordered_json::array();
    for (const auto& step : out.trace.steps) {
        nlohmann::ordered_json s = nlohmann::ordered_json::array();
        for (auto e : step) s.push_back({e.u, e.v});
        tr.push_back(std::move(s));
    }
    return j;
}

nlohmann::ordered_json search_report(const SearchResult& res) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = res.n;
    j["r"] = res.r;
    j["max_time"] = res.max_time;
    j["exhaustive"] = res.exhaustive;
    j["graphs_scanned"] = res.graphs_scanned;
    j["dedup_classes"] = res.dedup_classes;
    j["witness_graphs"] = res.witness_graphs;
    return j;
}

nlohmann::ordered_json chain_report(const Chain& chain, const std::string& family) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family;
    j["r"] = chain.r;
    j["n"] = chain.n;
    j["chain_length"] = chain.length();
    j["alpha_r"] = alpha_r(chain.r);
    // documentation constants: the deterministic construction scales as
    // n^(3/2), the probabilistic bound as n^(2 - alpha_r)
    j["reference_exponent_deterministic"] = 1.5;
    j["reference_exponent_probabilistic"] = 2.0 - alpha_r(chain.r);
    return j;
}

}  // namespace kboot
