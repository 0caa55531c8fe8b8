#pragma once

#include <json.hpp>

#include "kboot/chain.hpp"
#include "kboot/percolation.hpp"
#include "kboot/search.hpp"

namespace kboot {

inline constexpr int kSchemaVersion = 1;

// (r-2)/(C(r,2)-2), the exponent constant of the probabilistic bound;
// surfaced in reports for documentation only.
double alpha_r(int r);

// { schema_version, n, r, time, percolated, truncated, final_edges,
//   edges_per_step, trace } with stable field order.
nlohmann::ordered_json run_report(int n, int r, const RunOutput& out);

nlohmann::ordered_json search_report(const SearchResult& res);

nlohmann::ordered_json chain_report(const Chain& chain, const std::string& family);

}  // namespace kboot
