#include "kboot/chain.hpp"

#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

namespace kboot {

Graph chain_union_graph(const Chain& chain) {
    Graph g(chain.n);
    for (const auto& c : chain.cliques)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
    return g;
}

ChainGraph build_chain_graph(const Chain& chain) {
    if (chain.shared_edges.size() != chain.cliques.size() + 1)
        throw std::invalid_argument("chain: need T+1 shared edges for T cliques");
    Graph g = chain_union_graph(chain);
    std::vector<EdgeId> withheld(chain.shared_edges.begin() + 1, chain.shared_edges.end());
    for (auto e : withheld) {
        if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("chain: e_i not inside its cliques");
        g.remove_edge(e.u, e.v);
    }
    auto e0 = chain.shared_edges.front();
    if (!g.has_edge(e0.u, e0.v)) throw std::invalid_argument("chain: e_0 missing from graph");
    return ChainGraph{std::move(g), chain, std::move(withheld)};
}

nlohmann::ordered_json chain_json(const Chain& chain) {
    nlohmann::ordered_json j;
    j["r"] = chain.r;
    j["n"] = chain.n;
    j["cliques"] = chain.cliques;
    auto& se = j["shared_edges"] = nlohmann::ordered_json::array();
    for (auto e : chain.shared_edges) se.push_back({e.u, e.v});
    return j;
}

void save_chain_json(const Chain& chain, std::ostream& out) {
    out << chain_json(chain).dump(2) << '\n';
}

Chain load_chain_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("chain json: ") + e.what());
    }
    Chain c;
    try {
        c.r = j.at("r").get<int>();
        c.n = j.at("n").get<int>();
        c.cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
        for (const auto& e : j.at("shared_edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("chain json: bad edge");
            c.shared_edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("chain json: ") + e.what());
    }
    if (c.r < 3 || c.n < 1) throw std::invalid_argument("chain json: bad r or n");
    for (const auto& cl : c.cliques) {
        std::set<int> s(cl.begin(), cl.end());
        if (s.size() != cl.size()) throw std::invalid_argument("chain json: repeated vertex in clique");
        for (int v : cl)
            if (v < 0 || v >= c.n) throw std::invalid_argument("chain json: vertex out of range");
    }
    return c;
}

}  // namespace kboot
