// step() vs step_serial() on random graphs and the inductive r=4 family.
// Prints per-case timings and checks the two kernels agree edge-for-edge.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "kboot/constructions.hpp"
#include "kboot/percolation.hpp"

using Clock = std::chrono::steady_clock;

static kboot::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    kboot::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::mt19937_64 rng(12345);

    struct Case {
        std::string name;
        kboot::Graph g;
        int r;
    };
    std::vector<Case> cases;
    cases.push_back({"gnp n=500 p=0.05 r=4", random_graph(500, 0.05, rng), 4});
    cases.push_back({"gnp n=500 p=0.20 r=5", random_graph(500, 0.20, rng), 5});
    cases.push_back({"gnp n=2000 p=0.01 r=4", random_graph(2000, 0.01, rng), 4});
    cases.push_back({"k4chain n=1000 r=4", kboot::k4_chain(1000), 4});
    cases.push_back({"path n=5000 r=3", kboot::path_graph(5000), 3});

    bool all_equal = true;
    std::printf("%-26s %10s %10s %8s %8s\n", "case", "par ms", "ser ms", "speedup", "edges");
    for (const auto& c : cases) {
        std::vector<kboot::EdgeId> par, ser;
        double tp = 1e300, ts = 1e300;
        for (int i = 0; i < reps; ++i) {
            auto t0 = Clock::now();
            par = kboot::step(c.g, c.r);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            if (ms < tp) tp = ms;
        }
        for (int i = 0; i < reps; ++i) {
            auto t0 = Clock::now();
            ser = kboot::step_serial(c.g, c.r);
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            if (ms < ts) ts = ms;
        }
        bool eq = par == ser;
        all_equal = all_equal && eq;
        std::printf("%-26s %10.2f %10.2f %7.2fx %8zu%s\n", c.name.c_str(), tp, ts, ts / tp,
                    par.size(), eq ? "" : "  MISMATCH");
    }
    if (!all_equal) {
        std::printf("FAIL: kernels disagree\n");
        return 1;
    }
    std::printf("kernels agree on all cases\n");
    return 0;
}
