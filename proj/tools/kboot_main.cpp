#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kboot/constructions.hpp"
#include "kboot/percolation.hpp"
#include "kboot/report.hpp"
#include "kboot/search.hpp"
#include "kboot/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

kboot::Graph read_graph(const std::string& in_path) {
    if (in_path.empty()) return kboot::load_edge_list(std::cin);
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
    return kboot::load_edge_list(f);
}

kboot::Chain read_chain(const std::string& in_path) {
    if (in_path.empty()) return kboot::load_chain_json(std::cin);
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
    return kboot::load_chain_json(f);
}

void set_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0) {
        if (const char* env = std::getenv("KBOOT_JOBS")) jobs = std::atoi(env);
    }
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_r graph bootstrap percolation toolkit"};
    app.require_subcommand(1);

    int jobs = 0;
    bool no_timestamp = false;
    std::string input, output;
    app.add_option("--jobs", jobs, "worker thread count (default: KBOOT_JOBS or all cores)");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from reports");

    // run
    auto* cmd_run = app.add_subcommand("run", "run the K_r process on an edge-list graph");
    int run_r = 4;
    long long max_steps = -1;
    cmd_run->add_option("--r", run_r, "clique size r")->required();
    cmd_run->add_option("--input,-i", input, "edge-list file (default: stdin)");
    cmd_run->add_option("--output,-o", output, "report file (default: stdout)");
    cmd_run->add_option("--max-steps", max_steps, "step cap (default: n(n-1)/2)");

    // construct
    auto* cmd_con = app.add_subcommand("construct", "generate an initial graph or chain");
    std::string family, emit_mode = "auto";
    int con_n = 0, con_r = 5, con_t = 1, attempts = 0;
    std::uint64_t seed = 0;
    bool seed_set = false, robust = false;
    double coeff = 0.05, eps = 0.5;
    cmd_con->add_option("--family", family, "path|k4chain|disjoint|greedy|random")
        ->required()
        ->check(CLI::IsMember({"path", "k4chain", "disjoint", "greedy", "random"}));
    cmd_con->add_option("--n", con_n, "vertex count");
    cmd_con->add_option("--r", con_r, "clique size r");
    cmd_con->add_option("--t", con_t, "chain length (disjoint) / target length (random)");
    cmd_con->add_option("--seed", seed, "RNG seed (required for random)")
        ->each([&](const std::string&) { seed_set = true; });
    cmd_con->add_option("--coeff", coeff, "greedy degree cap coefficient (default 1/20)");
    cmd_con->add_option("--attempts", attempts, "random attempts per step (default ceil(log n))");
    cmd_con->add_flag("--robust", robust, "random: enforce the count-threshold conditions");
    cmd_con->add_option("--eps", eps, "random robust mode epsilon (default 0.5)");
    cmd_con->add_option("--emit", emit_mode, "auto|edges|chain|report")
        ->check(CLI::IsMember({"auto", "edges", "chain", "report"}));
    cmd_con->add_option("--output,-o", output, "output file (default: stdout)");

    // verify-chain
    auto* cmd_ver = app.add_subcommand("verify-chain", "check validity and goodness of a chain");
    cmd_ver->add_option("--input,-i", input, "chain JSON file (default: stdin)");
    cmd_ver->add_option("--output,-o", output, "report file (default: stdout)");

    // search-max
    auto* cmd_sea = app.add_subcommand("search-max", "exact M_r(n) by exhaustive enumeration");
    int sea_n = 0, sea_r = 4;
    bool dedup = false;
    std::string format = "json", csv_path;
    cmd_sea->add_option("--n", sea_n, "vertex count")->required();
    cmd_sea->add_option("--r", sea_r, "clique size r")->required();
    cmd_sea->add_flag("--dedup", dedup, "deduplicate isomorphism classes");
    cmd_sea->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_sea->add_option("--csv", csv_path, "append a row to this CSV table");
    cmd_sea->add_option("--output,-o", output, "report file (default: stdout)");
    bool sampled = false;
    long long samples = 0;
    cmd_sea->add_flag("--sampled", sampled, "heuristic lower bound instead of exhaustive search");
    cmd_sea->add_option("--samples", samples, "random samples for --sampled");
    std::uint64_t sea_seed = 0;
    cmd_sea->add_option("--seed", sea_seed, "seed for --sampled");

    // trace-check
    auto* cmd_trc = app.add_subcommand("trace-check", "run r=4 and check the clique-growth law");
    int trc_r = 4;
    cmd_trc->add_option("--r", trc_r, "clique size r (the law is proved for r=4)");
    cmd_trc->add_option("--input,-i", input, "edge-list file (default: stdin)");
    cmd_trc->add_option("--output,-o", output, "report file (default: stdout)");

    CLI11_PARSE(app, argc, argv);
    set_jobs(jobs);

    try {
        if (*cmd_run) {
            kboot::Graph g = read_graph(input);
            kboot::RunOptions opts;
            if (max_steps >= 0) opts.max_steps = max_steps;
            auto out = kboot::run(g, run_r, opts);
            auto j = kboot::run_report(g.order(), run_r, out);
            if (!no_timestamp) j["timestamp"] = iso_timestamp();
            emit(j.dump(2) + "\n", output);
            return kExitOk;
        }

        if (*cmd_con) {
            if (family == "random" && !seed_set)
                throw std::invalid_argument("construct --family random requires --seed");
            auto emit_graph = [&](const kboot::Graph& g) {
                std::ostringstream os;
                kboot::save_edge_list(g, os);
                emit(os.str(), output);
            };
            auto emit_chain = [&](const kboot::ChainGraph& cg) {
                if (emit_mode == "edges") {
                    emit_graph(cg.graph);
                    return;
                }
                auto j = kboot::chain_json(cg.chain);
                if (emit_mode == "report" || emit_mode == "chain" || emit_mode == "auto") {
                    j["meta"] = kboot::chain_report(cg.chain, family);
                    if (!no_timestamp) j["meta"]["timestamp"] = iso_timestamp();
                }
                emit(j.dump(2) + "\n", output);
            };
            if (family == "path") {
                emit_graph(kboot::path_graph(con_n));
            } else if (family == "k4chain") {
                emit_graph(kboot::k4_chain(con_n));
            } else if (family == "disjoint") {
                emit_chain(kboot::disjoint_chain(con_r, con_t));
            } else if (family == "greedy") {
                emit_chain(kboot::greedy_chain(con_n, con_r, coeff));
            } else {  // random
                kboot::RandomChainParams p;
                p.n = con_n;
                p.r = con_r;
                p.target_T = con_t;
                p.attempts_per_step =
                    attempts > 0 ? attempts : std::max(1, (int)std::ceil(std::log(double(con_n))));
                p.seed = seed;
                p.robust = robust;
                p.eps = eps;
                auto res = kboot::random_chain(p);
                if (!res.ok()) {
                    nlohmann::ordered_json j;
                    j["schema_version"] = kboot::kSchemaVersion;
                    j["family"] = "random";
                    j["failed"] = true;
                    j["step"] = res.failure->step;
                    j["condition"] = res.failure->condition;
                    j["condition_failures"] = res.failure->condition_failures;
                    emit(j.dump(2) + "\n", output);
                    return kExitVerificationFailure;
                }
                emit_chain(*res.chain_graph);
            }
            return kExitOk;
        }

        if (*cmd_ver) {
            kboot::Chain chain = read_chain(input);
            bool valid = kboot::is_valid_chain(chain);
            nlohmann::ordered_json j;
            j["schema_version"] = kboot::kSchemaVersion;
            j["valid"] = valid;
            bool good = false;
            if (valid) {
                auto witness = kboot::find_external_krm(chain);
                good = !witness.has_value();
                j["good"] = good;
                if (witness)
                    j["witness"] = *witness;
                else
                    j["witness"] = nullptr;
                j["triangle_violations"] = kboot::count_triangle_violations(chain);
            } else {
                j["good"] = false;
            }
            if (!no_timestamp) j["timestamp"] = iso_timestamp();
            emit(j.dump(2) + "\n", output);
            return (valid && good) ? kExitOk : kExitVerificationFailure;
        }

        if (*cmd_sea) {
            auto t0 = std::chrono::steady_clock::now();
            kboot::SearchResult res = sampled
                                          ? kboot::sampled_max_time(sea_n, sea_r, samples, sea_seed)
                                          : kboot::exact_max_time(sea_n, sea_r, dedup);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!csv_path.empty()) {
                bool fresh = !std::ifstream(csv_path).good();
                std::ofstream f(csv_path, std::ios::app);
                if (!f) throw std::invalid_argument("cannot open CSV file: " + csv_path);
                if (fresh) f << "n,r,max_time,classes,wall_seconds\n";
                f << res.n << ',' << res.r << ',' << res.max_time << ',' << res.dedup_classes << ','
                  << secs << '\n';
            }
            if (format == "csv") {
                std::ostringstream os;
                os << "n,r,max_time,classes,wall_seconds\n"
                   << res.n << ',' << res.r << ',' << res.max_time << ',' << res.dedup_classes << ','
                   << secs << '\n';
                emit(os.str(), output);
            } else {
                auto j = kboot::search_report(res);
                if (!no_timestamp) j["timestamp"] = iso_timestamp();
                emit(j.dump(2) + "\n", output);
            }
            return kExitOk;
        }

        if (*cmd_trc) {
            kboot::Graph g = read_graph(input);
            auto out = kboot::run(g, trc_r, {});
            bool ok = kboot::verify_clique_growth(g, out.trace);
            nlohmann::ordered_json j;
            j["schema_version"] = kboot::kSchemaVersion;
            j["n"] = g.order();
            j["r"] = trc_r;
            j["time"] = out.result.stabilization_time;
            j["clique_growth_ok"] = ok;
            if (!no_timestamp) j["timestamp"] = iso_timestamp();
            emit(j.dump(2) + "\n", output);
            return ok ? kExitOk : kExitVerificationFailure;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
