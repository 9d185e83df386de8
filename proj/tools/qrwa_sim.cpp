#include "qrwa/report.hpp"
#include "qrwa/sim.hpp"
#include "qrwa/snr.hpp"
#include "qrwa/topology.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_loads(const std::string& spec) {
    int start = 0, stop = 0, step = 0;
    char extra = 0;
    std::istringstream in(spec);
    char c1 = 0, c2 = 0;
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || (in >> extra)) {
        throw ConfigError("bad --loads, expected start:stop:step, got '" + spec + "'");
    }
    if (step <= 0) throw ConfigError("--loads step must be positive");
    if (start < 0) throw ConfigError("--loads start must be non-negative");
    std::vector<int> loads;
    for (int load = start; load <= stop; load += step) loads.push_back(load);
    if (loads.empty()) throw ConfigError("--loads range is empty");
    return loads;
}

std::vector<qrwa::Policy> parse_policies(const std::string& spec) {
    std::vector<qrwa::Policy> policies;
    std::istringstream in(spec);
    std::string name;
    while (std::getline(in, name, ',')) {
        auto policy = qrwa::policy_from_string(name);
        if (!policy) {
            throw ConfigError("unknown policy '" + name + "' (valid: spff, mqo, qtd)");
        }
        policies.push_back(*policy);
    }
    if (policies.empty()) throw ConfigError("--policy list is empty");
    return policies;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path.string());
    out << content;
    if (!out) throw ConfigError("failed writing output file: " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"WDM lightpath provisioning simulator for coexisting classical and quantum "
                 "channels: sweeps request loads under the spff/mqo/qtd policies and reports "
                 "blocking ratios and quantum-channel SNR"};

    std::string policy_spec = "spff,mqo,qtd";
    std::string loads_spec = "10:100:10";
    std::string topology_path;
    std::string out_dir = "results";
    int runs = 100;
    int k = 3;
    int cap = 64;
    int threads = 0;
    std::uint64_t seed = 1;
    double threshold_db = 15.0;
    qrwa::SnrParams snr;
    double classical_fraction = 0.0;
    bool qtd_try_all = false;
    bool ignore_own_qkch = false;
    bool tdch_bidir = false;
    bool physical_alpha = false;
    bool snr_at_accept = false;

    app.add_option("--policy", policy_spec, "comma-separated policies: spff,mqo,qtd");
    app.add_option("--loads", loads_spec, "request loads as start:stop:step");
    app.add_option("--runs", runs, "simulation runs per load");
    app.add_option("--seed", seed, "base seed for the traffic streams");
    app.add_option("--topology", topology_path, "topology file (default: built-in 6-node network)");
    app.add_option("--k", k, "KSP depth for quantum and SP-FF allocation");
    app.add_option("--cap", cap, "candidate-route cap for MQO/QTD");
    app.add_option("--threshold-db", threshold_db, "SNR admission threshold in dB");
    app.add_option("--alpha", snr.alpha, "fiber attenuation coefficient per km");
    app.add_option("--n-fiber", snr.n_fiber, "fixed noise term");
    app.add_option("--n-shared", snr.n_shared, "crosstalk noise per shared km per channel");
    app.add_option("--ptx", snr.p_tx, "transmitted power (normalized)");
    app.add_option("--classical-fraction", classical_fraction,
                   "fraction of demands that are standalone classical channels");
    app.add_flag("--qtd-try-all-disjoint", qtd_try_all,
                 "let QTD iterate every disjoint path instead of only the shortest");
    app.add_flag("--ignore-own-qkch", ignore_own_qkch,
                 "exclude the request's own QKCh when MQO/QTD rank candidate routes");
    app.add_flag("--tdch-bidirectional", tdch_bidir, "also establish a TDCh from d to s");
    app.add_flag("--physical-alpha", physical_alpha,
                 "treat --alpha as dB/km and convert before the exponential");
    app.add_flag("--snr-at-accept", snr_at_accept,
                 "average QKCh SNR at accept time instead of end of run");
    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    app.add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        snr.threshold_linear = qrwa::db_to_linear(threshold_db);
        snr.alpha_is_db = physical_alpha;

        qrwa::ScenarioConfig config;
        config.topology =
            topology_path.empty() ? qrwa::Topology::make_default()
                                  : qrwa::Topology::load_file(topology_path);
        config.loads = parse_loads(loads_spec);
        config.runs_per_load = runs;
        config.base_seed = seed;
        config.k = k;
        config.cap = cap;
        config.snr = snr;
        config.classical_fraction = classical_fraction;
        config.qtd_try_all_disjoint = qtd_try_all;
        config.own_qkch_in_quantum_view = !ignore_own_qkch;
        config.tdch_bidirectional = tdch_bidir;
        config.snr_metric =
            snr_at_accept ? qrwa::SnrMetric::AtAccept : qrwa::SnrMetric::EndOfRun;

        if (threads <= 0) {
            threads = static_cast<int>(std::thread::hardware_concurrency());
            if (threads <= 0) threads = 1;
        }

        std::vector<qrwa::RunResult> results;
        for (qrwa::Policy policy : parse_policies(policy_spec)) {
            config.policy = policy;
            std::vector<qrwa::RunResult> runs_for_policy = qrwa::run_sweep(config, threads);
            results.insert(results.end(), runs_for_policy.begin(), runs_for_policy.end());
        }
        const std::vector<qrwa::LoadSummary> summaries = qrwa::aggregate(results);

        std::filesystem::create_directories(out_dir);
        const std::filesystem::path out(out_dir);
        {
            std::ostringstream buf;
            qrwa::write_runs_csv(buf, results);
            write_file(out / "runs.csv", buf.str());
        }
        {
            std::ostringstream buf;
            qrwa::write_aggregate_csv(buf, summaries);
            write_file(out / "aggregate.csv", buf.str());
        }
        {
            std::ostringstream buf;
            qrwa::write_plot_data(buf, summaries);
            write_file(out / "plot.dat", buf.str());
        }

        for (const qrwa::LoadSummary& s : summaries) {
            std::cout << to_string(s.policy) << " load=" << s.load
                      << " mean_blocking=" << s.mean_blocking_ratio << " mean_snr_db=";
            if (s.mean_avg_snr_db) {
                std::cout << *s.mean_avg_snr_db;
            } else {
                std::cout << "n/a";
            }
            std::cout << '\n';
        }
        std::cout << "wrote " << (out / "runs.csv").string() << " (" << results.size()
                  << " rows), " << (out / "aggregate.csv").string() << ", "
                  << (out / "plot.dat").string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
