#include "qrwa/sim.hpp"

#include "qrwa/snr.hpp"
#include "qrwa/traffic.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qrwa {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void validate(const ScenarioConfig& config) {
    if (config.loads.empty()) {
        throw std::invalid_argument("scenario needs at least one load value");
    }
    for (int load : config.loads) {
        if (load < 0) throw std::invalid_argument("loads must be non-negative");
    }
    if (config.runs_per_load < 1) {
        throw std::invalid_argument("runs_per_load must be at least 1");
    }
    if (config.k <= 0) throw std::invalid_argument("k must be positive");
    if (config.cap <= 0) throw std::invalid_argument("cap must be positive");
    const SnrParams& p = config.snr;
    if (!(p.alpha > 0.0) || !(p.p_tx > 0.0) || !(p.n_fiber > 0.0) || !(p.n_shared >= 0.0) ||
        !(p.threshold_linear > 0.0)) {
        throw std::invalid_argument("SNR parameters out of range");
    }
    if (!(config.classical_fraction >= 0.0 && config.classical_fraction <= 1.0)) {
        throw std::invalid_argument("classical_fraction must be in [0, 1]");
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, int load, int run_index) {
    // Policy is deliberately absent: paired streams across policies.
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ static_cast<std::uint64_t>(load));
    h = mix64(h ^ static_cast<std::uint64_t>(run_index));
    return h;
}

RunResult run_once(const ScenarioConfig& config, int load, int run_index) {
    validate(config);
    NetworkState net(config.topology);
    const TrafficConfig traffic{load, derive_seed(config.base_seed, load, run_index),
                                config.classical_fraction};
    const std::vector<Request> requests = generate(traffic, net.topology);

    ServeOptions options;
    options.policy = config.policy;
    options.k = config.k;
    options.cap = config.cap;
    options.snr = config.snr;
    options.qtd_try_all_disjoint = config.qtd_try_all_disjoint;
    options.tdch_bidirectional = config.tdch_bidirectional;
    options.own_qkch_in_quantum_view = config.own_qkch_in_quantum_view;

    RunResult result;
    result.policy = config.policy;
    result.load = load;
    result.run_index = run_index;
    result.total = static_cast<int>(requests.size());

    double accept_snr_sum = 0.0;
    int accept_snr_count = 0;
    for (const Request& request : requests) {
        const ServeResult outcome = serve_request(net, request, options);
        if (const auto* reason = std::get_if<BlockReason>(&outcome)) {
            ++result.blocked;
            ++result.block_reasons[static_cast<std::size_t>(*reason)];
        } else if (config.snr_metric == SnrMetric::AtAccept && !request.classical_standalone) {
            const Connection& connection = std::get<Connection>(outcome);
            accept_snr_sum +=
                compute_snr(net.topology, connection.lightpaths.front().path, net.established,
                            config.snr);
            ++accept_snr_count;
        }
    }
    result.blocking_ratio =
        result.total > 0 ? static_cast<double>(result.blocked) / result.total : 0.0;

    if (config.snr_metric == SnrMetric::EndOfRun) {
        double sum = 0.0;
        int count = 0;
        for (const Lightpath& lp : net.established) {
            if (lp.kind != LightpathKind::QKCh) continue;
            sum += compute_snr(net.topology, lp.path, net.established, config.snr);
            ++count;
        }
        if (count > 0) result.avg_snr_linear = sum / count;
    } else if (accept_snr_count > 0) {
        result.avg_snr_linear = accept_snr_sum / accept_snr_count;
    }
    return result;
}

std::vector<RunResult> run_sweep(const ScenarioConfig& config, int threads) {
    validate(config);
    const std::size_t per_load = static_cast<std::size_t>(config.runs_per_load);
    const std::size_t total = config.loads.size() * per_load;
    std::vector<RunResult> results(total);
    auto run_slot = [&](std::size_t index) {
        results[index] = run_once(config, config.loads[index / per_load],
                                  static_cast<int>(index % per_load));
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) run_slot(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            run_slot(i);
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(total));
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return results;
}

std::vector<LoadSummary> aggregate(std::span<const RunResult> results) {
    if (results.empty()) {
        throw std::invalid_argument("aggregate requires at least one result");
    }
    struct Accumulator {
        LoadSummary summary;
        double blocking_sum = 0.0;
        double snr_sum = 0.0;
        int snr_defined = 0;
    };
    std::vector<Accumulator> groups;
    for (const RunResult& r : results) {
        Accumulator* acc = nullptr;
        for (Accumulator& g : groups) {
            if (g.summary.policy == r.policy && g.summary.load == r.load) {
                acc = &g;
                break;
            }
        }
        if (!acc) {
            groups.emplace_back();
            acc = &groups.back();
            acc->summary.policy = r.policy;
            acc->summary.load = r.load;
        }
        ++acc->summary.runs;
        acc->blocking_sum += r.blocking_ratio;
        if (r.avg_snr_linear) {
            acc->snr_sum += *r.avg_snr_linear;
            ++acc->snr_defined;
        } else {
            ++acc->summary.snr_undefined_runs;
        }
    }
    std::vector<LoadSummary> out;
    out.reserve(groups.size());
    for (Accumulator& g : groups) {
        g.summary.mean_blocking_ratio = g.blocking_sum / g.summary.runs;
        if (g.snr_defined > 0) {
            g.summary.mean_avg_snr_linear = g.snr_sum / g.snr_defined;
            g.summary.mean_avg_snr_db = snr_to_db(*g.summary.mean_avg_snr_linear);
        }
        out.push_back(std::move(g.summary));
    }
    return out;
}

}  // namespace qrwa
