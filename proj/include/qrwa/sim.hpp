#pragma once

#include "qrwa/rwa.hpp"
#include "qrwa/topology.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qrwa {

// Which SNR population the per-run average is taken over.
enum class SnrMetric {
    EndOfRun,  // established QKChs at end of run, against the final state
    AtAccept,  // each accepted QKCh at accept time
};

struct ScenarioConfig {
    Topology topology = Topology::make_default();
    Policy policy = Policy::SPFF;
    std::vector<int> loads;
    int runs_per_load = 1;
    std::uint64_t base_seed = 1;
    int k = 3;
    int cap = 64;
    SnrParams snr{};
    double classical_fraction = 0.0;
    bool qtd_try_all_disjoint = false;
    bool tdch_bidirectional = false;
    bool own_qkch_in_quantum_view = true;
    SnrMetric snr_metric = SnrMetric::EndOfRun;
};

struct RunResult {
    Policy policy = Policy::SPFF;
    int load = 0;
    int run_index = 0;
    int blocked = 0;
    int total = 0;
    double blocking_ratio = 0.0;
    // Mean SNR over established QKChs; empty when the run established none.
    std::optional<double> avg_snr_linear;
    std::array<int, kBlockReasonCount> block_reasons{};

    bool operator==(const RunResult&) const = default;
};

// Child seed for one run. Depends on (base_seed, load, run_index) only —
// never on the policy — so all policies consume identical request streams.
std::uint64_t derive_seed(std::uint64_t base_seed, int load, int run_index);

// One simulation: fresh topology, seeded traffic, requests served in order.
RunResult run_once(const ScenarioConfig& config, int load, int run_index);

// Every (load, run_index) combination, ordered by (load, run_index).
// Results are a pure function of the config regardless of thread count.
std::vector<RunResult> run_sweep(const ScenarioConfig& config, int threads = 1);

struct LoadSummary {
    Policy policy = Policy::SPFF;
    int load = 0;
    int runs = 0;
    double mean_blocking_ratio = 0.0;
    // Mean of the defined per-run linear averages; dB value is of that mean.
    std::optional<double> mean_avg_snr_linear;
    std::optional<double> mean_avg_snr_db;
    int snr_undefined_runs = 0;
};

// Per-(policy, load) means in first-appearance order. Runs with undefined
// SNR are excluded from the SNR mean and counted.
std::vector<LoadSummary> aggregate(std::span<const RunResult> results);

}  // namespace qrwa
