#include "qrwa/report.hpp"

#include "qrwa/snr.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrwa {

namespace {

std::string real12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

struct Grid {
    std::vector<Policy> policies;  // column order = first appearance
    std::vector<int> loads;        // row order = first appearance
    // cell(load_row, policy_col) -> summary
    std::vector<const LoadSummary*> cells;

    const LoadSummary* at(std::size_t row, std::size_t col) const {
        return cells[row * policies.size() + col];
    }
};

Grid arrange(std::span<const LoadSummary> summaries) {
    Grid grid;
    for (const LoadSummary& s : summaries) {
        bool seen_policy = false;
        for (Policy p : grid.policies) seen_policy |= (p == s.policy);
        if (!seen_policy) grid.policies.push_back(s.policy);
        bool seen_load = false;
        for (int l : grid.loads) seen_load |= (l == s.load);
        if (!seen_load) grid.loads.push_back(s.load);
    }
    grid.cells.assign(grid.loads.size() * grid.policies.size(), nullptr);
    for (const LoadSummary& s : summaries) {
        std::size_t row = 0, col = 0;
        while (grid.loads[row] != s.load) ++row;
        while (grid.policies[col] != s.policy) ++col;
        grid.cells[row * grid.policies.size() + col] = &s;
    }
    for (const LoadSummary* cell : grid.cells) {
        if (!cell) {
            throw std::invalid_argument("plot data needs every (policy, load) combination");
        }
    }
    return grid;
}

}  // namespace

void write_runs_csv(std::ostream& os, std::span<const RunResult> results) {
    os << "policy,load,run,blocked,total,blocking_ratio,avg_snr_db,"
          "reason_no_q,reason_no_c,reason_new_snr,reason_degrade_snr\n";
    for (const RunResult& r : results) {
        os << to_string(r.policy) << ',' << r.load << ',' << r.run_index << ',' << r.blocked << ','
           << r.total << ',' << real12(r.blocking_ratio) << ',';
        if (r.avg_snr_linear) {
            os << real12(snr_to_db(*r.avg_snr_linear));
        }
        os << ',' << r.block_reasons[0] << ',' << r.block_reasons[1] << ',' << r.block_reasons[2]
           << ',' << r.block_reasons[3] << '\n';
    }
}

void write_aggregate_csv(std::ostream& os, std::span<const LoadSummary> summaries) {
    os << "policy,load,runs,mean_blocking_ratio,mean_avg_snr_linear,mean_avg_snr_db,"
          "snr_undefined_runs\n";
    for (const LoadSummary& s : summaries) {
        os << to_string(s.policy) << ',' << s.load << ',' << s.runs << ','
           << real12(s.mean_blocking_ratio) << ',';
        if (s.mean_avg_snr_linear) os << real12(*s.mean_avg_snr_linear);
        os << ',';
        if (s.mean_avg_snr_db) os << real12(*s.mean_avg_snr_db);
        os << ',' << s.snr_undefined_runs << '\n';
    }
}

void write_plot_data(std::ostream& os, std::span<const LoadSummary> summaries) {
    if (summaries.empty()) {
        throw std::invalid_argument("no aggregates to plot");
    }
    const Grid grid = arrange(summaries);

    os << "# mean blocking ratio by load\n# load";
    for (Policy p : grid.policies) os << ' ' << to_string(p);
    os << '\n';
    for (std::size_t row = 0; row < grid.loads.size(); ++row) {
        os << grid.loads[row];
        for (std::size_t col = 0; col < grid.policies.size(); ++col) {
            os << ' ' << real12(grid.at(row, col)->mean_blocking_ratio);
        }
        os << '\n';
    }

    os << "\n\n# mean established-QKCh SNR (dB) by load\n# load";
    for (Policy p : grid.policies) os << ' ' << to_string(p);
    os << '\n';
    for (std::size_t row = 0; row < grid.loads.size(); ++row) {
        os << grid.loads[row];
        for (std::size_t col = 0; col < grid.policies.size(); ++col) {
            const LoadSummary* s = grid.at(row, col);
            os << ' ' << (s->mean_avg_snr_db ? real12(*s->mean_avg_snr_db) : "nan");
        }
        os << '\n';
    }
}

}  // namespace qrwa
