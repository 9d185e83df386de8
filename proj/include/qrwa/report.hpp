#pragma once

#include "qrwa/sim.hpp"

#include <iosfwd>
#include <span>

namespace qrwa {

// Reals are written with 12 significant digits so parsed values match to
// that precision; identical inputs produce byte-identical output.

// One CSV row per run: policy,load,run,blocked,total,blocking_ratio,
// avg_snr_db,reason_no_q,reason_no_c,reason_new_snr,reason_degrade_snr.
// avg_snr_db is left empty when the run established no QKCh.
void write_runs_csv(std::ostream& os, std::span<const RunResult> results);

// One CSV row per (policy, load) aggregate.
void write_aggregate_csv(std::ostream& os, std::span<const LoadSummary> summaries);

// Two whitespace-separated tables (mean blocking ratio, then mean SNR in dB):
// one row per load, one column per policy, `#` header comments, blank lines
// between the tables. Undefined SNR means print as nan.
void write_plot_data(std::ostream& os, std::span<const LoadSummary> summaries);

}  // namespace qrwa
