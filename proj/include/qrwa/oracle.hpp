#pragma once

#include "qrwa/lightpath.hpp"
#include "qrwa/snr.hpp"
#include "qrwa/topology.hpp"

#include <optional>
#include <span>

namespace qrwa::oracle {

// Brute-force references, coded independently of the routing/snr modules so
// the test suites can check the fast paths against them. Guarded to tiny
// instances; not meant for production routing.

inline constexpr int kMaxOracleNodes = 8;

// Every simple s->d path by plain recursive traversal, sorted by
// (length, hops, lexicographic link ids).
std::vector<Path> brute_force_paths(const Topology& topo, NodeId s, NodeId d);

// Exhaustive minimum over all simple s->d paths that still have a free
// classical wavelength of the number of links shared with the given quantum
// lightpaths. nullopt when no candidate has a free wavelength.
std::optional<int> brute_force_min_overlap(const Topology& topo, NodeId s, NodeId d,
                                           std::span<const Lightpath> established_quantum);

// Eq.-from-scratch SNR evaluation, sharing no helper code with compute_snr.
double independent_snr(const Topology& topo, const Path& quantum_path,
                       std::span<const Lightpath> lightpaths, const SnrParams& params);

}  // namespace qrwa::oracle
