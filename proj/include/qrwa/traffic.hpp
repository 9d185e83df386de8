#pragma once

#include "qrwa/topology.hpp"

#include <cstdint>
#include <vector>

namespace qrwa {

struct TrafficConfig {
    int total_requests = 0;
    std::uint64_t seed = 0;
    // Fraction of demands that are standalone classical channels instead of
    // full quantum requests.
    double classical_fraction = 0.0;
};

struct Request {
    NodeId s = 0;
    NodeId d = 0;
    int sequence_number = 0;
    bool classical_standalone = false;

    bool operator==(const Request&) const = default;
};

// Seeded request stream: (s, d) uniform over ordered node pairs with s != d,
// served in generation order. Same seed, same stream.
std::vector<Request> generate(const TrafficConfig& config, const Topology& topo);

}  // namespace qrwa
