#include "qrwa/traffic.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace qrwa {

namespace {

// Unbiased draw from [0, n) with explicit rejection sampling, so the stream
// depends only on mt19937_64 and not on the standard library's distributions.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t reject_below = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t draw = rng();
    while (draw < reject_below) {
        draw = rng();
    }
    return draw % n;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Request> generate(const TrafficConfig& config, const Topology& topo) {
    if (topo.node_count() < 2) {
        throw std::invalid_argument("traffic generation needs at least 2 nodes");
    }
    if (config.total_requests < 0) {
        throw std::invalid_argument("total_requests must be non-negative");
    }
    if (!(config.classical_fraction >= 0.0 && config.classical_fraction <= 1.0)) {
        throw std::invalid_argument("classical_fraction must be in [0, 1]");
    }
    const auto n = static_cast<std::uint64_t>(topo.node_count());
    std::mt19937_64 rng(config.seed);
    std::vector<Request> requests;
    requests.reserve(static_cast<std::size_t>(config.total_requests));
    for (int i = 0; i < config.total_requests; ++i) {
        const auto s = static_cast<NodeId>(uniform_index(rng, n));
        auto d = static_cast<NodeId>(uniform_index(rng, n - 1));
        if (d >= s) ++d;
        const bool classical = unit_real(rng) < config.classical_fraction;
        requests.push_back({s, d, i, classical});
    }
    return requests;
}

}  // namespace qrwa
